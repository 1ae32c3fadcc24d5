#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sna/architecture.hpp"
#include "sna/core.hpp"
#include "sna/scenario.hpp"

namespace sna {

// Outcome of the full analysis. softspots is always the intersection of
// essential and compromisable_union; softspots_reported drops elements of
// external scope (they stay in softspots for completeness).
struct AnalysisResult {
  std::set<ElementId> essential;
  std::map<ScenarioId, std::set<ElementId>> compromisable_by_scenario;
  std::set<ElementId> compromisable_union;
  std::set<ElementId> softspots;
  std::set<ElementId> softspots_reported;
  int criticality_threshold = 1;

  bool operator==(const AnalysisResult&) const = default;
};

struct ScenarioEffect {
  ScenarioId scenario;
  std::set<ElementId> compromised;
  std::set<ElementId> affected_softspots;
  std::string notes;

  bool operator==(const ScenarioEffect&) const = default;
};

struct CompromisableElements {
  std::map<ScenarioId, std::set<ElementId>> by_scenario;
  std::set<ElementId> all;
};

namespace detail {

inline void require_kind(const std::vector<Scenario>& scenarios,
                         ScenarioKind kind) {
  std::set<ScenarioId> seen;
  for (const auto& s : scenarios) {
    if (s.kind != kind) {
      throw ArgumentError("scenario '" + s.id + "' is not a " +
                          scenario_kind_name(kind) + " scenario");
    }
    if (!seen.insert(s.id).second) {
      throw ArgumentError("duplicate scenario id '" + s.id + "'");
    }
  }
}

}  // namespace detail

// Elements that must stay available to deliver essential services and
// preserve essential assets: the union of every usage trace at or above
// the criticality threshold, plus each tagged asset and its custodians.
inline std::set<ElementId> essential_elements(
    const Architecture& arch, const std::vector<Scenario>& usage,
    const std::vector<EssentialAssetTag>& tags, int threshold) {
  if (threshold < 1) {
    throw ArgumentError("criticality threshold must be >= 1, got " +
                        std::to_string(threshold));
  }
  detail::require_kind(usage, ScenarioKind::usage);

  std::set<ElementId> essential;
  for (const auto& s : usage) {
    if (s.criticality < threshold) continue;
    auto touched = resolve_trace(arch, s);
    essential.insert(touched.begin(), touched.end());
  }
  for (const auto& tag : tags) {
    auto keepers = custodians(arch, tag.asset);  // throws on unknown asset
    essential.insert(tag.asset);
    essential.insert(keepers.begin(), keepers.end());
  }
  return essential;
}

// Elements reachable and damageable by each intrusion scenario, per
// scenario and as a union.
inline CompromisableElements compromisable_elements(
    const Architecture& arch, const std::vector<Scenario>& intrusions) {
  detail::require_kind(intrusions, ScenarioKind::intrusion);

  CompromisableElements result;
  for (const auto& s : intrusions) {
    auto touched = resolve_trace(arch, s);
    result.all.insert(touched.begin(), touched.end());
    result.by_scenario.emplace(s.id, std::move(touched));
  }
  return result;
}

// Full pipeline: essential set, compromisable sets, and their
// intersection (the softspots).
inline AnalysisResult softspots(const Architecture& arch,
                                const std::vector<Scenario>& usage,
                                const std::vector<EssentialAssetTag>& tags,
                                const std::vector<Scenario>& intrusions,
                                int threshold) {
  AnalysisResult result;
  result.criticality_threshold = threshold;
  result.essential = essential_elements(arch, usage, tags, threshold);
  auto compromisable = compromisable_elements(arch, intrusions);
  result.compromisable_by_scenario = std::move(compromisable.by_scenario);
  result.compromisable_union = std::move(compromisable.all);

  std::set_intersection(
      result.essential.begin(), result.essential.end(),
      result.compromisable_union.begin(), result.compromisable_union.end(),
      std::inserter(result.softspots, result.softspots.end()));

  for (const auto& element : result.softspots) {
    const Component* c = arch.find_component(element);
    if (c != nullptr && c->scope == Scope::external) continue;
    result.softspots_reported.insert(element);
  }
  return result;
}

// Per-scenario vulnerability finding: which softspots this intrusion
// reaches.
inline ScenarioEffect scenario_effects(const Architecture& arch,
                                       const Scenario& intrusion,
                                       const AnalysisResult& result) {
  if (intrusion.kind != ScenarioKind::intrusion) {
    throw ArgumentError("scenario '" + intrusion.id +
                        "' is not an intrusion scenario");
  }
  auto diags = validate_scenario(arch, intrusion, TraceCheckMode::lax);
  if (has_errors(diags)) {
    throw ValidationError("scenario '" + intrusion.id + "' fails validation",
                          diags);
  }
  auto it = result.compromisable_by_scenario.find(intrusion.id);
  if (it == result.compromisable_by_scenario.end()) {
    throw LookupError("scenario '" + intrusion.id +
                      "' is not part of the analysis result");
  }

  ScenarioEffect effect;
  effect.scenario = intrusion.id;
  effect.compromised = it->second;
  std::set_intersection(
      it->second.begin(), it->second.end(), result.softspots.begin(),
      result.softspots.end(),
      std::inserter(effect.affected_softspots, effect.affected_softspots.end()));
  return effect;
}

}  // namespace sna

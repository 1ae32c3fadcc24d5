#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sna/architecture.hpp"
#include "sna/core.hpp"
#include "sna/modifications.hpp"
#include "sna/scenario.hpp"
#include "sna/survivability_map.hpp"

namespace sna {

enum class CoverageStatus { covered, partially_covered, uncovered };

inline const char* coverage_status_name(CoverageStatus s) {
  switch (s) {
    case CoverageStatus::covered: return "covered";
    case CoverageStatus::partially_covered: return "partially_covered";
    case CoverageStatus::uncovered: return "uncovered";
  }
  return "uncovered";
}

// Post-modification check result. mods_not_applied lists declared
// structural modifications whose payload is absent from the modified
// architecture, plus any refs the map cites without a declaration.
struct CoverageReport {
  std::map<ScenarioId, CoverageStatus> scenario_status;
  std::set<ModRef> mods_not_applied;

  bool all_covered() const {
    for (const auto& [scenario, status] : scenario_status) {
      if (status != CoverageStatus::covered) return false;
    }
    return true;
  }
};

namespace detail {

// A structural modification counts as applied when the modified
// architecture contains its payload verbatim (for add_asset_property: the
// asset carries the property). Procedural modifications are always
// considered applied; their effect is not visible in the topology.
inline bool modification_applied(const Architecture& modified,
                                 const Modification& m) {
  switch (m.kind) {
    case ModificationKind::add_component:
    case ModificationKind::alter_component: {
      const auto& payload = std::get<Component>(m.payload);
      const Component* c = modified.find_component(payload.id);
      return c != nullptr && *c == payload;
    }
    case ModificationKind::add_connector: {
      const auto& payload = std::get<Connector>(m.payload);
      for (const auto& k : modified.connectors) {
        if (k == payload) return true;
      }
      return false;
    }
    case ModificationKind::add_asset_property: {
      const auto& payload = std::get<AssetPropertyAddition>(m.payload);
      const Asset* a = modified.find_asset(payload.asset);
      return a != nullptr && a->properties_required.count(payload.property) != 0;
    }
    case ModificationKind::procedural:
      return true;
  }
  return false;
}

}  // namespace detail

// For each intrusion scenario: covered when at least one recommended
// described strategy has all of its cited modifications applied,
// partially_covered when described strategies exist but none is fully
// applied, uncovered when the row has no described recommendation.
//
// Refs cited by the map but missing from the declared list are treated as
// not applied (and reported), so a map can be checked against a trimmed
// modification set.
inline CoverageReport verify_mitigation_coverage(
    const Architecture& modified, const SurvivabilityMap& map,
    const std::vector<Scenario>& intrusions,
    const std::vector<Modification>& mods) {
  auto diags = detail::validate_map_impl(map, &intrusions, nullptr);
  if (has_errors(diags)) {
    throw ValidationError("survivability map fails validation", diags);
  }
  auto mod_diags = validate_modifications(mods);
  if (has_errors(mod_diags)) {
    throw ModificationError("invalid modification set: " +
                            format_diagnostic(mod_diags.front()));
  }

  CoverageReport report;
  std::set<ModRef> applied;
  for (const auto& m : mods) {
    if (detail::modification_applied(modified, m)) {
      applied.insert(m.ref);
    } else {
      report.mods_not_applied.insert(m.ref);
    }
  }

  for (const auto& [scenario, row] : map.rows) {
    bool any_described = false;
    bool fully_applied = false;
    for (Pillar p : kPillars) {
      const Strategy& recommended = row.cell(p).recommended;
      if (recommended.kind != StrategyKind::described) continue;
      any_described = true;
      bool all_refs_applied = true;
      for (ModRef ref : recommended.mod_refs) {
        if (applied.count(ref) == 0) {
          all_refs_applied = false;
          report.mods_not_applied.insert(ref);
        }
      }
      if (all_refs_applied) fully_applied = true;
    }
    CoverageStatus status = CoverageStatus::uncovered;
    if (fully_applied) {
      status = CoverageStatus::covered;
    } else if (any_described) {
      status = CoverageStatus::partially_covered;
    }
    report.scenario_status.emplace(scenario, status);
  }
  return report;
}

}  // namespace sna

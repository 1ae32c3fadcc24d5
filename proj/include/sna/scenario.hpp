#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sna/architecture.hpp"
#include "sna/core.hpp"

namespace sna {

enum class TraceAction { invoke, read, write, traverse };

enum class ScenarioKind { usage, intrusion };

inline const char* trace_action_name(TraceAction a) {
  switch (a) {
    case TraceAction::invoke: return "invoke";
    case TraceAction::read: return "read";
    case TraceAction::write: return "write";
    case TraceAction::traverse: return "traverse";
  }
  return "invoke";
}

inline std::optional<TraceAction> trace_action_from_name(
    const std::string& s) {
  if (s == "invoke") return TraceAction::invoke;
  if (s == "read") return TraceAction::read;
  if (s == "write") return TraceAction::write;
  if (s == "traverse") return TraceAction::traverse;
  return std::nullopt;
}

inline const char* scenario_kind_name(ScenarioKind k) {
  return k == ScenarioKind::usage ? "usage" : "intrusion";
}

inline std::optional<ScenarioKind> scenario_kind_from_name(
    const std::string& s) {
  if (s == "usage") return ScenarioKind::usage;
  if (s == "intrusion") return ScenarioKind::intrusion;
  return std::nullopt;
}

struct TraceStep {
  ElementId element;
  TraceAction action = TraceAction::invoke;

  bool operator==(const TraceStep&) const = default;
};

// One usage or intrusion scenario with its execution trace over the
// architecture. Usage scenarios carry a criticality level (0 means
// non-essential); intrusion scenarios carry attack type labels and may
// declare a blanket effect on all software components instead of (or in
// addition to) an explicit trace.
struct Scenario {
  ScenarioId id;
  ScenarioKind kind = ScenarioKind::usage;
  std::string title;
  std::string narrative;
  std::string actor;
  std::vector<TraceStep> trace;
  int criticality = 0;
  std::set<std::string> attack_types;
  bool affects_all_components = false;

  bool operator==(const Scenario&) const = default;
};

struct EssentialAssetTag {
  AssetId asset;
  std::string rationale;

  bool operator==(const EssentialAssetTag&) const = default;
};

enum class TraceCheckMode { lax, strict };

// Trace semantics:
//   lax    - every trace element must exist in the architecture.
//   strict - additionally, consecutive component steps (assets interleave
//            freely) must follow a declared connector, and a read/write
//            step on an asset must be immediately preceded by a step on
//            one of its custodian components. A component repeated in
//            adjacent steps needs no connector.
inline std::vector<Diagnostic> validate_scenario(const Architecture& arch,
                                                 const Scenario& s,
                                                 TraceCheckMode mode) {
  std::vector<Diagnostic> diags;
  const std::string base = "scenarios[" + (s.id.empty() ? "?" : s.id) + "]";
  auto error = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::error, std::move(path), std::move(message)});
  };

  if (!valid_id(s.id)) {
    error(base, "invalid scenario id '" + s.id + "'");
  }
  if (s.criticality < 0) {
    error(base, "criticality must be >= 0");
  }
  if (s.kind == ScenarioKind::usage) {
    if (!s.attack_types.empty()) {
      error(base, "usage scenario must not declare attack types");
    }
    if (s.affects_all_components) {
      error(base, "usage scenario must not set affects_all_components");
    }
  } else {
    if (s.criticality != 0) {
      error(base, "intrusion scenario must have criticality 0");
    }
  }

  const ComponentId* previous_component = nullptr;
  const TraceStep* previous_step = nullptr;
  for (std::size_t i = 0; i < s.trace.size(); ++i) {
    const TraceStep& step = s.trace[i];
    const std::string path = base + ".trace[" + std::to_string(i) + "]";
    const Component* component = arch.find_component(step.element);
    const Asset* asset = arch.find_asset(step.element);
    if (component == nullptr && asset == nullptr) {
      error(path, "trace step references unknown element '" + step.element +
                      "'");
      previous_step = &step;
      continue;
    }

    if (mode == TraceCheckMode::strict) {
      if (component != nullptr) {
        if (previous_component != nullptr && *previous_component != component->id &&
            !arch.has_connector(*previous_component, component->id)) {
          error(path, "no connector from '" + *previous_component + "' to '" +
                          component->id + "'");
        }
        previous_component = &component->id;
      } else if (step.action == TraceAction::read ||
                 step.action == TraceAction::write) {
        const Component* before =
            previous_step != nullptr ? arch.find_component(previous_step->element)
                                     : nullptr;
        if (before == nullptr || asset->custodians.count(before->id) == 0) {
          error(path, std::string(trace_action_name(step.action)) +
                          " step on asset '" + asset->id +
                          "' is not immediately preceded by a custodian "
                          "component step");
        }
      }
    } else if (component != nullptr) {
      previous_component = &component->id;
    }
    previous_step = &step;
  }

  return diags;
}

// The set of distinct elements the scenario touches. A blanket intrusion
// (affects_all_components) additionally pulls in every component tagged
// "software".
inline std::set<ElementId> resolve_trace(const Architecture& arch,
                                         const Scenario& s) {
  auto diags = validate_scenario(arch, s, TraceCheckMode::lax);
  if (has_errors(diags)) {
    throw ValidationError("scenario '" + s.id + "' fails validation", diags);
  }
  std::set<ElementId> elements;
  for (const auto& step : s.trace) elements.insert(step.element);
  if (s.affects_all_components) {
    for (const auto& c : arch.components) {
      if (c.tags.count("software") != 0) elements.insert(c.id);
    }
  }
  return elements;
}

}  // namespace sna

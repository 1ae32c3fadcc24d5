#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sna/core.hpp"
#include "sna/modifications.hpp"
#include "sna/scenario.hpp"

namespace sna {

enum class Pillar { resistance, recognition, recovery };

enum class StrategySide { current, recommended };

enum class StrategyKind { described, none };

enum class StrategyCategory { software, procedural, hardware };

inline const char* pillar_name(Pillar p) {
  switch (p) {
    case Pillar::resistance: return "resistance";
    case Pillar::recognition: return "recognition";
    case Pillar::recovery: return "recovery";
  }
  return "resistance";
}

inline std::optional<Pillar> pillar_from_name(const std::string& s) {
  if (s == "resistance") return Pillar::resistance;
  if (s == "recognition") return Pillar::recognition;
  if (s == "recovery") return Pillar::recovery;
  return std::nullopt;
}

inline const char* strategy_side_name(StrategySide s) {
  return s == StrategySide::current ? "current" : "recommended";
}

inline const char* strategy_kind_name(StrategyKind k) {
  return k == StrategyKind::described ? "described" : "none";
}

inline std::optional<StrategyKind> strategy_kind_from_name(
    const std::string& s) {
  if (s == "described") return StrategyKind::described;
  if (s == "none") return StrategyKind::none;
  return std::nullopt;
}

inline const char* strategy_category_name(StrategyCategory c) {
  switch (c) {
    case StrategyCategory::software: return "software";
    case StrategyCategory::procedural: return "procedural";
    case StrategyCategory::hardware: return "hardware";
  }
  return "software";
}

inline std::optional<StrategyCategory> strategy_category_from_name(
    const std::string& s) {
  if (s == "software") return StrategyCategory::software;
  if (s == "procedural") return StrategyCategory::procedural;
  if (s == "hardware") return StrategyCategory::hardware;
  return std::nullopt;
}

// kind=described carries the strategy text; kind=none may carry a caveat
// note explaining why no strategy exists (a "None, except ..." cell).
// mod_refs tie a recommended strategy to declared modifications; current
// strategies never cite them.
struct Strategy {
  StrategyKind kind = StrategyKind::none;
  std::string text;
  std::optional<StrategyCategory> category;
  std::set<ModRef> mod_refs;

  bool operator==(const Strategy&) const = default;
};

struct MapCell {
  Pillar pillar = Pillar::resistance;
  Strategy current;
  Strategy recommended;

  bool operator==(const MapCell&) const = default;
};

struct MapRow {
  MapCell resistance{Pillar::resistance, {}, {}};
  MapCell recognition{Pillar::recognition, {}, {}};
  MapCell recovery{Pillar::recovery, {}, {}};

  bool operator==(const MapRow&) const = default;

  const MapCell& cell(Pillar p) const {
    switch (p) {
      case Pillar::resistance: return resistance;
      case Pillar::recognition: return recognition;
      case Pillar::recovery: return recovery;
    }
    return resistance;
  }

  MapCell& cell(Pillar p) {
    switch (p) {
      case Pillar::resistance: return resistance;
      case Pillar::recognition: return recognition;
      case Pillar::recovery: return recovery;
    }
    return resistance;
  }
};

inline constexpr Pillar kPillars[] = {Pillar::resistance, Pillar::recognition,
                                      Pillar::recovery};

// Intrusion scenario rows x {resistance, recognition, recovery}, each cell
// holding a current and a recommended strategy.
struct SurvivabilityMap {
  std::map<ScenarioId, MapRow> rows;

  bool operator==(const SurvivabilityMap&) const = default;
};

struct MapGap {
  ScenarioId scenario;
  Pillar pillar = Pillar::resistance;
  StrategySide side = StrategySide::current;
  std::string note;

  bool operator==(const MapGap&) const = default;
};

struct CoverageMatrix {
  std::map<ModRef, std::set<ScenarioId>> entries;
  std::set<ModRef> unreferenced_mods;
  std::set<ScenarioId> unmitigated_scenarios;

  bool operator==(const CoverageMatrix&) const = default;
};

// One row per intrusion scenario, all six strategy slots set to none.
inline SurvivabilityMap build_map_skeleton(
    const std::vector<Scenario>& intrusions) {
  SurvivabilityMap map;
  for (const auto& s : intrusions) {
    if (s.kind != ScenarioKind::intrusion) {
      throw ArgumentError("scenario '" + s.id + "' is not an intrusion scenario");
    }
    if (map.rows.count(s.id) != 0) {
      throw ArgumentError("duplicate scenario id '" + s.id + "'");
    }
    map.rows.emplace(s.id, MapRow{});
  }
  return map;
}

namespace detail {

// Shared validation core. intrusions/mods are optional contexts: callers
// without a scenario list (gap_report) or a declared-mod list skip those
// checks.
inline std::vector<Diagnostic> validate_map_impl(
    const SurvivabilityMap& map, const std::vector<Scenario>* intrusions,
    const std::vector<Modification>* mods) {
  std::vector<Diagnostic> diags;
  auto error = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::error, std::move(path), std::move(message)});
  };
  auto warning = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::warning, std::move(path), std::move(message)});
  };

  std::set<ModRef> declared;
  if (mods != nullptr) {
    for (const auto& m : *mods) declared.insert(m.ref);
  }

  for (const auto& [scenario, row] : map.rows) {
    const std::string base = "map.rows[" + scenario + "]";
    if (!valid_id(scenario)) {
      error(base, "invalid scenario id '" + scenario + "'");
    }
    for (Pillar p : kPillars) {
      const MapCell& cell = row.cell(p);
      const std::string cell_path = base + "." + pillar_name(p);
      if (cell.pillar != p) {
        error(cell_path, std::string("cell pillar tag is '") +
                             pillar_name(cell.pillar) + "', expected '" +
                             pillar_name(p) + "'");
      }
      for (StrategySide side : {StrategySide::current, StrategySide::recommended}) {
        const Strategy& strategy =
            side == StrategySide::current ? cell.current : cell.recommended;
        const std::string path =
            cell_path + "." + strategy_side_name(side);
        if (strategy.kind == StrategyKind::described && strategy.text.empty()) {
          error(path, "described strategy has empty text");
        }
        if (strategy.kind == StrategyKind::none && !strategy.mod_refs.empty()) {
          error(path, "strategy of kind none must not cite modifications");
        }
        if (side == StrategySide::current && !strategy.mod_refs.empty()) {
          error(path, "current strategies must not cite modifications");
        }
        if (side == StrategySide::recommended && mods != nullptr) {
          for (ModRef ref : strategy.mod_refs) {
            if (declared.count(ref) == 0) {
              error(path, "recommended strategy cites undeclared modification "
                          "{" + std::to_string(ref) + "}");
            }
          }
        }
        if (side == StrategySide::recommended &&
            strategy.kind == StrategyKind::none && strategy.text.empty()) {
          warning(path, "recommended strategy is none without a caveat note");
        }
      }
    }
  }

  if (intrusions != nullptr) {
    std::set<ScenarioId> declared_scenarios;
    for (const auto& s : *intrusions) {
      if (s.kind != ScenarioKind::intrusion) continue;
      if (!declared_scenarios.insert(s.id).second) {
        error("scenarios[" + s.id + "]", "duplicate intrusion scenario id");
      }
    }
    for (const auto& [scenario, row] : map.rows) {
      if (declared_scenarios.count(scenario) == 0) {
        error("map.rows[" + scenario + "]",
              "map row has no matching intrusion scenario");
      }
    }
    for (const auto& s : *intrusions) {
      if (s.kind != ScenarioKind::intrusion) continue;
      if (map.rows.count(s.id) == 0) {
        error("map.rows[" + s.id + "]",
              "intrusion scenario '" + s.id + "' has no map row");
      }
    }
  }

  return diags;
}

inline void reject_invalid_map(const SurvivabilityMap& map,
                               const std::vector<Modification>* mods) {
  auto diags = validate_map_impl(map, nullptr, mods);
  if (has_errors(diags)) {
    throw ValidationError("survivability map fails validation", diags);
  }
}

}  // namespace detail

// Errors: rows without a matching intrusion scenario (and vice versa),
// malformed cells, recommended strategies citing undeclared modifications.
// Warnings: a recommended none without caveat text.
inline std::vector<Diagnostic> validate_map(
    const SurvivabilityMap& map, const std::vector<Scenario>& intrusions,
    const std::vector<Modification>& mods) {
  return detail::validate_map_impl(map, &intrusions, &mods);
}

// One gap per strategy slot of kind none, on either side, ordered by
// scenario, pillar, then side. The gap note carries the slot's caveat
// text, if any.
inline std::vector<MapGap> gap_report(const SurvivabilityMap& map) {
  detail::reject_invalid_map(map, nullptr);

  std::vector<MapGap> gaps;
  for (const auto& [scenario, row] : map.rows) {
    for (Pillar p : kPillars) {
      const MapCell& cell = row.cell(p);
      if (cell.current.kind == StrategyKind::none) {
        gaps.push_back({scenario, p, StrategySide::current, cell.current.text});
      }
      if (cell.recommended.kind == StrategyKind::none) {
        gaps.push_back(
            {scenario, p, StrategySide::recommended, cell.recommended.text});
      }
    }
  }
  return gaps;
}

// Which declared modifications address which scenarios, plus the declared
// modifications never cited and the scenarios with no described
// recommendation at all.
inline CoverageMatrix coverage_matrix(const SurvivabilityMap& map,
                                      const std::vector<Modification>& mods) {
  detail::reject_invalid_map(map, &mods);

  CoverageMatrix matrix;
  std::set<ModRef> cited;
  for (const auto& [scenario, row] : map.rows) {
    bool mitigated = false;
    for (Pillar p : kPillars) {
      const Strategy& recommended = row.cell(p).recommended;
      if (recommended.kind == StrategyKind::described) mitigated = true;
      for (ModRef ref : recommended.mod_refs) {
        matrix.entries[ref].insert(scenario);
        cited.insert(ref);
      }
    }
    if (!mitigated) matrix.unmitigated_scenarios.insert(scenario);
  }
  for (const auto& m : mods) {
    if (cited.count(m.ref) == 0) matrix.unreferenced_mods.insert(m.ref);
  }
  return matrix;
}

}  // namespace sna

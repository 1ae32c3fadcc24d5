#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sna/analysis.hpp"
#include "sna/core.hpp"
#include "sna/coverage.hpp"
#include "sna/modifications.hpp"
#include "sna/scenario.hpp"
#include "sna/survivability_map.hpp"

namespace sna {

enum class RequirementCategory { top_level, software, procedural, hardware };

inline const char* requirement_category_name(RequirementCategory c) {
  switch (c) {
    case RequirementCategory::top_level: return "top_level";
    case RequirementCategory::software: return "software";
    case RequirementCategory::procedural: return "procedural";
    case RequirementCategory::hardware: return "hardware";
  }
  return "top_level";
}

// Position of the map cell a requirement was derived from. Top-level
// statements are synthesized from the map as a whole and carry no source
// cell.
struct CellRef {
  ScenarioId scenario;
  Pillar pillar = Pillar::resistance;
  StrategySide side = StrategySide::recommended;

  bool operator==(const CellRef&) const = default;
};

// A derived requirement sentence. parameters maps placeholder names to
// their provided values; an unset value means the statement still shows
// the placeholder mark (xx / yy).
struct RequirementStatement {
  std::string id;
  RequirementCategory category = RequirementCategory::top_level;
  std::string text;
  std::optional<CellRef> source;
  std::map<std::string, std::optional<std::string>> parameters;

  bool operator==(const RequirementStatement&) const = default;
};

namespace detail {

inline std::string strategy_cell_text(const char* side_label,
                                      const Strategy& strategy) {
  std::string out = std::string(side_label) + ": ";
  if (strategy.kind == StrategyKind::none) {
    out += "None.";
    if (!strategy.text.empty()) out += " " + strategy.text;
    return out;
  }
  out += strategy.text;
  for (ModRef ref : strategy.mod_refs) {
    out += " {" + std::to_string(ref) + "}";
  }
  return out;
}

inline std::string mod_ref_list(const std::set<ModRef>& refs) {
  std::vector<std::string> parts;
  for (ModRef ref : refs) parts.push_back("{" + std::to_string(ref) + "}");
  return parts.empty() ? "(none)" : join(parts, ", ");
}

inline std::string id_list(const std::set<std::string>& ids) {
  return ids.empty() ? "(none)" : join(ids, ", ");
}

}  // namespace detail

struct MapRenderOptions {
  bool include_gaps = true;
  bool include_coverage = true;
};

inline std::string render_gap_section(const std::vector<MapGap>& gaps) {
  std::string out = "## Gaps\n\n";
  if (gaps.empty()) {
    out += "No gaps.\n";
    return out;
  }
  for (const auto& gap : gaps) {
    out += "- " + gap.scenario + " / " + pillar_name(gap.pillar) + " / " +
           strategy_side_name(gap.side) + ": None.";
    if (!gap.note.empty()) out += " (" + gap.note + ")";
    out += "\n";
  }
  return out;
}

inline std::string render_coverage_section(
    const CoverageMatrix& matrix, const std::vector<Modification>& mods) {
  std::string out = "## Recommendation Coverage\n\n";
  out += "| Modification | Addresses Scenarios |\n";
  out += "| --- | --- |\n";
  for (const auto& [ref, scenarios] : matrix.entries) {
    std::string title;
    for (const auto& m : mods) {
      if (m.ref == ref) {
        title = m.title;
        break;
      }
    }
    out += "| {" + std::to_string(ref) + "}" + (title.empty() ? "" : " " + title) +
           " | " + join(scenarios, ", ") + " |\n";
  }
  out += "\n";
  out += "Unreferenced modifications: " +
         detail::mod_ref_list(matrix.unreferenced_mods) + "\n";
  out += "Unmitigated scenarios: " +
         detail::id_list(matrix.unmitigated_scenarios) + "\n";
  return out;
}

// Four-column pipe table in the shape of the map template: one scenario
// per row group, a Current line and a Recommended line per pillar, with
// modification references rendered as {n}. When an analysis result is
// given, each row group also names the softspots the scenario reaches.
inline std::string render_map(const SurvivabilityMap& map,
                              const std::vector<Scenario>& intrusions,
                              const std::vector<Modification>& mods,
                              const AnalysisResult* result = nullptr,
                              const MapRenderOptions& options = {}) {
  auto diags = validate_map(map, intrusions, mods);
  if (has_errors(diags)) {
    throw ValidationError("survivability map fails validation", diags);
  }

  std::string out = "# Survivability Map\n\n";
  out +=
      "| Intrusion Scenario | Resistance Strategy | Recognition Strategy | "
      "Recovery Strategy |\n";
  out += "| --- | --- | --- | --- |\n";
  for (const auto& [scenario, row] : map.rows) {
    std::string title;
    for (const auto& s : intrusions) {
      if (s.id == scenario) {
        title = s.title;
        break;
      }
    }
    std::string first_cell = scenario + (title.empty() ? "" : ": " + title);
    std::string second_cell;
    if (result != nullptr) {
      auto it = result->compromisable_by_scenario.find(scenario);
      if (it != result->compromisable_by_scenario.end()) {
        std::set<ElementId> affected;
        std::set_intersection(it->second.begin(), it->second.end(),
                              result->softspots_reported.begin(),
                              result->softspots_reported.end(),
                              std::inserter(affected, affected.end()));
        second_cell = "affects softspots: " + detail::id_list(affected);
      }
    }
    out += "| " + first_cell;
    for (Pillar p : kPillars) {
      out += " | " + detail::strategy_cell_text("Current", row.cell(p).current);
    }
    out += " |\n";
    out += "| " + second_cell;
    for (Pillar p : kPillars) {
      out += " | " +
             detail::strategy_cell_text("Recommended", row.cell(p).recommended);
    }
    out += " |\n";
  }

  if (options.include_gaps) {
    out += "\n" + render_gap_section(gap_report(map));
  }
  if (options.include_coverage) {
    out += "\n" + render_coverage_section(coverage_matrix(map, mods), mods);
  }
  return out;
}

// Top-level availability and integrity statements first, then one
// statement per described recommended strategy, grouped software /
// procedural / hardware. Unset parameters keep the xx / yy placeholder
// marks. A described strategy without a category is treated
// as a software requirement.
inline std::vector<RequirementStatement> derive_requirements(
    const SurvivabilityMap& map, const std::vector<Modification>& mods,
    const std::map<std::string, std::string>& params = {}) {
  detail::reject_invalid_map(map, &mods);

  std::vector<RequirementStatement> statements;

  auto param_value = [&params](const char* key) -> std::optional<std::string> {
    auto it = params.find(key);
    if (it == params.end()) return std::nullopt;
    return it->second;
  };

  const auto nominal = param_value("nominal_view_seconds");
  const auto recovery = param_value("recovery_view_seconds");
  RequirementStatement availability;
  availability.id = "top-1";
  availability.category = RequirementCategory::top_level;
  availability.text =
      "The essential data shall be viewable within " +
      nominal.value_or("xx") +
      " seconds of request under nominal conditions, and within " +
      recovery.value_or("yy") + " seconds of request during recovery.";
  availability.parameters["nominal_view_seconds"] = nominal;
  availability.parameters["recovery_view_seconds"] = recovery;
  statements.push_back(std::move(availability));

  std::set<ScenarioId> scenarios;
  for (const auto& [scenario, row] : map.rows) scenarios.insert(scenario);
  RequirementStatement integrity;
  integrity.id = "top-2";
  integrity.category = RequirementCategory::top_level;
  integrity.text =
      "Resistance and recognition techniques shall be used to protect the "
      "integrity of the essential data under intrusion scenarios " +
      (scenarios.empty() ? std::string("(none)") : join(scenarios, ", ")) +
      ".";
  statements.push_back(std::move(integrity));

  struct Derived {
    RequirementCategory category;
    CellRef source;
    std::string text;
  };
  std::vector<Derived> derived;
  for (const auto& [scenario, row] : map.rows) {
    for (Pillar p : kPillars) {
      const Strategy& recommended = row.cell(p).recommended;
      if (recommended.kind != StrategyKind::described) continue;
      RequirementCategory category = RequirementCategory::software;
      if (recommended.category) {
        switch (*recommended.category) {
          case StrategyCategory::software:
            category = RequirementCategory::software;
            break;
          case StrategyCategory::procedural:
            category = RequirementCategory::procedural;
            break;
          case StrategyCategory::hardware:
            category = RequirementCategory::hardware;
            break;
        }
      }
      derived.push_back(
          {category, {scenario, p, StrategySide::recommended}, recommended.text});
    }
  }

  for (RequirementCategory category :
       {RequirementCategory::software, RequirementCategory::procedural,
        RequirementCategory::hardware}) {
    const char* prefix = category == RequirementCategory::software    ? "sw"
                         : category == RequirementCategory::procedural ? "proc"
                                                                       : "hw";
    int counter = 0;
    for (const auto& d : derived) {
      if (d.category != category) continue;
      RequirementStatement statement;
      statement.id = std::string(prefix) + "-" + std::to_string(++counter);
      statement.category = category;
      statement.text = d.text;
      statement.source = d.source;
      statements.push_back(std::move(statement));
    }
  }
  return statements;
}

inline std::string render_requirements(
    const std::vector<RequirementStatement>& statements) {
  std::string out = "# Derived Requirements\n";
  RequirementCategory current = RequirementCategory::top_level;
  bool first_section = true;
  auto section_title = [](RequirementCategory c) {
    switch (c) {
      case RequirementCategory::top_level: return "Top-level";
      case RequirementCategory::software: return "Software";
      case RequirementCategory::procedural: return "Procedural";
      case RequirementCategory::hardware: return "Hardware";
    }
    return "Top-level";
  };
  for (const auto& s : statements) {
    if (first_section || s.category != current) {
      out += "\n## " + std::string(section_title(s.category)) + "\n\n";
      current = s.category;
      first_section = false;
    }
    out += "- [" + s.id + "]";
    if (s.source) {
      out += " (" + s.source->scenario + " / " + pillar_name(s.source->pillar) +
             " / " + strategy_side_name(s.source->side) + ")";
    }
    out += " " + s.text + "\n";
  }
  return out;
}

inline std::string render_analysis(const AnalysisResult& result) {
  auto set_line = [](const std::string& label, const std::set<ElementId>& set) {
    return label + " (" + std::to_string(set.size()) +
           "): " + (set.empty() ? "(none)" : join(set, ", ")) + "\n";
  };
  std::string out = "# Survivability Analysis\n\n";
  out += "criticality threshold: " +
         std::to_string(result.criticality_threshold) + "\n\n";
  out += set_line("essential", result.essential);
  out += "compromisable by scenario:\n";
  for (const auto& [scenario, elements] : result.compromisable_by_scenario) {
    out += "  " + set_line(scenario, elements);
  }
  out += set_line("compromisable union", result.compromisable_union);
  out += set_line("softspots", result.softspots);
  out += set_line("softspots reported", result.softspots_reported);
  return out;
}

inline nlohmann::json analysis_to_json(const AnalysisResult& result) {
  nlohmann::json j;
  j["criticality_threshold"] = result.criticality_threshold;
  j["essential"] = result.essential;
  j["compromisable_by_scenario"] = nlohmann::json::object();
  for (const auto& [scenario, elements] : result.compromisable_by_scenario) {
    j["compromisable_by_scenario"][scenario] = elements;
  }
  j["compromisable_union"] = result.compromisable_union;
  j["softspots"] = result.softspots;
  j["softspots_reported"] = result.softspots_reported;
  return j;
}

inline std::string render_coverage_report(const CoverageReport& report) {
  std::string out = "# Mitigation Coverage\n\n";
  for (const auto& [scenario, status] : report.scenario_status) {
    out += "- " + scenario + ": " + coverage_status_name(status) + "\n";
  }
  out += "\n";
  out += "modifications not applied: " +
         detail::mod_ref_list(report.mods_not_applied) + "\n";
  std::size_t not_covered = 0;
  for (const auto& [scenario, status] : report.scenario_status) {
    if (status != CoverageStatus::covered) ++not_covered;
  }
  out += not_covered == 0
             ? "result: all scenarios covered\n"
             : "result: " + std::to_string(not_covered) +
                   " scenario(s) not fully covered\n";
  return out;
}

}  // namespace sna

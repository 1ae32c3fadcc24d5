#include <catch2/catch.hpp>

#include "sna/graph_export.hpp"
#include "sna/report.hpp"
#include "support/corpus.hpp"

using namespace sna;

namespace {

std::size_t count_occurrences(const std::string& haystack,
                              const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

AnalysisResult corpus_analysis() {
  const auto& model = test_support::sentinel_model();
  return softspots(model.architecture, model.usage_scenarios(),
                   model.essential_assets, model.intrusion_scenarios(), 1);
}

}  // namespace

TEST_CASE("graph export draws components as boxes and assets as ellipses") {
  const auto& model = test_support::sentinel_model();
  auto dot = export_graph(model.architecture);
  CHECK(dot.find("digraph \"sentinel\"") == 0);
  CHECK(count_occurrences(dot, "shape=box") == 9);
  CHECK(count_occurrences(dot, "shape=ellipse") == 3);
  CHECK(count_occurrences(dot, " -> ") ==
        model.architecture.connectors.size() + 4);  // plus custodian links
  CHECK(dot.find("\"user_interface\" [shape=box, label=\"User Interface\", "
                 "style=\"dashed\"]") != std::string::npos);
  CHECK(export_graph(model.architecture) == dot);
}

TEST_CASE("graph export marks reported softspots") {
  const auto& model = test_support::sentinel_model();
  auto result = corpus_analysis();
  auto dot = export_graph(model.architecture, &result);
  CHECK(dot.find("\"reporting_engine\" [shape=box, label=\"Reporting "
                 "Engine\", style=\"filled\", fillcolor=\"salmon\"]") !=
        std::string::npos);
  // External softspots stay dashed and unfilled in the report view.
  CHECK(dot.find("\"user_interface\" [shape=box, label=\"User Interface\", "
                 "style=\"dashed\"]") != std::string::npos);
}

TEST_CASE("empty architecture still renders a digraph") {
  Architecture arch;
  auto dot = export_graph(arch);
  CHECK(dot.find("digraph \"architecture\"") == 0);
  CHECK(dot.back() == '\n');
}

TEST_CASE("map rendering matches the template layout") {
  const auto& model = test_support::sentinel_model();
  auto result = corpus_analysis();
  auto text = render_map(*model.map, model.intrusion_scenarios(),
                         model.modifications, &result);

  CHECK(text.find("| Intrusion Scenario | Resistance Strategy | Recognition "
                  "Strategy | Recovery Strategy |") != std::string::npos);
  CHECK(text.find("Current: Two passwords are required for TP access.") !=
        std::string::npos);
  CHECK(text.find("{1}") != std::string::npos);
  CHECK(text.find("Recommended: None. Easy to detect this one.") !=
        std::string::npos);
  CHECK(text.find("## Gaps") != std::string::npos);
  CHECK(text.find("- ius2 / recognition / current: None.") !=
        std::string::npos);
  CHECK(text.find("## Recommendation Coverage") != std::string::npos);
  CHECK(text.find("affects softspots: database, treatment_plan") !=
        std::string::npos);

  CHECK(render_map(*model.map, model.intrusion_scenarios(),
                   model.modifications, &result) == text);

  MapRenderOptions bare;
  bare.include_gaps = false;
  bare.include_coverage = false;
  auto table_only = render_map(*model.map, model.intrusion_scenarios(),
                               model.modifications, nullptr, bare);
  CHECK(table_only.find("## Gaps") == std::string::npos);
  CHECK(table_only.find("## Recommendation Coverage") == std::string::npos);
}

TEST_CASE("skeleton map renders None everywhere") {
  auto intrusions = test_support::sentinel_model().intrusion_scenarios();
  auto skeleton = build_map_skeleton(intrusions);
  auto text = render_map(skeleton, intrusions, {});
  CHECK(count_occurrences(text, "Current: None.") == 15);
  CHECK(count_occurrences(text, "Recommended: None.") == 15);
}

TEST_CASE("map rendering rejects invalid maps") {
  auto intrusions = test_support::sentinel_model().intrusion_scenarios();
  auto map = build_map_skeleton(intrusions);
  map.rows.erase("ius5");
  CHECK_THROWS_AS(render_map(map, intrusions, {}), ValidationError);
}

TEST_CASE("requirements derivation covers every category on the corpus") {
  const auto& model = test_support::sentinel_model();
  auto statements = derive_requirements(*model.map, model.modifications);

  int top = 0, software = 0, procedural = 0, hardware = 0;
  for (const auto& s : statements) {
    switch (s.category) {
      case RequirementCategory::top_level: ++top; break;
      case RequirementCategory::software: ++software; break;
      case RequirementCategory::procedural: ++procedural; break;
      case RequirementCategory::hardware: ++hardware; break;
    }
  }
  CHECK(top == 2);
  CHECK(software >= 1);
  CHECK(procedural >= 1);
  CHECK(hardware >= 1);

  // One statement per described recommended strategy: 14 in the corpus.
  CHECK(statements.size() == static_cast<std::size_t>(top) + 14);

  CHECK(statements[0].id == "top-1");
  CHECK(statements[0].text.find("xx seconds") != std::string::npos);
  CHECK(statements[0].text.find("yy seconds") != std::string::npos);
  REQUIRE(statements[0].parameters.count("nominal_view_seconds") == 1);
  CHECK_FALSE(statements[0].parameters.at("nominal_view_seconds").has_value());
  CHECK(statements[1].text.find("ius1, ius2, ius3, ius4, ius5") !=
        std::string::npos);

  bool backup_procedural = false;
  for (const auto& s : statements) {
    if (s.category == RequirementCategory::procedural &&
        s.text.find("backup") != std::string::npos) {
      backup_procedural = true;
    }
    if (s.category != RequirementCategory::top_level) {
      REQUIRE(s.source.has_value());
      CHECK(model.map->rows.count(s.source->scenario) == 1);
    }
  }
  CHECK(backup_procedural);
}

TEST_CASE("provided parameters replace the placeholders") {
  const auto& model = test_support::sentinel_model();
  auto statements =
      derive_requirements(*model.map, model.modifications,
                          {{"nominal_view_seconds", "5"},
                           {"recovery_view_seconds", "120"}});
  CHECK(statements[0].text.find("within 5 seconds") != std::string::npos);
  CHECK(statements[0].text.find("within 120 seconds") != std::string::npos);
  CHECK(statements[0].text.find("xx") == std::string::npos);
  REQUIRE(statements[0].parameters.at("nominal_view_seconds").has_value());
  CHECK(*statements[0].parameters.at("nominal_view_seconds") == "5");
}

TEST_CASE("a map with no described recommendations yields only top-level") {
  auto intrusions = test_support::sentinel_model().intrusion_scenarios();
  auto skeleton = build_map_skeleton(intrusions);
  auto statements = derive_requirements(skeleton, {});
  REQUIRE(statements.size() == 2);
  CHECK(statements[0].category == RequirementCategory::top_level);
  CHECK(statements[1].category == RequirementCategory::top_level);
}

TEST_CASE("requirement rendering is grouped and deterministic") {
  const auto& model = test_support::sentinel_model();
  auto statements = derive_requirements(*model.map, model.modifications);
  auto text = render_requirements(statements);
  CHECK(text.find("## Top-level") != std::string::npos);
  CHECK(text.find("## Software") != std::string::npos);
  CHECK(text.find("## Procedural") != std::string::npos);
  CHECK(text.find("## Hardware") != std::string::npos);
  CHECK(text.find("[sw-1]") != std::string::npos);
  CHECK(render_requirements(statements) == text);
}

TEST_CASE("analysis rendering is stable and complete") {
  auto result = corpus_analysis();
  auto text = render_analysis(result);
  CHECK(text.find("criticality threshold: 1") != std::string::npos);
  CHECK(text.find("essential (5)") != std::string::npos);
  CHECK(text.find("softspots reported (4)") != std::string::npos);
  CHECK(render_analysis(result) == text);

  auto j = analysis_to_json(result);
  CHECK(j["essential"].size() == 5);
  CHECK(j["softspots_reported"].size() == 4);
  CHECK(j["compromisable_by_scenario"].size() == 5);
}

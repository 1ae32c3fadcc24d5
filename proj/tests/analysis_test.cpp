#include <catch2/catch.hpp>

#include "sna/analysis.hpp"
#include "support/corpus.hpp"

using namespace sna;

namespace {

struct Corpus {
  const ModelFile& model = test_support::sentinel_model();
  std::vector<Scenario> usage = model.usage_scenarios();
  std::vector<Scenario> intrusions = model.intrusion_scenarios();
};

const std::set<ElementId> kExpectedEssential = {
    "api", "database", "reporting_engine", "treatment_plan", "user_interface"};

}  // namespace

TEST_CASE("sentinel essential elements at threshold 1") {
  Corpus corpus;
  auto essential = essential_elements(corpus.model.architecture, corpus.usage,
                                      corpus.model.essential_assets, 1);
  CHECK(essential == kExpectedEssential);
  CHECK(essential.count("reporting_engine") == 1);
  CHECK(essential.count("database") == 1);
}

TEST_CASE("raising the threshold leaves only tagged assets and custodians") {
  Corpus corpus;
  auto essential = essential_elements(corpus.model.architecture, corpus.usage,
                                      corpus.model.essential_assets, 2);
  CHECK(essential == std::set<ElementId>{"database", "treatment_plan"});
}

TEST_CASE("no usage scenarios and no tags yields an empty essential set") {
  Corpus corpus;
  CHECK(essential_elements(corpus.model.architecture, {}, {}, 1).empty());
}

TEST_CASE("essential_elements argument checks") {
  Corpus corpus;
  CHECK_THROWS_AS(essential_elements(corpus.model.architecture, corpus.usage,
                                     corpus.model.essential_assets, 0),
                  ArgumentError);
  CHECK_THROWS_AS(essential_elements(corpus.model.architecture,
                                     corpus.intrusions,
                                     corpus.model.essential_assets, 1),
                  ArgumentError);
  CHECK_THROWS_AS(
      essential_elements(corpus.model.architecture, {}, {{"ghost", ""}}, 1),
      LookupError);
}

TEST_CASE("sentinel compromisable elements") {
  Corpus corpus;
  auto compromisable =
      compromisable_elements(corpus.model.architecture, corpus.intrusions);

  CHECK(compromisable.by_scenario.at("ius1") ==
        std::set<ElementId>{"database", "treatment_plan"});
  CHECK(compromisable.by_scenario.at("ius5").size() == 9);

  // Union: every software component plus the treatment plans.
  std::set<ElementId> expected_union;
  for (const auto& c : corpus.model.architecture.components) {
    expected_union.insert(c.id);
  }
  expected_union.insert("treatment_plan");
  CHECK(compromisable.all == expected_union);
}

TEST_CASE("compromisable_elements argument checks") {
  Corpus corpus;
  auto empty = compromisable_elements(corpus.model.architecture, {});
  CHECK(empty.by_scenario.empty());
  CHECK(empty.all.empty());

  CHECK_THROWS_AS(
      compromisable_elements(corpus.model.architecture, corpus.usage),
      ArgumentError);
}

TEST_CASE("sentinel softspots") {
  Corpus corpus;
  auto result = softspots(corpus.model.architecture, corpus.usage,
                          corpus.model.essential_assets, corpus.intrusions, 1);

  CHECK(result.softspots == kExpectedEssential);
  CHECK(result.softspots_reported ==
        std::set<ElementId>{"api", "database", "reporting_engine",
                            "treatment_plan"});

  for (const auto& element : result.softspots) {
    CHECK(result.essential.count(element) == 1);
    CHECK(result.compromisable_union.count(element) == 1);
  }
  for (const auto& element : result.softspots_reported) {
    CHECK(result.softspots.count(element) == 1);
  }
}

TEST_CASE("disjoint usage and intrusion traces produce no softspots") {
  Architecture arch;
  arch.components.push_back({"a", "", "", Scope::internal, {}});
  arch.components.push_back({"b", "", "", Scope::internal, {}});
  arch.connectors.push_back({"a_b", "a", "b", ConnectorKind::call, ""});

  Scenario use;
  use.id = "u0";
  use.kind = ScenarioKind::usage;
  use.criticality = 1;
  use.trace = {{"a", TraceAction::invoke}};
  Scenario attack;
  attack.id = "i0";
  attack.kind = ScenarioKind::intrusion;
  attack.trace = {{"b", TraceAction::invoke}};

  auto result = softspots(arch, {use}, {}, {attack}, 1);
  CHECK(result.softspots.empty());
  CHECK(result.softspots_reported.empty());
}

TEST_CASE("scenario_effects intersects with the softspots") {
  Corpus corpus;
  auto result = softspots(corpus.model.architecture, corpus.usage,
                          corpus.model.essential_assets, corpus.intrusions, 1);

  const Scenario* ius4 = nullptr;
  for (const auto& s : corpus.intrusions) {
    if (s.id == "ius4") ius4 = &s;
  }
  REQUIRE(ius4 != nullptr);

  auto effect = scenario_effects(corpus.model.architecture, *ius4, result);
  CHECK(effect.compromised == result.compromisable_by_scenario.at("ius4"));
  CHECK(effect.affected_softspots.count("treatment_plan") == 1);
  for (const auto& element : effect.affected_softspots) {
    CHECK(effect.compromised.count(element) == 1);
  }
}

TEST_CASE("scenario_effects with an empty compromised set") {
  Architecture arch;
  arch.components.push_back({"a", "", "", Scope::internal, {}});

  Scenario attack;
  attack.id = "i0";
  attack.kind = ScenarioKind::intrusion;

  auto result = softspots(arch, {}, {}, {attack}, 1);
  auto effect = scenario_effects(arch, attack, result);
  CHECK(effect.compromised.empty());
  CHECK(effect.affected_softspots.empty());
}

TEST_CASE("scenario_effects rejects scenarios outside the result") {
  Corpus corpus;
  auto result = softspots(corpus.model.architecture, corpus.usage,
                          corpus.model.essential_assets, corpus.intrusions, 1);

  Scenario stranger;
  stranger.id = "ius9";
  stranger.kind = ScenarioKind::intrusion;
  CHECK_THROWS_AS(
      scenario_effects(corpus.model.architecture, stranger, result),
      LookupError);
}

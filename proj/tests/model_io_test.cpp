#include <catch2/catch.hpp>

#include <random>

#include "sna/model_io.hpp"
#include "support/corpus.hpp"
#include "support/random_models.hpp"

using namespace sna;

namespace {

// Small hand-rolled documents for the failure paths.
const char* kMinimalTemplate = R"({
  "schema_version": "1",
  "architecture": {
    "id": "t",
    "components": [ { "id": "a" }, { "id": "b" } ],
    "connectors": [ { "id": "a_b", "from": "a", "to": "b" } ],
    "assets": [ { "id": "data", "custodians": ["a"] } ]
  }
})";

std::string corpus_bytes() {
  return test_support::read_file(test_support::corpus_path("sentinel.json"));
}

}  // namespace

TEST_CASE("corpus model parses with the expected inventory") {
  const auto& model = test_support::sentinel_model();
  CHECK(model.schema_version == "1");
  CHECK(model.architecture.components.size() == 9);
  CHECK(model.usage_scenarios().size() == 6);
  CHECK(model.intrusion_scenarios().size() == 5);
  CHECK(model.essential_assets.size() == 1);
  CHECK(model.map.has_value());
  CHECK(model.modifications.size() == 6);
}

TEST_CASE("minimal model file parses") {
  auto model = parse_model(
      test_support::read_file(test_support::corpus_path("minimal.json")));
  CHECK(model.architecture.components.size() == 1);
  CHECK(model.scenarios.empty());
  CHECK_FALSE(model.map.has_value());
}

TEST_CASE("round-trip is the identity on the corpus") {
  auto first = parse_model(corpus_bytes());
  auto bytes = serialize_model(first);
  auto second = parse_model(bytes);
  CHECK(second == first);
  CHECK(serialize_model(first) == bytes);  // byte-deterministic
  CHECK(serialize_model(second) == bytes);
}

TEST_CASE("round-trip holds for models without scenarios") {
  auto model = parse_model(
      test_support::read_file(test_support::corpus_path("minimal.json")));
  CHECK(parse_model(serialize_model(model)) == model);
}

TEST_CASE("round-trip holds on random model files") {
  std::mt19937 rng(424242);
  for (int i = 0; i < 50; ++i) {
    auto file = test_support::make_random_model_file(rng);
    auto bytes = serialize_model(file);
    auto reparsed = parse_model(bytes);
    CHECK(serialize_model(reparsed) == bytes);
    CHECK(parse_model(serialize_model(reparsed)) == reparsed);
  }
}

TEST_CASE("ids are normalized to lowercase while parsing") {
  std::string text = R"({
    "schema_version": "1",
    "architecture": {
      "id": "T",
      "components": [ { "id": "API" }, { "id": "Db" } ],
      "connectors": [ { "id": "API_DB", "from": "API", "to": "DB" } ],
      "assets": [ { "id": "Plans", "custodians": ["DB"] } ]
    }
  })";
  auto model = parse_model(text);
  CHECK(model.architecture.find_component("api") != nullptr);
  CHECK(model.architecture.find_component("db") != nullptr);
  CHECK(model.architecture.connectors[0].from == "api");
  CHECK(model.architecture.find_asset("plans") != nullptr);
}

TEST_CASE("duplicate ids after normalization fail validation") {
  std::string text = R"({
    "schema_version": "1",
    "architecture": {
      "components": [ { "id": "API" }, { "id": "api" } ]
    }
  })";
  CHECK_THROWS_AS(parse_model(text), ValidationError);
}

TEST_CASE("syntax errors carry a line position") {
  try {
    parse_model("{ \"schema_version\": \"1\",\n  broken }");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("schema violations are parse errors") {
  SECTION("unknown schema_version") {
    CHECK_THROWS_AS(
        parse_model(R"({ "schema_version": "9", "architecture": {} })"),
        ParseError);
  }
  SECTION("missing schema_version") {
    CHECK_THROWS_AS(parse_model(R"({ "architecture": {} })"), ParseError);
  }
  SECTION("missing architecture") {
    CHECK_THROWS_AS(parse_model(R"({ "schema_version": "1" })"), ParseError);
  }
  SECTION("unknown top-level key") {
    CHECK_THROWS_AS(
        parse_model(
            R"({ "schema_version": "1", "architecture": {}, "extra": 1 })"),
        ParseError);
  }
  SECTION("wrong type") {
    CHECK_THROWS_AS(
        parse_model(R"({ "schema_version": "1", "architecture": [] })"),
        ParseError);
  }
  SECTION("metadata values must be strings") {
    CHECK_THROWS_AS(parse_model(R"({ "schema_version": "1",
                                     "architecture": {},
                                     "metadata": { "k": 1 } })"),
                    ParseError);
  }
  SECTION("procedural modification with payload") {
    CHECK_THROWS_AS(parse_model(R"({ "schema_version": "1",
        "architecture": {},
        "modifications": [
          { "ref": 1, "kind": "procedural", "payload": { "id": "x" } }
        ] })"),
                    ParseError);
  }
}

TEST_CASE("parse is fail-closed over every module validator") {
  using nlohmann::json;
  json base = json::parse(kMinimalTemplate);

  SECTION("dangling connector") {
    base["architecture"]["connectors"][0]["to"] = "ghost";
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("usage scenario with attack types") {
    base["scenarios"] = json::array(
        {{{"id", "u1"}, {"kind", "usage"}, {"attack_types", {"spoofing"}}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("intrusion scenario with criticality") {
    base["scenarios"] =
        json::array({{{"id", "i1"}, {"kind", "intrusion"}, {"criticality", 2}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("duplicate scenario ids") {
    base["scenarios"] = json::array({{{"id", "s1"}, {"kind", "usage"}},
                                     {{"id", "s1"}, {"kind", "usage"}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("trace step on an unknown element") {
    base["scenarios"] = json::array(
        {{{"id", "u1"},
          {"kind", "usage"},
          {"trace", json::array({{{"element", "ghost"}}})}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("essential asset tag naming a missing asset") {
    base["essential_assets"] = json::array({{{"asset", "ghost"}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("map row without a declared scenario") {
    json cell = {{"current", {{"kind", "none"}}},
                 {"recommended", {{"kind", "none"}}}};
    base["map"] = {{"rows",
                    {{"ghost",
                      {{"resistance", cell},
                       {"recognition", cell},
                       {"recovery", cell}}}}}};
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("map citing an undeclared modification") {
    base["scenarios"] = json::array({{{"id", "i1"}, {"kind", "intrusion"}}});
    json cell = {{"current", {{"kind", "none"}}},
                 {"recommended",
                  {{"kind", "described"},
                   {"text", "Fix it"},
                   {"mod_refs", {4}}}}};
    base["map"] = {{"rows",
                    {{"i1",
                      {{"resistance", cell},
                       {"recognition", {{"current", {{"kind", "none"}}}}},
                       {"recovery", {{"current", {{"kind", "none"}}}}}}}}}};
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
  SECTION("modification altering a missing component") {
    base["modifications"] = json::array(
        {{{"ref", 1}, {"kind", "alter_component"}, {"payload", {{"id", "ghost"}}}}});
    CHECK_THROWS_AS(parse_model(base.dump()), ValidationError);
  }
}

TEST_CASE("a model written after apply parses back for verification") {
  auto model = test_support::sentinel_model();
  auto applied = apply_modifications(model.architecture, model.modifications);
  model.architecture = applied.architecture;
  // The declared catalog stays in the file even though {1} and {6} now
  // exist in the architecture.
  auto reparsed = parse_model(serialize_model(model));
  CHECK(reparsed.architecture.find_component("security_layer") != nullptr);
  CHECK(reparsed.modifications.size() == 6);
}

TEST_CASE("warnings are surfaced without failing the parse") {
  std::string text = R"({
    "schema_version": "1",
    "architecture": { "components": [ { "id": "solo" } ] }
  })";
  std::vector<Diagnostic> warnings;
  auto model = parse_model(text, &warnings);
  CHECK(model.architecture.components.size() == 1);
  REQUIRE_FALSE(warnings.empty());
  CHECK(warnings[0].severity == Severity::warning);
}

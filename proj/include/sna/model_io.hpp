#pragma once

#include <algorithm>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sna/analysis.hpp"
#include "sna/architecture.hpp"
#include "sna/core.hpp"
#include "sna/coverage.hpp"
#include "sna/modifications.hpp"
#include "sna/scenario.hpp"
#include "sna/survivability_map.hpp"

namespace sna {

inline constexpr const char* kSchemaVersion = "1";

// One model document: architecture, scenarios, essential-asset tags, an
// optional survivability map, declared modifications, and free-form
// metadata. parse_model/serialize_model read and write its canonical JSON
// form.
struct ModelFile {
  std::string schema_version = kSchemaVersion;
  Architecture architecture;
  std::vector<Scenario> scenarios;
  std::vector<EssentialAssetTag> essential_assets;
  std::optional<SurvivabilityMap> map;
  std::vector<Modification> modifications;
  std::map<std::string, std::string> metadata;

  bool operator==(const ModelFile&) const = default;

  std::vector<Scenario> usage_scenarios() const {
    std::vector<Scenario> out;
    for (const auto& s : scenarios) {
      if (s.kind == ScenarioKind::usage) out.push_back(s);
    }
    return out;
  }

  std::vector<Scenario> intrusion_scenarios() const {
    std::vector<Scenario> out;
    for (const auto& s : scenarios) {
      if (s.kind == ScenarioKind::intrusion) out.push_back(s);
    }
    return out;
  }
};

namespace detail {

using nlohmann::json;

[[noreturn]] inline void parse_fail(const std::string& path,
                                    const std::string& message) {
  throw ParseError(path + ": " + message);
}

inline void require_known_keys(const json& obj, const std::string& path,
                               std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) parse_fail(path, "unknown key '" + it.key() + "'");
  }
}

inline const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) parse_fail(path, "expected an object");
  return j;
}

inline const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) parse_fail(path, "expected an array");
  return j;
}

inline std::string require_string(const json& obj, const char* key,
                                  const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing key '") + key + "'");
  if (!it->is_string()) parse_fail(path + "." + key, "expected a string");
  return it->get<std::string>();
}

inline std::string optional_string(const json& obj, const char* key,
                                   const std::string& path,
                                   const std::string& fallback = "") {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_string()) parse_fail(path + "." + key, "expected a string");
  return it->get<std::string>();
}

inline int optional_int(const json& obj, const char* key,
                        const std::string& path, int fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) {
    parse_fail(path + "." + key, "expected an integer");
  }
  return it->get<int>();
}

inline int require_int(const json& obj, const char* key,
                       const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing key '") + key + "'");
  if (!it->is_number_integer()) {
    parse_fail(path + "." + key, "expected an integer");
  }
  return it->get<int>();
}

inline bool optional_bool(const json& obj, const char* key,
                          const std::string& path, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) parse_fail(path + "." + key, "expected a boolean");
  return it->get<bool>();
}

inline std::set<std::string> optional_string_set(const json& obj,
                                                 const char* key,
                                                 const std::string& path,
                                                 bool lowercase_ids) {
  std::set<std::string> out;
  auto it = obj.find(key);
  if (it == obj.end()) return out;
  require_array(*it, path + "." + key);
  for (const auto& entry : *it) {
    if (!entry.is_string()) {
      parse_fail(path + "." + key, "expected an array of strings");
    }
    auto value = entry.get<std::string>();
    out.insert(lowercase_ids ? lowercased(value) : value);
  }
  return out;
}

inline Component decode_component(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"id", "name", "description", "scope", "tags"});
  Component c;
  c.id = lowercased(require_string(j, "id", path));
  c.name = optional_string(j, "name", path);
  c.description = optional_string(j, "description", path);
  const std::string scope = optional_string(j, "scope", path, "internal");
  auto parsed_scope = scope_from_name(scope);
  if (!parsed_scope) parse_fail(path + ".scope", "unknown scope '" + scope + "'");
  c.scope = *parsed_scope;
  c.tags = optional_string_set(j, "tags", path, /*lowercase_ids=*/false);
  return c;
}

inline Connector decode_connector(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"id", "from", "to", "kind", "description"});
  Connector k;
  k.id = lowercased(require_string(j, "id", path));
  k.from = lowercased(require_string(j, "from", path));
  k.to = lowercased(require_string(j, "to", path));
  const std::string kind = optional_string(j, "kind", path, "call");
  auto parsed_kind = connector_kind_from_name(kind);
  if (!parsed_kind) {
    parse_fail(path + ".kind", "unknown connector kind '" + kind + "'");
  }
  k.kind = *parsed_kind;
  k.description = optional_string(j, "description", path);
  return k;
}

inline Asset decode_asset(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path,
                     {"id", "name", "custodians", "properties_required"});
  Asset a;
  a.id = lowercased(require_string(j, "id", path));
  a.name = optional_string(j, "name", path);
  a.custodians = optional_string_set(j, "custodians", path, true);
  for (const auto& name :
       optional_string_set(j, "properties_required", path, false)) {
    auto property = asset_property_from_name(name);
    if (!property) {
      parse_fail(path + ".properties_required",
                 "unknown property '" + name + "'");
    }
    a.properties_required.insert(*property);
  }
  return a;
}

inline Architecture decode_architecture(const json& j,
                                        const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"id", "components", "connectors", "assets"});
  Architecture arch;
  arch.id = lowercased(optional_string(j, "id", path));
  if (auto it = j.find("components"); it != j.end()) {
    require_array(*it, path + ".components");
    for (std::size_t i = 0; i < it->size(); ++i) {
      arch.components.push_back(decode_component(
          (*it)[i], path + ".components[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = j.find("connectors"); it != j.end()) {
    require_array(*it, path + ".connectors");
    for (std::size_t i = 0; i < it->size(); ++i) {
      arch.connectors.push_back(decode_connector(
          (*it)[i], path + ".connectors[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = j.find("assets"); it != j.end()) {
    require_array(*it, path + ".assets");
    for (std::size_t i = 0; i < it->size(); ++i) {
      arch.assets.push_back(
          decode_asset((*it)[i], path + ".assets[" + std::to_string(i) + "]"));
    }
  }
  return arch;
}

inline Scenario decode_scenario(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path,
                     {"id", "kind", "title", "narrative", "actor", "trace",
                      "criticality", "attack_types", "affects_all_components"});
  Scenario s;
  s.id = lowercased(require_string(j, "id", path));
  const std::string kind = require_string(j, "kind", path);
  auto parsed_kind = scenario_kind_from_name(kind);
  if (!parsed_kind) parse_fail(path + ".kind", "unknown kind '" + kind + "'");
  s.kind = *parsed_kind;
  s.title = optional_string(j, "title", path);
  s.narrative = optional_string(j, "narrative", path);
  s.actor = optional_string(j, "actor", path);
  s.criticality = optional_int(j, "criticality", path, 0);
  s.attack_types = optional_string_set(j, "attack_types", path, false);
  s.affects_all_components =
      optional_bool(j, "affects_all_components", path, false);
  if (auto it = j.find("trace"); it != j.end()) {
    require_array(*it, path + ".trace");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string step_path = path + ".trace[" + std::to_string(i) + "]";
      const json& step = (*it)[i];
      require_object(step, step_path);
      require_known_keys(step, step_path, {"element", "action"});
      TraceStep decoded;
      decoded.element = lowercased(require_string(step, "element", step_path));
      const std::string action =
          optional_string(step, "action", step_path, "invoke");
      auto parsed_action = trace_action_from_name(action);
      if (!parsed_action) {
        parse_fail(step_path + ".action", "unknown action '" + action + "'");
      }
      decoded.action = *parsed_action;
      s.trace.push_back(decoded);
    }
  }
  return s;
}

inline Strategy decode_strategy(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"kind", "text", "category", "mod_refs"});
  Strategy strategy;
  const std::string kind = require_string(j, "kind", path);
  auto parsed_kind = strategy_kind_from_name(kind);
  if (!parsed_kind) {
    parse_fail(path + ".kind", "unknown strategy kind '" + kind + "'");
  }
  strategy.kind = *parsed_kind;
  strategy.text = optional_string(j, "text", path);
  if (auto it = j.find("category"); it != j.end()) {
    if (!it->is_string()) parse_fail(path + ".category", "expected a string");
    auto category = strategy_category_from_name(it->get<std::string>());
    if (!category) {
      parse_fail(path + ".category",
                 "unknown category '" + it->get<std::string>() + "'");
    }
    strategy.category = *category;
  }
  if (auto it = j.find("mod_refs"); it != j.end()) {
    require_array(*it, path + ".mod_refs");
    for (const auto& entry : *it) {
      if (!entry.is_number_integer()) {
        parse_fail(path + ".mod_refs", "expected an array of integers");
      }
      strategy.mod_refs.insert(entry.get<int>());
    }
  }
  return strategy;
}

inline MapCell decode_map_cell(const json& j, Pillar pillar,
                               const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"current", "recommended"});
  MapCell cell;
  cell.pillar = pillar;
  if (auto it = j.find("current"); it != j.end()) {
    cell.current = decode_strategy(*it, path + ".current");
  }
  if (auto it = j.find("recommended"); it != j.end()) {
    cell.recommended = decode_strategy(*it, path + ".recommended");
  }
  return cell;
}

inline SurvivabilityMap decode_map(const json& j, const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"rows"});
  SurvivabilityMap map;
  auto rows = j.find("rows");
  if (rows == j.end()) return map;
  require_object(*rows, path + ".rows");
  for (auto it = rows->begin(); it != rows->end(); ++it) {
    const std::string scenario = lowercased(it.key());
    const std::string row_path = path + ".rows[" + scenario + "]";
    require_object(*it, row_path);
    require_known_keys(*it, row_path, {"resistance", "recognition", "recovery"});
    MapRow row;
    for (Pillar p : kPillars) {
      auto cell = it->find(pillar_name(p));
      if (cell == it->end()) {
        parse_fail(row_path, std::string("missing pillar '") + pillar_name(p) +
                                 "'");
      }
      row.cell(p) = decode_map_cell(*cell, p, row_path + "." + pillar_name(p));
    }
    if (map.rows.count(scenario) != 0) {
      parse_fail(row_path, "duplicate map row for scenario '" + scenario + "'");
    }
    map.rows.emplace(scenario, row);
  }
  return map;
}

inline Modification decode_modification(const json& j,
                                        const std::string& path) {
  require_object(j, path);
  require_known_keys(j, path, {"ref", "title", "kind", "payload", "description"});
  Modification m;
  m.ref = require_int(j, "ref", path);
  m.title = optional_string(j, "title", path);
  m.description = optional_string(j, "description", path);
  const std::string kind = require_string(j, "kind", path);
  auto parsed_kind = modification_kind_from_name(kind);
  if (!parsed_kind) {
    parse_fail(path + ".kind", "unknown modification kind '" + kind + "'");
  }
  m.kind = *parsed_kind;

  auto payload = j.find("payload");
  if (m.kind == ModificationKind::procedural) {
    if (payload != j.end()) {
      parse_fail(path + ".payload",
                 "procedural modifications carry no payload");
    }
    m.payload = std::monostate{};
    return m;
  }
  if (payload == j.end()) {
    parse_fail(path, "missing key 'payload'");
  }
  const std::string payload_path = path + ".payload";
  switch (m.kind) {
    case ModificationKind::add_component:
    case ModificationKind::alter_component:
      m.payload = decode_component(*payload, payload_path);
      break;
    case ModificationKind::add_connector:
      m.payload = decode_connector(*payload, payload_path);
      break;
    case ModificationKind::add_asset_property: {
      require_object(*payload, payload_path);
      require_known_keys(*payload, payload_path, {"asset", "property"});
      AssetPropertyAddition addition;
      addition.asset = lowercased(require_string(*payload, "asset", payload_path));
      const std::string property =
          require_string(*payload, "property", payload_path);
      auto parsed_property = asset_property_from_name(property);
      if (!parsed_property) {
        parse_fail(payload_path + ".property",
                   "unknown property '" + property + "'");
      }
      addition.property = *parsed_property;
      m.payload = addition;
      break;
    }
    default:
      break;
  }
  return m;
}

// --- encoders ------------------------------------------------------------

inline json encode_component(const Component& c) {
  json j;
  j["id"] = c.id;
  j["name"] = c.name;
  j["description"] = c.description;
  j["scope"] = scope_name(c.scope);
  j["tags"] = c.tags;
  return j;
}

inline json encode_connector(const Connector& k) {
  json j;
  j["id"] = k.id;
  j["from"] = k.from;
  j["to"] = k.to;
  j["kind"] = connector_kind_name(k.kind);
  j["description"] = k.description;
  return j;
}

inline json encode_asset(const Asset& a) {
  json j;
  j["id"] = a.id;
  j["name"] = a.name;
  j["custodians"] = a.custodians;
  std::set<std::string> properties;
  for (AssetProperty p : a.properties_required) {
    properties.insert(asset_property_name(p));
  }
  j["properties_required"] = properties;
  return j;
}

inline json encode_architecture(const Architecture& arch) {
  json j;
  j["id"] = arch.id;
  auto components = arch.components;
  std::sort(components.begin(), components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  auto connectors = arch.connectors;
  std::sort(connectors.begin(), connectors.end(),
            [](const Connector& a, const Connector& b) { return a.id < b.id; });
  auto assets = arch.assets;
  std::sort(assets.begin(), assets.end(),
            [](const Asset& a, const Asset& b) { return a.id < b.id; });
  j["components"] = json::array();
  for (const auto& c : components) j["components"].push_back(encode_component(c));
  j["connectors"] = json::array();
  for (const auto& k : connectors) j["connectors"].push_back(encode_connector(k));
  j["assets"] = json::array();
  for (const auto& a : assets) j["assets"].push_back(encode_asset(a));
  return j;
}

inline json encode_scenario(const Scenario& s) {
  json j;
  j["id"] = s.id;
  j["kind"] = scenario_kind_name(s.kind);
  j["title"] = s.title;
  j["narrative"] = s.narrative;
  j["actor"] = s.actor;
  j["criticality"] = s.criticality;
  j["attack_types"] = s.attack_types;
  j["affects_all_components"] = s.affects_all_components;
  j["trace"] = json::array();
  for (const auto& step : s.trace) {
    json encoded;
    encoded["element"] = step.element;
    encoded["action"] = trace_action_name(step.action);
    j["trace"].push_back(encoded);
  }
  return j;
}

inline json encode_strategy(const Strategy& strategy) {
  json j;
  j["kind"] = strategy_kind_name(strategy.kind);
  j["text"] = strategy.text;
  if (strategy.category) {
    j["category"] = strategy_category_name(*strategy.category);
  }
  j["mod_refs"] = strategy.mod_refs;
  return j;
}

inline json encode_map(const SurvivabilityMap& map) {
  json rows = json::object();
  for (const auto& [scenario, row] : map.rows) {
    json encoded_row;
    for (Pillar p : kPillars) {
      json cell;
      cell["current"] = encode_strategy(row.cell(p).current);
      cell["recommended"] = encode_strategy(row.cell(p).recommended);
      encoded_row[pillar_name(p)] = cell;
    }
    rows[scenario] = encoded_row;
  }
  json j;
  j["rows"] = rows;
  return j;
}

inline json encode_modification(const Modification& m) {
  json j;
  j["ref"] = m.ref;
  j["title"] = m.title;
  j["kind"] = modification_kind_name(m.kind);
  j["description"] = m.description;
  if (const auto* c = std::get_if<Component>(&m.payload)) {
    j["payload"] = encode_component(*c);
  } else if (const auto* k = std::get_if<Connector>(&m.payload)) {
    j["payload"] = encode_connector(*k);
  } else if (const auto* p = std::get_if<AssetPropertyAddition>(&m.payload)) {
    json payload;
    payload["asset"] = p->asset;
    payload["property"] = asset_property_name(p->property);
    j["payload"] = payload;
  }
  return j;
}

// Catalog order carries no meaning; parse and serialize both keep
// catalogs sorted so that parse(serialize(m)) == m holds structurally.
inline void normalize_model(ModelFile& m) {
  std::sort(m.architecture.components.begin(), m.architecture.components.end(),
            [](const Component& a, const Component& b) { return a.id < b.id; });
  std::sort(m.architecture.connectors.begin(), m.architecture.connectors.end(),
            [](const Connector& a, const Connector& b) { return a.id < b.id; });
  std::sort(m.architecture.assets.begin(), m.architecture.assets.end(),
            [](const Asset& a, const Asset& b) { return a.id < b.id; });
  std::sort(m.scenarios.begin(), m.scenarios.end(),
            [](const Scenario& a, const Scenario& b) { return a.id < b.id; });
  std::sort(m.essential_assets.begin(), m.essential_assets.end(),
            [](const EssentialAssetTag& a, const EssentialAssetTag& b) {
              return a.asset != b.asset ? a.asset < b.asset
                                        : a.rationale < b.rationale;
            });
  std::sort(m.modifications.begin(), m.modifications.end(),
            [](const Modification& a, const Modification& b) {
              return a.ref < b.ref;
            });
}

}  // namespace detail

// Parses and fully validates a model document. Shape problems (bad JSON,
// unknown keys, wrong types, unknown enum names, unknown schema_version)
// raise ParseError with a line or path context; semantic problems raise
// ValidationError carrying every diagnostic. Warnings do not fail the
// parse; pass warnings_out to collect them.
inline ModelFile parse_model(const std::string& bytes,
                             std::vector<Diagnostic>* warnings_out = nullptr) {
  using detail::json;

  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < bytes.size(); ++i) {
      if (bytes[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ": invalid JSON");
  }

  detail::require_object(root, "$");
  detail::require_known_keys(root, "$",
                             {"schema_version", "architecture", "scenarios",
                              "essential_assets", "map", "modifications",
                              "metadata"});
  ModelFile model;
  model.schema_version = detail::require_string(root, "schema_version", "$");
  if (model.schema_version != kSchemaVersion) {
    detail::parse_fail("$.schema_version", "unknown schema_version '" +
                                               model.schema_version + "'");
  }

  auto architecture = root.find("architecture");
  if (architecture == root.end()) {
    detail::parse_fail("$", "missing key 'architecture'");
  }
  model.architecture =
      detail::decode_architecture(*architecture, "$.architecture");

  if (auto it = root.find("scenarios"); it != root.end()) {
    detail::require_array(*it, "$.scenarios");
    for (std::size_t i = 0; i < it->size(); ++i) {
      model.scenarios.push_back(detail::decode_scenario(
          (*it)[i], "$.scenarios[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = root.find("essential_assets"); it != root.end()) {
    detail::require_array(*it, "$.essential_assets");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string path = "$.essential_assets[" + std::to_string(i) + "]";
      const json& tag = (*it)[i];
      detail::require_object(tag, path);
      detail::require_known_keys(tag, path, {"asset", "rationale"});
      EssentialAssetTag decoded;
      decoded.asset = lowercased(detail::require_string(tag, "asset", path));
      decoded.rationale = detail::optional_string(tag, "rationale", path);
      model.essential_assets.push_back(decoded);
    }
  }
  if (auto it = root.find("map"); it != root.end()) {
    model.map = detail::decode_map(*it, "$.map");
  }
  if (auto it = root.find("modifications"); it != root.end()) {
    detail::require_array(*it, "$.modifications");
    for (std::size_t i = 0; i < it->size(); ++i) {
      model.modifications.push_back(detail::decode_modification(
          (*it)[i], "$.modifications[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = root.find("metadata"); it != root.end()) {
    detail::require_object(*it, "$.metadata");
    for (auto entry = it->begin(); entry != it->end(); ++entry) {
      if (!entry->is_string()) {
        detail::parse_fail("$.metadata." + entry.key(), "expected a string");
      }
      model.metadata.emplace(entry.key(), entry->get<std::string>());
    }
  }

  // Semantic validation, fail-closed: a model that any module validator
  // rejects never parses.
  std::vector<Diagnostic> diags = validate_architecture(model.architecture);
  if (has_errors(diags)) {
    throw ValidationError("model validation failed", diags);
  }

  std::set<ScenarioId> scenario_ids;
  for (const auto& s : model.scenarios) {
    if (!scenario_ids.insert(s.id).second) {
      diags.push_back({Severity::error, "scenarios[" + s.id + "]",
                       "duplicate scenario id '" + s.id + "'"});
    }
    auto scenario_diags =
        validate_scenario(model.architecture, s, TraceCheckMode::lax);
    diags.insert(diags.end(), scenario_diags.begin(), scenario_diags.end());
  }
  for (std::size_t i = 0; i < model.essential_assets.size(); ++i) {
    const auto& tag = model.essential_assets[i];
    if (model.architecture.find_asset(tag.asset) == nullptr) {
      diags.push_back({Severity::error,
                       "essential_assets[" + std::to_string(i) + "]",
                       "unknown asset '" + tag.asset + "'"});
    }
  }

  auto mod_diags = validate_modifications(model.modifications);
  diags.insert(diags.end(), mod_diags.begin(), mod_diags.end());
  std::set<ComponentId> addable;
  for (const auto& m : model.modifications) {
    if (m.kind == ModificationKind::add_component) {
      if (const auto* c = std::get_if<Component>(&m.payload)) {
        addable.insert(c->id);
      }
    }
  }
  // Cross-reference checks cover dangling targets only. An add_component
  // payload whose id already exists stays parseable: that is the normal
  // state of a model written after apply, which verify consumes.
  for (const auto& m : model.modifications) {
    const std::string path = detail::mod_path(m);
    if (const auto* c = std::get_if<Component>(&m.payload)) {
      if (m.kind == ModificationKind::alter_component &&
          model.architecture.find_component(c->id) == nullptr) {
        diags.push_back({Severity::error, path,
                         "cannot alter missing component '" + c->id + "'"});
      }
    } else if (const auto* k = std::get_if<Connector>(&m.payload)) {
      for (const auto& endpoint : {k->from, k->to}) {
        if (model.architecture.find_component(endpoint) == nullptr &&
            addable.count(endpoint) == 0) {
          diags.push_back({Severity::error, path,
                           "connector endpoint '" + endpoint +
                               "' does not resolve to a component"});
        }
      }
    } else if (const auto* p = std::get_if<AssetPropertyAddition>(&m.payload)) {
      if (model.architecture.find_asset(p->asset) == nullptr) {
        diags.push_back(
            {Severity::error, path, "unknown asset '" + p->asset + "'"});
      }
    }
  }

  if (model.map) {
    auto map_diags = validate_map(*model.map, model.intrusion_scenarios(),
                                  model.modifications);
    diags.insert(diags.end(), map_diags.begin(), map_diags.end());
  }

  if (has_errors(diags)) {
    throw ValidationError("model validation failed", diags);
  }
  if (warnings_out != nullptr) {
    *warnings_out = diags;  // only warnings remain
  }

  detail::normalize_model(model);
  return model;
}

// Canonical form: sorted object keys, catalogs sorted by id, two-space
// indentation, trailing newline. Byte-identical across runs for equal
// models.
inline std::string serialize_model(const ModelFile& m) {
  using detail::json;

  ModelFile normalized = m;
  detail::normalize_model(normalized);

  json root;
  root["schema_version"] = normalized.schema_version;
  root["architecture"] = detail::encode_architecture(normalized.architecture);
  root["scenarios"] = json::array();
  for (const auto& s : normalized.scenarios) {
    root["scenarios"].push_back(detail::encode_scenario(s));
  }
  root["essential_assets"] = json::array();
  for (const auto& tag : normalized.essential_assets) {
    json encoded;
    encoded["asset"] = tag.asset;
    encoded["rationale"] = tag.rationale;
    root["essential_assets"].push_back(encoded);
  }
  if (normalized.map) {
    root["map"] = detail::encode_map(*normalized.map);
  }
  root["modifications"] = json::array();
  for (const auto& mod : normalized.modifications) {
    root["modifications"].push_back(detail::encode_modification(mod));
  }
  root["metadata"] = json::object();
  for (const auto& [key, value] : normalized.metadata) {
    root["metadata"][key] = value;
  }
  return root.dump(2) + "\n";
}

}  // namespace sna

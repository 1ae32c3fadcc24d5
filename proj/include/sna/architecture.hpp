#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sna/core.hpp"

namespace sna {

// scope=external marks an element that sits outside the analyzed subsystem
// boundary. External elements take part in traces but are dropped from
// softspot reporting.
enum class Scope { internal, external };

enum class ConnectorKind { call, message, data_access };

enum class AssetProperty { integrity, confidentiality, availability };

inline const char* scope_name(Scope s) {
  return s == Scope::internal ? "internal" : "external";
}

inline std::optional<Scope> scope_from_name(const std::string& s) {
  if (s == "internal") return Scope::internal;
  if (s == "external") return Scope::external;
  return std::nullopt;
}

inline const char* connector_kind_name(ConnectorKind k) {
  switch (k) {
    case ConnectorKind::call: return "call";
    case ConnectorKind::message: return "message";
    case ConnectorKind::data_access: return "data_access";
  }
  return "call";
}

inline std::optional<ConnectorKind> connector_kind_from_name(
    const std::string& s) {
  if (s == "call") return ConnectorKind::call;
  if (s == "message") return ConnectorKind::message;
  if (s == "data_access") return ConnectorKind::data_access;
  return std::nullopt;
}

inline const char* asset_property_name(AssetProperty p) {
  switch (p) {
    case AssetProperty::integrity: return "integrity";
    case AssetProperty::confidentiality: return "confidentiality";
    case AssetProperty::availability: return "availability";
  }
  return "integrity";
}

inline std::optional<AssetProperty> asset_property_from_name(
    const std::string& s) {
  if (s == "integrity") return AssetProperty::integrity;
  if (s == "confidentiality") return AssetProperty::confidentiality;
  if (s == "availability") return AssetProperty::availability;
  return std::nullopt;
}

struct Component {
  ComponentId id;
  std::string name;
  std::string description;
  Scope scope = Scope::internal;
  std::set<std::string> tags;

  bool operator==(const Component&) const = default;
};

// Connectors are directed in the call sense: caller -> callee,
// component -> datastore.
struct Connector {
  ConnectorId id;
  ComponentId from;
  ComponentId to;
  ConnectorKind kind = ConnectorKind::call;
  std::string description;

  bool operator==(const Connector&) const = default;
};

struct Asset {
  AssetId id;
  std::string name;
  std::set<ComponentId> custodians;
  std::set<AssetProperty> properties_required;

  bool operator==(const Asset&) const = default;
};

struct Architecture {
  std::string id;
  std::vector<Component> components;
  std::vector<Connector> connectors;
  std::vector<Asset> assets;

  bool operator==(const Architecture&) const = default;

  const Component* find_component(const ComponentId& id_) const {
    for (const auto& c : components) {
      if (c.id == id_) return &c;
    }
    return nullptr;
  }

  const Asset* find_asset(const AssetId& id_) const {
    for (const auto& a : assets) {
      if (a.id == id_) return &a;
    }
    return nullptr;
  }

  bool has_element(const ElementId& id_) const {
    return find_component(id_) != nullptr || find_asset(id_) != nullptr;
  }

  bool has_connector(const ComponentId& from, const ComponentId& to) const {
    for (const auto& k : connectors) {
      if (k.from == from && k.to == to) return true;
    }
    return false;
  }
};

// Checks every type invariant and returns the findings; never throws.
// Errors: bad/duplicate ids, dangling references, self-loops, empty
// custodian sets, component/asset id collisions. Warnings: isolated
// components, assets whose custodian is external.
inline std::vector<Diagnostic> validate_architecture(const Architecture& arch) {
  std::vector<Diagnostic> diags;
  auto error = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::error, std::move(path), std::move(message)});
  };
  auto warning = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::warning, std::move(path), std::move(message)});
  };

  std::set<std::string> component_ids;
  std::set<std::string> element_namespace;
  for (std::size_t i = 0; i < arch.components.size(); ++i) {
    const Component& c = arch.components[i];
    const std::string path =
        "components[" + (c.id.empty() ? "#" + std::to_string(i) : c.id) + "]";
    if (!valid_id(c.id)) {
      error(path, "invalid component id '" + c.id +
                      "' (want non-empty lowercase letters, digits, "
                      "underscore)");
      continue;
    }
    if (!component_ids.insert(c.id).second) {
      error(path, "duplicate component id '" + c.id + "'");
      continue;
    }
    element_namespace.insert(c.id);
  }

  std::set<std::string> connector_ids;
  for (std::size_t i = 0; i < arch.connectors.size(); ++i) {
    const Connector& k = arch.connectors[i];
    const std::string path =
        "connectors[" + (k.id.empty() ? "#" + std::to_string(i) : k.id) + "]";
    if (!valid_id(k.id)) {
      error(path, "invalid connector id '" + k.id + "'");
      continue;
    }
    if (!connector_ids.insert(k.id).second) {
      error(path, "duplicate connector id '" + k.id + "'");
      continue;
    }
    if (component_ids.count(k.from) == 0) {
      error(path, "connector references nonexistent component '" + k.from +
                      "' as its source");
    }
    if (component_ids.count(k.to) == 0) {
      error(path, "connector references nonexistent component '" + k.to +
                      "' as its target");
    }
    if (!k.from.empty() && k.from == k.to) {
      error(path, "self-loop connector on component '" + k.from + "'");
    }
  }

  std::set<std::string> asset_ids;
  for (std::size_t i = 0; i < arch.assets.size(); ++i) {
    const Asset& a = arch.assets[i];
    const std::string path =
        "assets[" + (a.id.empty() ? "#" + std::to_string(i) : a.id) + "]";
    if (!valid_id(a.id)) {
      error(path, "invalid asset id '" + a.id + "'");
      continue;
    }
    if (component_ids.count(a.id) != 0) {
      error(path, "asset id '" + a.id + "' collides with a component id");
      continue;
    }
    if (!asset_ids.insert(a.id).second) {
      error(path, "duplicate asset id '" + a.id + "'");
      continue;
    }
    if (a.custodians.empty()) {
      error(path, "asset has no custodian components");
    }
    for (const auto& custodian : a.custodians) {
      if (component_ids.count(custodian) == 0) {
        error(path, "custodian '" + custodian +
                        "' does not name an existing component");
      }
    }
  }

  // Warnings run after all reference errors so the diagnostic order is
  // stable: errors per section first, then soft findings.
  for (const Component& c : arch.components) {
    if (!valid_id(c.id) || component_ids.count(c.id) == 0) continue;
    bool touched = false;
    for (const auto& k : arch.connectors) {
      if (k.from == c.id || k.to == c.id) {
        touched = true;
        break;
      }
    }
    if (!touched) {
      warning("components[" + c.id + "]",
              "component '" + c.id + "' has no connectors");
    }
  }
  for (const Asset& a : arch.assets) {
    if (asset_ids.count(a.id) == 0) continue;
    for (const auto& custodian : a.custodians) {
      const Component* c = arch.find_component(custodian);
      if (c != nullptr && c->scope == Scope::external) {
        warning("assets[" + a.id + "]",
                "custodian '" + custodian + "' has external scope");
      }
    }
  }

  return diags;
}

// Component ids plus asset ids, as one sorted set. Rejects architectures
// that carry validation errors.
inline std::set<ElementId> element_ids(const Architecture& arch) {
  auto diags = validate_architecture(arch);
  if (has_errors(diags)) {
    throw ValidationError("architecture has validation errors", diags);
  }
  std::set<ElementId> ids;
  for (const auto& c : arch.components) ids.insert(c.id);
  for (const auto& a : arch.assets) ids.insert(a.id);
  return ids;
}

inline std::set<ComponentId> custodians(const Architecture& arch,
                                        const AssetId& asset) {
  const Asset* a = arch.find_asset(asset);
  if (a == nullptr) {
    throw LookupError("unknown asset '" + asset + "'");
  }
  return a->custodians;
}

}  // namespace sna

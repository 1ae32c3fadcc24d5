#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "sna/architecture.hpp"
#include "sna/core.hpp"

namespace sna {

enum class ModificationKind {
  add_component,
  add_connector,
  alter_component,
  add_asset_property,
  procedural
};

inline const char* modification_kind_name(ModificationKind k) {
  switch (k) {
    case ModificationKind::add_component: return "add_component";
    case ModificationKind::add_connector: return "add_connector";
    case ModificationKind::alter_component: return "alter_component";
    case ModificationKind::add_asset_property: return "add_asset_property";
    case ModificationKind::procedural: return "procedural";
  }
  return "procedural";
}

inline std::optional<ModificationKind> modification_kind_from_name(
    const std::string& s) {
  if (s == "add_component") return ModificationKind::add_component;
  if (s == "add_connector") return ModificationKind::add_connector;
  if (s == "alter_component") return ModificationKind::alter_component;
  if (s == "add_asset_property") return ModificationKind::add_asset_property;
  if (s == "procedural") return ModificationKind::procedural;
  return std::nullopt;
}

struct AssetPropertyAddition {
  AssetId asset;
  AssetProperty property = AssetProperty::integrity;

  bool operator==(const AssetPropertyAddition&) const = default;
};

// Payload shape follows the kind: Component for add/alter_component,
// Connector for add_connector, AssetPropertyAddition for
// add_asset_property, monostate for procedural.
using ModificationPayload =
    std::variant<std::monostate, Component, Connector, AssetPropertyAddition>;

// One declared architecture change, keyed by its reference number {n}.
// Procedural modifications change nothing structurally; they record a
// process-level measure (backups, audits, timeouts).
struct Modification {
  ModRef ref = 0;
  std::string title;
  ModificationKind kind = ModificationKind::procedural;
  ModificationPayload payload;
  std::string description;

  bool operator==(const Modification&) const = default;
};

struct ArchDiff {
  std::set<ComponentId> added_components;
  std::set<ComponentId> removed_components;
  std::set<ComponentId> altered_components;
  std::set<ConnectorId> added_connectors;
  std::set<ConnectorId> removed_connectors;
  std::set<AssetId> added_assets;
  std::set<AssetId> removed_assets;
  std::set<AssetId> altered_assets;

  bool operator==(const ArchDiff&) const = default;

  bool empty() const {
    return added_components.empty() && removed_components.empty() &&
           altered_components.empty() && added_connectors.empty() &&
           removed_connectors.empty() && added_assets.empty() &&
           removed_assets.empty() && altered_assets.empty();
  }
};

// apply_modifications output. notes carries one provenance line per
// procedural modification, in application order.
struct ApplyResult {
  Architecture architecture;
  std::vector<std::string> notes;
};

namespace detail {

inline bool payload_matches_kind(const Modification& m) {
  switch (m.kind) {
    case ModificationKind::add_component:
    case ModificationKind::alter_component:
      return std::holds_alternative<Component>(m.payload);
    case ModificationKind::add_connector:
      return std::holds_alternative<Connector>(m.payload);
    case ModificationKind::add_asset_property:
      return std::holds_alternative<AssetPropertyAddition>(m.payload);
    case ModificationKind::procedural:
      return std::holds_alternative<std::monostate>(m.payload);
  }
  return false;
}

inline std::string mod_path(const Modification& m) {
  return "modifications[{" + std::to_string(m.ref) + "}]";
}

}  // namespace detail

// Structural checks on a modification set alone: positive unique refs and
// payload shapes. Reference checks against an architecture happen in
// apply_modifications.
inline std::vector<Diagnostic> validate_modifications(
    const std::vector<Modification>& mods) {
  std::vector<Diagnostic> diags;
  auto error = [&diags](std::string path, std::string message) {
    diags.push_back({Severity::error, std::move(path), std::move(message)});
  };

  std::set<ModRef> refs;
  for (const auto& m : mods) {
    const std::string path = detail::mod_path(m);
    if (m.ref < 1) {
      error(path, "modification reference must be a positive integer");
    } else if (!refs.insert(m.ref).second) {
      error(path, "duplicate modification reference {" +
                      std::to_string(m.ref) + "}");
    }
    if (!detail::payload_matches_kind(m)) {
      error(path, std::string("payload does not match kind '") +
                      modification_kind_name(m.kind) + "'");
      continue;
    }
    if (const auto* c = std::get_if<Component>(&m.payload)) {
      if (!valid_id(c->id)) error(path, "invalid component id '" + c->id + "'");
    } else if (const auto* k = std::get_if<Connector>(&m.payload)) {
      if (!valid_id(k->id)) error(path, "invalid connector id '" + k->id + "'");
    } else if (const auto* p = std::get_if<AssetPropertyAddition>(&m.payload)) {
      if (!valid_id(p->asset)) error(path, "invalid asset id '" + p->asset + "'");
    }
  }
  return diags;
}

// Applies the modifications in list order and returns the resulting
// architecture, which is guaranteed to validate without errors. The input
// is never mutated. Re-adding an existing element is an error, not a
// no-op.
inline ApplyResult apply_modifications(const Architecture& arch,
                                       const std::vector<Modification>& mods) {
  auto mod_diags = validate_modifications(mods);
  if (has_errors(mod_diags)) {
    throw ModificationError("invalid modification set: " +
                            format_diagnostic(mod_diags.front()));
  }

  ApplyResult result;
  result.architecture = arch;
  Architecture& out = result.architecture;

  for (const auto& m : mods) {
    const std::string label = "{" + std::to_string(m.ref) + "}";
    switch (m.kind) {
      case ModificationKind::add_component: {
        const auto& c = std::get<Component>(m.payload);
        if (out.has_element(c.id)) {
          throw ModificationError("modification " + label + ": element '" +
                                  c.id + "' already exists");
        }
        out.components.push_back(c);
        break;
      }
      case ModificationKind::add_connector: {
        const auto& k = std::get<Connector>(m.payload);
        for (const auto& existing : out.connectors) {
          if (existing.id == k.id) {
            throw ModificationError("modification " + label + ": connector '" +
                                    k.id + "' already exists");
          }
        }
        if (out.find_component(k.from) == nullptr) {
          throw ModificationError("modification " + label +
                                  ": unknown source component '" + k.from +
                                  "'");
        }
        if (out.find_component(k.to) == nullptr) {
          throw ModificationError("modification " + label +
                                  ": unknown target component '" + k.to + "'");
        }
        if (k.from == k.to) {
          throw ModificationError("modification " + label +
                                  ": self-loop connector on '" + k.from + "'");
        }
        out.connectors.push_back(k);
        break;
      }
      case ModificationKind::alter_component: {
        const auto& c = std::get<Component>(m.payload);
        Component* target = nullptr;
        for (auto& existing : out.components) {
          if (existing.id == c.id) {
            target = &existing;
            break;
          }
        }
        if (target == nullptr) {
          throw ModificationError("modification " + label +
                                  ": cannot alter missing component '" + c.id +
                                  "'");
        }
        *target = c;
        break;
      }
      case ModificationKind::add_asset_property: {
        const auto& p = std::get<AssetPropertyAddition>(m.payload);
        Asset* target = nullptr;
        for (auto& existing : out.assets) {
          if (existing.id == p.asset) {
            target = &existing;
            break;
          }
        }
        if (target == nullptr) {
          throw ModificationError("modification " + label +
                                  ": unknown asset '" + p.asset + "'");
        }
        target->properties_required.insert(p.property);
        break;
      }
      case ModificationKind::procedural: {
        result.notes.push_back("procedural " + label + ": " + m.title);
        break;
      }
    }
  }

  auto diags = validate_architecture(out);
  if (has_errors(diags)) {
    throw ModificationError("modified architecture fails validation: " +
                            format_diagnostic(diags.front()));
  }
  return result;
}

// Set-difference on ids; altered elements keep their id but differ in any
// field.
inline ArchDiff diff_architectures(const Architecture& before,
                                   const Architecture& after) {
  ArchDiff diff;

  for (const auto& c : after.components) {
    const Component* old = before.find_component(c.id);
    if (old == nullptr) {
      diff.added_components.insert(c.id);
    } else if (!(*old == c)) {
      diff.altered_components.insert(c.id);
    }
  }
  for (const auto& c : before.components) {
    if (after.find_component(c.id) == nullptr) {
      diff.removed_components.insert(c.id);
    }
  }

  auto find_connector = [](const Architecture& a,
                           const ConnectorId& id) -> const Connector* {
    for (const auto& k : a.connectors) {
      if (k.id == id) return &k;
    }
    return nullptr;
  };
  for (const auto& k : after.connectors) {
    if (find_connector(before, k.id) == nullptr) {
      diff.added_connectors.insert(k.id);
    }
  }
  for (const auto& k : before.connectors) {
    if (find_connector(after, k.id) == nullptr) {
      diff.removed_connectors.insert(k.id);
    }
  }

  for (const auto& a : after.assets) {
    const Asset* old = before.find_asset(a.id);
    if (old == nullptr) {
      diff.added_assets.insert(a.id);
    } else if (!(*old == a)) {
      diff.altered_assets.insert(a.id);
    }
  }
  for (const auto& a : before.assets) {
    if (after.find_asset(a.id) == nullptr) {
      diff.removed_assets.insert(a.id);
    }
  }

  return diff;
}

}  // namespace sna

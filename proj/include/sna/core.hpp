#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sna {

// Identifier aliases. Components and assets share one element namespace;
// connectors and scenarios each have their own.
using ComponentId = std::string;
using AssetId = std::string;
using ConnectorId = std::string;
using ScenarioId = std::string;
using ElementId = std::string;

// Modification reference number, rendered as {n}. Always >= 1.
using ModRef = int;

enum class Severity { error, warning };

inline const char* severity_name(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

struct Diagnostic {
  Severity severity = Severity::error;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.severity == Severity::error) return true;
  }
  return false;
}

inline std::string format_diagnostic(const Diagnostic& d) {
  std::string out = severity_name(d.severity);
  out += ": ";
  if (!d.path.empty()) {
    out += d.path;
    out += ": ";
  }
  out += d.message;
  return out;
}

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wrong arguments to an operation: bad scenario kind, threshold out of
// range, duplicate inputs.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A referenced id does not exist.
class LookupError : public Error {
 public:
  using Error::Error;
};

// Malformed input bytes or schema violations while reading a model file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A modification set cannot be applied to the given architecture.
class ModificationError : public Error {
 public:
  using Error::Error;
};

// Semantic validation failed; carries the full diagnostic list.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<Diagnostic> diagnostics)
      : Error(what), diagnostics_(std::move(diagnostics)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// All model ids use the same charset: non-empty, lowercase letters,
// digits, underscore.
inline bool valid_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    const bool ok =
        (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

inline std::string lowercased(std::string s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return s;
}

template <typename Range>
std::string join(const Range& items, const std::string& sep) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    out += item;
    first = false;
  }
  return out;
}

}  // namespace sna

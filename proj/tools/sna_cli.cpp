// Command-line front end: validate, analyze, map, apply, verify, graph,
// requirements. Exit codes: 0 success, 1 validation or coverage failure,
// 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sna/sna.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw sna::ParseError("cannot read file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw sna::Error("cannot write file '" + path + "'");
  }
  out << content;
}

void print_diagnostics(const std::vector<sna::Diagnostic>& diags) {
  for (const auto& d : diags) {
    std::cerr << sna::format_diagnostic(d) << "\n";
  }
}

// Accepts "1,3,4" and range shorthand "1..6"; both may be mixed.
std::vector<sna::ModRef> parse_refs(const std::string& text) {
  std::vector<sna::ModRef> refs;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    const auto dots = token.find("..");
    try {
      if (dots == std::string::npos) {
        refs.push_back(std::stoi(token));
      } else {
        const int low = std::stoi(token.substr(0, dots));
        const int high = std::stoi(token.substr(dots + 2));
        if (high < low) {
          throw sna::ArgumentError("empty reference range '" + token + "'");
        }
        for (int ref = low; ref <= high; ++ref) refs.push_back(ref);
      }
    } catch (const std::invalid_argument&) {
      throw sna::ArgumentError("bad modification reference '" + token + "'");
    } catch (const std::out_of_range&) {
      throw sna::ArgumentError("bad modification reference '" + token + "'");
    }
  }
  return refs;
}

sna::AnalysisResult default_analysis(const sna::ModelFile& model,
                                     int threshold = 1) {
  return sna::softspots(model.architecture, model.usage_scenarios(),
                        model.essential_assets, model.intrusion_scenarios(),
                        threshold);
}

int run_validate(const std::string& path) {
  std::vector<sna::Diagnostic> warnings;
  sna::ModelFile model = sna::parse_model(read_file(path), &warnings);
  print_diagnostics(warnings);
  // Strict trace checks are advisory at the CLI: connectivity gaps are
  // worth seeing but do not reject a model.
  for (const auto& s : model.scenarios) {
    for (auto d :
         sna::validate_scenario(model.architecture, s, sna::TraceCheckMode::strict)) {
      d.severity = sna::Severity::warning;
      d.message = "(strict) " + d.message;
      std::cerr << sna::format_diagnostic(d) << "\n";
    }
  }
  std::cerr << "ok: " << path << " validates\n";
  return kExitOk;
}

int run_analyze(const std::string& path, int threshold,
                const std::string& format) {
  sna::ModelFile model = sna::parse_model(read_file(path));
  sna::AnalysisResult result = default_analysis(model, threshold);
  if (format == "json") {
    std::cout << sna::analysis_to_json(result).dump(2) << "\n";
  } else {
    std::cout << sna::render_analysis(result);
  }
  return kExitOk;
}

int run_map(const std::string& path, bool gaps, bool coverage) {
  sna::ModelFile model = sna::parse_model(read_file(path));
  if (!model.map) {
    throw sna::Error("model '" + path + "' has no survivability map");
  }
  sna::AnalysisResult result = default_analysis(model);
  sna::MapRenderOptions options;
  options.include_gaps = gaps;
  options.include_coverage = coverage;
  std::cout << sna::render_map(*model.map, model.intrusion_scenarios(),
                               model.modifications, &result, options);
  return kExitOk;
}

int run_apply(const std::string& path, const std::string& refs_spec,
              bool refs_given, const std::string& out_path) {
  sna::ModelFile model = sna::parse_model(read_file(path));

  std::vector<sna::Modification> selected;
  std::vector<sna::ModRef> applied_refs;
  if (!refs_given) {
    selected = model.modifications;
    for (const auto& m : selected) applied_refs.push_back(m.ref);
  } else {
    for (sna::ModRef ref : parse_refs(refs_spec)) {
      const sna::Modification* found = nullptr;
      for (const auto& m : model.modifications) {
        if (m.ref == ref) {
          found = &m;
          break;
        }
      }
      if (found == nullptr) {
        throw sna::ArgumentError("modification {" + std::to_string(ref) +
                                 "} is not declared in the model");
      }
      selected.push_back(*found);
      applied_refs.push_back(ref);
    }
  }

  sna::ApplyResult applied =
      sna::apply_modifications(model.architecture, selected);
  model.architecture = applied.architecture;
  std::vector<std::string> ref_strings;
  for (sna::ModRef ref : applied_refs) {
    ref_strings.push_back(std::to_string(ref));
  }
  model.metadata["applied_modifications"] = sna::join(ref_strings, ",");
  if (!applied.notes.empty()) {
    model.metadata["procedural_notes"] = sna::join(applied.notes, "; ");
  }

  write_file(out_path, sna::serialize_model(model));
  std::cerr << "applied " << selected.size() << " modification(s) -> "
            << out_path << "\n";
  return kExitOk;
}

int run_verify(const std::string& path) {
  sna::ModelFile model = sna::parse_model(read_file(path));
  if (!model.map) {
    throw sna::Error("model '" + path + "' has no survivability map");
  }
  sna::CoverageReport report = sna::verify_mitigation_coverage(
      model.architecture, *model.map, model.intrusion_scenarios(),
      model.modifications);
  std::cout << sna::render_coverage_report(report);
  return report.all_covered() ? kExitOk : kExitFailure;
}

int run_graph(const std::string& path, bool with_analysis) {
  sna::ModelFile model = sna::parse_model(read_file(path));
  if (with_analysis) {
    sna::AnalysisResult result = default_analysis(model);
    std::cout << sna::export_graph(model.architecture, &result);
  } else {
    std::cout << sna::export_graph(model.architecture);
  }
  return kExitOk;
}

int run_requirements(const std::string& path,
                     const std::vector<std::string>& raw_params) {
  sna::ModelFile model = sna::parse_model(read_file(path));
  if (!model.map) {
    throw sna::Error("model '" + path + "' has no survivability map");
  }
  std::map<std::string, std::string> params;
  for (const auto& raw : raw_params) {
    const auto eq = raw.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw sna::ArgumentError("bad --param '" + raw + "', want key=value");
    }
    params[raw.substr(0, eq)] = raw.substr(eq + 1);
  }
  auto statements =
      sna::derive_requirements(*model.map, model.modifications, params);
  std::cout << sna::render_requirements(statements);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Survivable network analysis toolkit"};
  app.require_subcommand(1);

  std::string model_path;
  int threshold = 1;
  std::string format = "text";
  bool gaps = false;
  bool coverage = false;
  std::string refs_spec;
  std::string out_path;
  bool with_analysis = false;
  std::vector<std::string> raw_params;

  auto* validate = app.add_subcommand("validate", "Validate a model file");
  validate->add_option("model", model_path, "Model file")->required();

  auto* analyze =
      app.add_subcommand("analyze", "Compute essential, compromisable, and "
                                    "softspot elements");
  analyze->add_option("model", model_path, "Model file")->required();
  analyze->add_option("--threshold", threshold,
                      "Criticality threshold for essential usage scenarios");
  analyze->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* map_cmd = app.add_subcommand("map", "Render the survivability map");
  map_cmd->add_option("model", model_path, "Model file")->required();
  map_cmd->add_flag("--gaps", gaps, "Append the gap report");
  map_cmd->add_flag("--coverage", coverage, "Append the coverage matrix");

  auto* apply = app.add_subcommand("apply", "Apply declared modifications");
  apply->add_option("model", model_path, "Model file")->required();
  auto* refs_option = apply->add_option(
      "--refs", refs_spec, "Modification references, e.g. 1,3,4 or 1..6");
  apply->add_option("-o,--output", out_path, "Output model file")->required();

  auto* verify =
      app.add_subcommand("verify", "Check mitigation coverage of the map "
                                   "against the architecture");
  verify->add_option("model", model_path, "Model file")->required();

  auto* graph = app.add_subcommand("graph", "Export the architecture as DOT");
  graph->add_option("model", model_path, "Model file")->required();
  graph->add_flag("--with-analysis", with_analysis,
                  "Mark reported softspots");

  auto* requirements =
      app.add_subcommand("requirements", "Derive requirement statements");
  requirements->add_option("model", model_path, "Model file")->required();
  requirements->add_option("--param", raw_params,
                           "Set a template parameter, key=value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(model_path);
    if (analyze->parsed()) return run_analyze(model_path, threshold, format);
    if (map_cmd->parsed()) return run_map(model_path, gaps, coverage);
    if (apply->parsed()) {
      return run_apply(model_path, refs_spec, refs_option->count() > 0,
                       out_path);
    }
    if (verify->parsed()) return run_verify(model_path);
    if (graph->parsed()) return run_graph(model_path, with_analysis);
    if (requirements->parsed()) return run_requirements(model_path, raw_params);
  } catch (const sna::ValidationError& e) {
    print_diagnostics(e.diagnostics());
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const sna::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sna::ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sna::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

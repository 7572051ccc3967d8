// Command-line front end: decoration graphs, cone systems, invariant checks
// and oracle sweeps.
//
//   decograph graph  --type C3 --word 2,3,2,1,2,3,2,3,1 --i 2 --format dot
//   decograph cone   --type D4 --word 2,1,3,2,4,2,3,2,1,2,3,4 --format latex
//   decograph check  --type C3 --all-words
//   decograph oracle --type A3 --all-words --census-bound 3
//
// Exit status: 0 success, 1 a check or oracle comparison failed, 2 an index
// outside the proven range was requested without --force, 3 an internal
// consistency assertion fired, 64 invalid configuration.

#include "deco/decograph.hpp"
#include "deco/error.hpp"
#include "deco/graph_export.hpp"
#include "deco/oracle.hpp"
#include "deco/stringcone.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using deco::CartanData;
using deco::ErrorKind;
using deco::ReducedWord;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitInternal = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string type;
  std::string word;
  int index = 0;  // 0: every i
  std::string format;
  std::string output;
  bool force = false;
  bool fast_path = false;
  bool all_words = false;
  int census_bound = 2;
  std::size_t word_limit = deco::kDefaultWordLimit;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CartanData parse_type(const RunConfig& cfg) {
  if (cfg.type.empty()) throw ConfigError("--type is required");
  try {
    return deco::cartan_matrix(deco::CartanType::parse(cfg.type));
  } catch (const deco::Error& e) {
    throw ConfigError(std::string("--type: ") + e.what());
  }
}

std::vector<ReducedWord> words_for(const RunConfig& cfg, const CartanData& cd) {
  if (cfg.all_words && !cfg.word.empty()) throw ConfigError("--word and --all-words are exclusive");
  if (cfg.all_words) return deco::enumerate_w0_words(cd, cfg.word_limit);
  if (cfg.word.empty()) return {deco::first_w0_word(cd)};
  try {
    return {deco::validate_word(cd, deco::parse_letters(cfg.word))};
  } catch (const deco::Error& e) {
    throw ConfigError(std::string("--word: ") + e.what());
  }
}

std::vector<int> indices_for(const RunConfig& cfg, const CartanData& cd) {
  if (cfg.index != 0) {
    if (cfg.index < 1 || cfg.index > cd.rank()) {
      throw ConfigError("--i must lie in [1," + std::to_string(cd.rank()) + "]");
    }
    return {cfg.index};
  }
  std::vector<int> all;
  for (int i = 1; i <= cd.rank(); ++i) all.push_back(i);
  return all;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (cfg.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : "|") + std::string(f);
  throw ConfigError("--format must be one of " + list);
}

// Writes to stdout when no path is given; otherwise writes a sibling
// temporary file and renames it into place.
void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::path path(cfg.output);
  if (const char* dir = std::getenv("DECOGRAPH_OUTPUT_DIR"); dir && *dir && path.is_relative()) {
    path = std::filesystem::path(dir) / path;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << text;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

deco::BuildOptions build_options(const RunConfig& cfg) {
  deco::BuildOptions options;
  options.force = cfg.force;
  options.minuscule_fast_path = cfg.fast_path;
  return options;
}

int cmd_graph(const RunConfig& cfg) {
  require_format(cfg, {"dot", "json", "text"});
  const CartanData cd = parse_type(cfg);
  if (cfg.all_words) throw ConfigError("graph takes a single --word");
  const ReducedWord w = words_for(cfg, cd).front();
  const auto options = build_options(cfg);

  std::string text;
  json graphs = json::array();
  for (int i : indices_for(cfg, cd)) {
    const deco::DecoGraph g = deco::build_graph(w, i, options);
    if (cfg.format == "dot") text += deco::to_dot(g);
    else if (cfg.format == "text") text += deco::to_text(g);
    else graphs.push_back(deco::to_json(g));
  }
  if (cfg.format == "json") text = (graphs.size() == 1 ? graphs.front() : graphs).dump(2) + "\n";
  emit(cfg, text);
  return kExitOk;
}

int cmd_cone(const RunConfig& cfg) {
  require_format(cfg, {"text", "json", "latex"});
  const CartanData cd = parse_type(cfg);
  if (cfg.all_words) throw ConfigError("cone takes a single --word");
  const ReducedWord w = words_for(cfg, cd).front();
  const deco::ConeSystem cone = deco::string_cone(w, build_options(cfg));
  const auto format = cfg.format == "json"    ? deco::ConeFormat::Json
                      : cfg.format == "latex" ? deco::ConeFormat::Latex
                                              : deco::ConeFormat::Text;
  emit(cfg, deco::render(cone, format));
  return kExitOk;
}

int cmd_check(const RunConfig& cfg) {
  const CartanData cd = parse_type(cfg);
  const auto words = words_for(cfg, cd);
  const auto indices = indices_for(cfg, cd);
  json results = json::array();
  bool all_pass = true;
  for (const auto& w : words) {
    for (int i : indices) {
      json entry = {{"word", w.letters()}, {"i", i}};
      const auto status = deco::supported(cd.type(), i);
      entry["support"] = std::string(deco::to_string(status));
      if (status == deco::SupportStatus::Unproven && !cfg.force) {
        if (cfg.index != 0) throw deco::Error(ErrorKind::UnsupportedIndex, "i=" + std::to_string(i));
        entry["status"] = "skipped";
        results.push_back(entry);
        continue;
      }
      deco::BuildOptions options;
      options.force = cfg.force;
      const deco::DecoGraph g = deco::build_graph(w, i, options);
      const deco::InvariantReport report = deco::check_invariants(g);
      bool pass = report.ok() && g.diagnostics().empty();
      entry["vertices"] = g.vertices().size();
      entry["edges"] = g.edges().size();
      entry["invariants"] = deco::to_json(report);
      if (deco::is_minuscule(cd, i)) {
        options.minuscule_fast_path = true;
        const bool same = deco::identical(g, deco::build_graph(w, i, options));
        entry["minuscule_equivalence"] = same ? "pass" : "fail";
        pass = pass && same;
      }
      if (!g.diagnostics().empty()) entry["diagnostics"] = g.diagnostics();
      entry["status"] = pass ? "pass" : "fail";
      all_pass = all_pass && pass;
      results.push_back(entry);
    }
  }
  const json out = {{"command", "check"},
                    {"type", cd.type().name()},
                    {"status", all_pass ? "pass" : "fail"},
                    {"results", results}};
  emit(cfg, out.dump(2) + "\n");
  return all_pass ? kExitOk : kExitFailed;
}

std::vector<deco::IntVector> weights_up_to(int rank, int bound) {
  std::vector<deco::IntVector> out;
  deco::IntVector m = deco::IntVector::Zero(rank);
  std::function<void(int, int)> rec = [&](int t, int left) {
    if (t == rank) {
      out.push_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m(t) = v;
      rec(t + 1, left - v);
    }
    m(t) = 0;
  };
  rec(0, bound);
  return out;
}

int cmd_oracle(const RunConfig& cfg) {
  const CartanData cd = parse_type(cfg);
  if (cfg.census_bound < 0) throw ConfigError("--census-bound must be nonnegative");
  const auto words = words_for(cfg, cd);
  const auto indices = indices_for(cfg, cd);
  bool all_pass = true;

  json reports = json::array();
  for (const auto& w : words) {
    for (int i : indices) {
      if (!deco::is_minuscule(cd, i)) {
        reports.push_back({{"input", {{"type", cd.type().name()}, {"word", w.letters()}, {"i", i}}},
                           {"status", "skipped"},
                           {"reason", "no brute-force oracle for non-minuscule V(Lambda_i)"}});
        continue;
      }
      const auto report = deco::run_oracle(w, i);
      all_pass = all_pass && report.pass();
      reports.push_back(deco::to_json(report));
    }
  }

  json census = json::array();
  const auto weights = weights_up_to(cd.rank(), cfg.census_bound);
  std::vector<deco::ConeSystem> cones;
  for (const auto& w : words) cones.push_back(deco::string_cone(w, build_options(cfg)));
  for (const auto& m : weights) {
    const auto expected = deco::dual_kostant_count(cd, m);
    std::vector<std::uint64_t> counts;
    bool agree = true;
    for (const auto& cone : cones) {
      counts.push_back(deco::weight_census(cone, m));
      agree = agree && counts.back() == expected;
    }
    all_pass = all_pass && agree;
    census.push_back({{"weight", std::vector<int>(m.begin(), m.end())},
                      {"dual_kostant", expected},
                      {"census", counts},
                      {"status", agree ? "pass" : "fail"}});
  }

  const json out = {{"command", "oracle"},
                    {"type", cd.type().name()},
                    {"words", words.size()},
                    {"status", all_pass ? "pass" : "fail"},
                    {"reports", reports},
                    {"census", census}};
  emit(cfg, out.dump(2) + "\n");
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoration graphs and string-cone inequalities for reduced words of w0"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--type", cfg.type, "Cartan type, e.g. A3, C3, D4, G2")->required();
    sub->add_option("--word", cfg.word, "reduced word of w0, e.g. 2,3,2,1,2,3,2,3,1 (default: lexicographically first)");
    sub->add_option("--i", cfg.index, "summand index (default: all)");
    sub->add_option("-o,--output", cfg.output, "output path (default: stdout)");
    sub->add_flag("--force", cfg.force, "build indices outside the proven range and report violations");
  };

  auto* graph = app.add_subcommand("graph", "build the decoration graph");
  add_common(graph);
  cfg.format = "dot";
  graph->add_option("--format", cfg.format, "dot|json|text")->capture_default_str();
  graph->add_flag("--fast-path", cfg.fast_path, "use the minuscule arrow rule");

  auto* cone = app.add_subcommand("cone", "emit the inequality system");
  add_common(cone);
  cone->add_option("--format", cfg.format, "text|json|latex");
  cone->add_flag("--fast-path", cfg.fast_path, "use the minuscule arrow rule");

  auto* check = app.add_subcommand("check", "run the graph invariant suite");
  add_common(check);
  check->add_flag("--all-words", cfg.all_words, "every reduced word of w0");
  check->add_option("--word-limit", cfg.word_limit, "cap on enumerated words")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "compare against brute-force oracles");
  add_common(oracle);
  oracle->add_flag("--all-words", cfg.all_words, "every reduced word of w0");
  oracle->add_option("--word-limit", cfg.word_limit, "cap on enumerated words")->capture_default_str();
  oracle->add_option("--census-bound", cfg.census_bound, "largest total weight in the census comparison")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*graph) return cmd_graph(cfg);
    if (*cone) {
      if (cone->count("--format") == 0) cfg.format = "text";
      return cmd_cone(cfg);
    }
    if (*check) return cmd_check(cfg);
    if (*oracle) return cmd_oracle(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const deco::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::UnsupportedIndex: return kExitUnsupported;
      case ErrorKind::ClosedFormMismatch:
      case ErrorKind::BUpdateMismatch:
      case ErrorKind::MixedSigns: return kExitInternal;
      case ErrorKind::NotMinuscule: return kExitUsage;
      default: return kExitFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitUsage;
}

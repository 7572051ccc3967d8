#include "deco/graph_export.hpp"

#include <sstream>

namespace deco {

namespace {

std::vector<int> as_list(const IntVector& v) { return {v.begin(), v.end()}; }

}  // namespace

std::string to_dot(const DecoGraph& g) {
  std::ostringstream os;
  os << "digraph \"" << g.word().cartan().type().name() << "_i" << g.index() << "\" {\n";
  os << "  // word " << g.word().to_string() << "\n";
  os << "  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < g.vertices().size(); ++v) {
    os << "  v" << v << " [label=\"" << render_monomial(g.vertices()[v].d) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const DecoGraph& g) {
  const auto& cd = g.word().cartan();
  nlohmann::json out;
  out["meta"] = {{"type", cd.type().name()},
                 {"rank", cd.rank()},
                 {"word", g.word().letters()},
                 {"i", g.index()},
                 {"support", std::string(to_string(g.status()))}};
  auto& vertices = out["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices()) {
    vertices.push_back({{"d", as_list(v.d)}, {"b", as_list(v.b)}, {"monomial", render_monomial(v.d)}});
  }
  auto& edges = out["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({{"src", e.src}, {"j", e.label}, {"dst", e.dst}});
  out["source"] = g.source();
  out["sinks"] = g.sinks();
  if (!g.diagnostics().empty()) out["diagnostics"] = g.diagnostics();
  return out;
}

std::string to_text(const DecoGraph& g) {
  std::ostringstream os;
  os << g.word().cartan().type().name() << " word " << g.word().to_string() << " i=" << g.index() << " ("
     << to_string(g.status()) << "): " << g.vertices().size() << " vertices, " << g.edges().size() << " edges\n";
  for (const auto& v : g.vertices()) {
    os << "  " << render_monomial(v.d) << "  b=(";
    for (Eigen::Index t = 0; t < v.b.size(); ++t) os << (t ? "," : "") << v.b(t);
    os << ")\n";
  }
  for (const auto& e : g.edges()) {
    os << "  " << render_monomial(g.vertices()[e.src].d) << " --" << e.label << "--> "
       << render_monomial(g.vertices()[e.dst].d) << "\n";
  }
  for (const auto& d : g.diagnostics()) os << "  ! " << d << "\n";
  return os.str();
}

nlohmann::json to_json(const InvariantReport& report) {
  nlohmann::json out;
  out["status"] = report.ok() ? "pass" : "fail";
  auto& checks = out["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"details", c.details}});
  }
  return out;
}

}  // namespace deco

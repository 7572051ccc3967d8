#include "deco/decograph.hpp"
#include "deco/error.hpp"

#include <doctest.h>

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

using namespace deco;

namespace {

using LabeledEdge = std::tuple<std::string, int, std::string>;

const std::vector<int> kC3Word{2, 3, 2, 1, 2, 3, 2, 3, 1};
const std::vector<int> kD4Word{2, 1, 3, 2, 4, 2, 3, 2, 1, 2, 3, 4};

ReducedWord word(const char* type, const std::vector<int>& letters) {
  return validate_word(cartan_matrix(CartanType::parse(type)), letters);
}

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (int x : xs) v(k++) = x;
  return v;
}

std::set<std::string> monomials(const DecoGraph& g) {
  std::set<std::string> out;
  for (const auto& v : g.vertices()) out.insert(render_monomial(v.d));
  return out;
}

std::set<LabeledEdge> labeled_edges(const DecoGraph& g) {
  std::set<LabeledEdge> out;
  for (const auto& e : g.edges()) {
    out.emplace(render_monomial(g.vertices()[e.src].d), e.label, render_monomial(g.vertices()[e.dst].d));
  }
  return out;
}

std::set<std::pair<std::string, std::string>> unlabeled_edges(const DecoGraph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& e : g.edges()) {
    out.emplace(render_monomial(g.vertices()[e.src].d), render_monomial(g.vertices()[e.dst].d));
  }
  return out;
}

const Vertex& vertex_of(const DecoGraph& g, const char* monomial) {
  const auto idx = g.find(parse_monomial(g.word().size(), monomial));
  REQUIRE(idx.has_value());
  return g.vertices()[*idx];
}

}  // namespace

TEST_CASE("support table") {
  CHECK(supported(CartanType::parse("C3"), 2) == SupportStatus::MinusculeLike);
  CHECK(supported(CartanType::parse("D7"), 5) == SupportStatus::MinusculeLike);
  CHECK(supported(CartanType::parse("E6"), 3) == SupportStatus::Unproven);
  CHECK(supported(CartanType::parse("E7"), 7) == SupportStatus::MinusculeLike);
  CHECK(supported(CartanType::parse("E8"), 7) == SupportStatus::MinusculeLike);
  CHECK(supported(CartanType::parse("E8"), 8) == SupportStatus::Unproven);
  CHECK(supported(CartanType::parse("F4"), 2) == SupportStatus::Unproven);
  CHECK(supported(CartanType::parse("F4"), 4) == SupportStatus::MinusculeLike);
  CHECK(supported(CartanType::parse("G2"), 1) == SupportStatus::G2Proven);
}

TEST_CASE("b-integers") {
  const auto c3 = word("C3", kC3Word);
  CHECK(b_from_d(c3, 2, parse_monomial(9, "t_1")) == vec({0, 0, 1, 1, 0, 1, 2, 1, 1}));
  CHECK(b_from_d(c3, 2, parse_monomial(9, "t_2/t_3")) == vec({1, 0, 0, 1, 0, 1, 2, 1, 1}));
  CHECK(initial_b_closed_form(c3, 2) == vec({0, 0, 1, 1, 0, 1, 2, 1, 1}));

  const auto d4 = word("D4", kD4Word);
  CHECK(b_from_d(d4, 2, parse_monomial(12, "t_1")) == vec({0, 0, 0, 1, 1, 0, 1, 1, 2, 1, 1, 1}));
  CHECK(initial_b_closed_form(d4, 2) == vec({0, 0, 0, 1, 1, 0, 1, 1, 2, 1, 1, 1}));

  const auto g2 = word("G2", {1, 2, 1, 2, 1, 2});
  CHECK(initial_vertex(g2, 1).b == vec({0, 0, 1, 3, 2, 3}));

  // The closed form agrees with the recursion for every source.
  for (const char* type : {"A3", "B3", "C3", "D4", "G2"}) {
    const auto cd = cartan_matrix(CartanType::parse(type));
    for (const auto& w : enumerate_w0_words(cd, 100000)) {
      for (int i = 1; i <= cd.rank(); ++i) {
        CHECK(initial_b_closed_form(w, i) == b_from_d(w, i, unit_monomial(w.size(), source_index(w, i))));
      }
    }
  }
}

TEST_CASE("firing labels and steps") {
  const auto c3 = word("C3", kC3Word);
  const Vertex v{parse_monomial(9, "t_3*t_5/t_7"), vec({1, 1, 0, 1, 1, 0, 1, 1, 1})};
  CHECK(b_from_d(c3, 2, v.d) == v.b);
  // j = 3 fires through condition (b) with p = 2, j = 5 through (a).
  CHECK(firing_labels(c3, v) == std::vector<int>{3, 5});

  const Vertex sink{parse_monomial(9, "t_7/(t_8*t_9)"), b_from_d(c3, 2, parse_monomial(9, "t_7/(t_8*t_9)"))};
  CHECK(firing_labels(c3, sink).empty());

  const Vertex down = step_vertex(c3, 2, v, 3);
  CHECK(render_monomial(down.d) == "t_4/t_7");
  CHECK(down.b == vec({1, 1, 1, 1, 0, 0, 1, 1, 1}));
  const Vertex side = step_vertex(c3, 2, v, 5);
  CHECK(render_monomial(side.d) == "t_3*t_6/t_7^2");
  CHECK(side.b == vec({1, 1, 0, 1, 2, 0, 0, 1, 1}));
}

TEST_CASE("C3 fixture") {
  const auto c3 = word("C3", kC3Word);
  const auto g = build_graph(c3, 2);
  CHECK(g.vertices().size() == 12);
  CHECK(g.edges().size() == 14);
  CHECK(monomials(g) == std::set<std::string>{"t_1", "t_2/t_3", "t_3*t_5^2/t_6", "t_3*t_5/t_7", "t_4/t_7",
                                              "t_5/t_9", "t_6/(t_7*t_9)", "t_7/(t_8*t_9)", "t_3*t_6/t_7^2",
                                              "t_3/t_8", "t_4*t_6/(t_5*t_7^2)", "t_4/(t_5*t_8)"});
  CHECK(labeled_edges(g) == std::set<LabeledEdge>{
                                {"t_1", 1, "t_2/t_3"},
                                {"t_2/t_3", 2, "t_3*t_5^2/t_6"},
                                {"t_3*t_5^2/t_6", 5, "t_3*t_5/t_7"},
                                {"t_3*t_5/t_7", 3, "t_4/t_7"},
                                {"t_3*t_5/t_7", 5, "t_3*t_6/t_7^2"},
                                {"t_4/t_7", 4, "t_5/t_9"},
                                {"t_3*t_6/t_7^2", 3, "t_4*t_6/(t_5*t_7^2)"},
                                {"t_3*t_6/t_7^2", 6, "t_3/t_8"},
                                {"t_4*t_6/(t_5*t_7^2)", 6, "t_4/(t_5*t_8)"},
                                {"t_4*t_6/(t_5*t_7^2)", 4, "t_6/(t_7*t_9)"},
                                {"t_4/(t_5*t_8)", 4, "t_7/(t_8*t_9)"},
                                {"t_3/t_8", 3, "t_4/(t_5*t_8)"},
                                {"t_5/t_9", 5, "t_6/(t_7*t_9)"},
                                {"t_6/(t_7*t_9)", 6, "t_7/(t_8*t_9)"},
                            });

  const std::map<std::string, IntVector> bs{
      {"t_1", vec({0, 0, 1, 1, 0, 1, 2, 1, 1})},
      {"t_2/t_3", vec({1, 0, 0, 1, 0, 1, 2, 1, 1})},
      {"t_3*t_5^2/t_6", vec({1, 1, 0, 1, 0, 0, 2, 1, 1})},
      {"t_3*t_5/t_7", vec({1, 1, 0, 1, 1, 0, 1, 1, 1})},
      {"t_4/t_7", vec({1, 1, 1, 1, 0, 0, 1, 1, 1})},
      {"t_3*t_6/t_7^2", vec({1, 1, 0, 1, 2, 0, 0, 1, 1})},
      {"t_5/t_9", vec({1, 1, 1, 2, 0, 0, 1, 1, 0})},
      {"t_6/(t_7*t_9)", vec({1, 1, 1, 2, 1, 0, 0, 1, 0})},
      {"t_7/(t_8*t_9)", vec({1, 1, 1, 2, 1, 1, 0, 0, 0})},
      {"t_3/t_8", vec({1, 1, 0, 1, 2, 1, 0, 0, 1})},
      {"t_4*t_6/(t_5*t_7^2)", vec({1, 1, 1, 1, 1, 0, 0, 1, 1})},
      {"t_4/(t_5*t_8)", vec({1, 1, 1, 1, 1, 1, 0, 0, 1})},
  };
  for (const auto& [m, b] : bs) {
    CAPTURE(m);
    CHECK(vertex_of(g, m.c_str()).b == b);
  }
  CHECK(g.sinks().size() == 1);
  CHECK(render_monomial(g.vertices()[g.sinks().front()].d) == "t_7/(t_8*t_9)");

  CHECK(monomials(build_graph(c3, 1)) == std::set<std::string>{"t_9"});
  CHECK(monomials(build_graph(c3, 3)) == std::set<std::string>{"t_8"});
  CHECK(build_graph(c3, 1).edges().empty());
}

TEST_CASE("D4 fixture") {
  const auto d4 = word("D4", kD4Word);
  const auto g = build_graph(d4, 2);
  CHECK(g.vertices().size() == 21);
  CHECK(g.edges().size() == 27);
  CHECK(labeled_edges(g) == std::set<LabeledEdge>{
                                {"t_1", 1, "t_2*t_3/t_4"},
                                {"t_2*t_3/t_4", 3, "t_2*t_6/t_7"},
                                {"t_2*t_3/t_4", 2, "t_3*t_6*t_8/t_9"},
                                {"t_2*t_6/t_7", 6, "t_2/t_8"},
                                {"t_2*t_6/t_7", 2, "t_4*t_6^2*t_8/(t_7*t_9)"},
                                {"t_3*t_6*t_8/t_9", 3, "t_4*t_6^2*t_8/(t_7*t_9)"},
                                {"t_3*t_6*t_8/t_9", 8, "t_3*t_6/t_10"},
                                {"t_2/t_8", 2, "t_4*t_6/t_9"},
                                {"t_4*t_6^2*t_8/(t_7*t_9)", 6, "t_4*t_6/t_9"},
                                {"t_4*t_6^2*t_8/(t_7*t_9)", 8, "t_4*t_6^2/(t_7*t_10)"},
                                {"t_3*t_6/t_10", 3, "t_4*t_6^2/(t_7*t_10)"},
                                {"t_3*t_6/t_10", 6, "t_3*t_7/(t_8*t_10)"},
                                {"t_4*t_6^2/(t_7*t_10)", 6, "t_4*t_6/(t_8*t_10)"},
                                {"t_3*t_7/(t_8*t_10)", 7, "t_3/t_11"},
                                {"t_4*t_6/(t_8*t_10)", 4, "t_5/(t_8*t_10)"},
                                {"t_4*t_6/(t_8*t_10)", 6, "t_4*t_7/(t_8^2*t_10)"},
                                {"t_3/t_11", 3, "t_4*t_6/(t_7*t_11)"},
                                {"t_5/(t_8*t_10)", 5, "t_6/t_12"},
                                {"t_4*t_7/(t_8^2*t_10)", 4, "t_5*t_7/(t_6*t_8^2*t_10)"},
                                {"t_4*t_7/(t_8^2*t_10)", 7, "t_4/(t_8*t_11)"},
                                {"t_4*t_6/(t_7*t_11)", 6, "t_4/(t_8*t_11)"},
                                {"t_6/t_12", 6, "t_7/(t_8*t_12)"},
                                {"t_5*t_7/(t_6*t_8^2*t_10)", 5, "t_7/(t_8*t_12)"},
                                {"t_5*t_7/(t_6*t_8^2*t_10)", 7, "t_5/(t_6*t_8*t_11)"},
                                {"t_4/(t_8*t_11)", 4, "t_5/(t_6*t_8*t_11)"},
                                {"t_7/(t_8*t_12)", 7, "t_10/(t_11*t_12)"},
                                {"t_5/(t_6*t_8*t_11)", 5, "t_10/(t_11*t_12)"},
                            });
  // Two sinks: the lowest term and t_4 t_6 / t_9.
  std::set<std::string> sinks;
  for (auto s : g.sinks()) sinks.insert(render_monomial(g.vertices()[s].d));
  CHECK(sinks == std::set<std::string>{"t_10/(t_11*t_12)", "t_4*t_6/t_9"});

  const auto g1 = build_graph(d4, 1);
  CHECK(labeled_edges(g1) == std::set<LabeledEdge>{{"t_8", 8, "t_9/t_10"}});
  CHECK(g1.vertices().size() == 2);
  CHECK(monomials(build_graph(d4, 3)) == std::set<std::string>{"t_11"});
  CHECK(monomials(build_graph(d4, 4)) == std::set<std::string>{"t_12"});
}

TEST_CASE("G2 fixtures") {
  const auto w1 = word("G2", {1, 2, 1, 2, 1, 2});
  const auto g = build_graph(w1, 1);
  CHECK(g.vertices().size() == 13);
  struct Expected {
    const char* monomial;
    IntVector b;
    IntVector d;
  };
  const Expected expected[] = {
      {"t_1", vec({0, 0, 1, 3, 2, 3}), vec({1, 0, 0, 0, 0, 0})},
      {"t_2^3/t_3", vec({1, 0, 0, 3, 2, 3}), vec({0, 3, -1, 0, 0, 0})},
      {"t_2^2/t_4", vec({1, 1, 0, 2, 2, 3}), vec({0, 2, 0, -1, 0, 0})},
      {"t_2*t_3/t_4^2", vec({1, 2, 0, 1, 2, 3}), vec({0, 1, 1, -2, 0, 0})},
      {"t_3^2/t_4^3", vec({1, 3, 0, 0, 2, 3}), vec({0, 0, 2, -3, 0, 0})},
      {"t_2*t_4/t_5", vec({1, 2, 1, 1, 1, 3}), vec({0, 1, 0, 1, -1, 0})},
      {"t_3/t_5", vec({1, 3, 1, 0, 1, 3}), vec({0, 0, 1, 0, -1, 0})},
      {"t_2/t_6", vec({1, 2, 1, 2, 1, 2}), vec({0, 1, 0, 0, 0, -1})},
      {"t_4^3/t_5^2", vec({1, 3, 2, 0, 0, 3}), vec({0, 0, 0, 3, -2, 0})},
      {"t_3/(t_4*t_6)", vec({1, 3, 1, 1, 1, 2}), vec({0, 0, 1, -1, 0, -1})},
      {"t_4^2/(t_5*t_6)", vec({1, 3, 2, 1, 0, 2}), vec({0, 0, 0, 2, -1, -1})},
      {"t_4/t_6^2", vec({1, 3, 2, 2, 0, 1}), vec({0, 0, 0, 1, 0, -2})},
      // Printed as (1,3,2,2,1,0); see the balance check below.
      {"t_5/t_6^3", vec({1, 3, 2, 3, 0, 0}), vec({0, 0, 0, 0, 1, -3})},
  };
  // Every b-vector of the graph has the same letter totals sum_{i_t = c} b_t
  // (3 for letter 1, 6 for letter 2). The printed annotation of the last
  // vertex does not, while the recursion and the edge update from t_4/t_6^2
  // along j = 4 both give (1,3,2,3,0,0).
  auto totals = [&](const IntVector& b) {
    std::pair<int, int> out{0, 0};
    for (int t = 1; t <= 6; ++t) (w1.letter(t) == 1 ? out.first : out.second) += b(t - 1);
    return out;
  };
  for (const auto& v : g.vertices()) CHECK(totals(v.b) == std::pair{3, 6});
  CHECK(totals(vec({1, 3, 2, 2, 1, 0})) != std::pair{3, 6});
  CHECK(step_vertex(w1, 1, vertex_of(g, "t_4/t_6^2"), 4).b == vec({1, 3, 2, 3, 0, 0}));
  for (const auto& e : expected) {
    CAPTURE(e.monomial);
    const Vertex& v = vertex_of(g, e.monomial);
    CHECK(v.d == e.d);
    CHECK(v.b == e.b);
  }
  using P = std::pair<std::string, std::string>;
  CHECK(unlabeled_edges(g) == std::set<P>{
                                  {"t_1", "t_2^3/t_3"},
                                  {"t_2^3/t_3", "t_2^2/t_4"},
                                  {"t_2^2/t_4", "t_2*t_3/t_4^2"},
                                  {"t_2*t_3/t_4^2", "t_3^2/t_4^3"},
                                  {"t_2*t_3/t_4^2", "t_2*t_4/t_5"},
                                  {"t_3^2/t_4^3", "t_3/t_5"},
                                  {"t_2*t_4/t_5", "t_2/t_6"},
                                  {"t_3/t_5", "t_4^3/t_5^2"},
                                  {"t_2/t_6", "t_3/(t_4*t_6)"},
                                  {"t_4^3/t_5^2", "t_4^2/(t_5*t_6)"},
                                  {"t_3/(t_4*t_6)", "t_4^2/(t_5*t_6)"},
                                  {"t_4^2/(t_5*t_6)", "t_4/t_6^2"},
                                  {"t_4/t_6^2", "t_5/t_6^3"},
                              });
  CHECK(g.edges().size() == 13);
  CHECK(monomials(build_graph(w1, 2)) == std::set<std::string>{"t_6"});

  const auto w2 = word("G2", {2, 1, 2, 1, 2, 1});
  const auto chain = build_graph(w2, 2);
  CHECK(unlabeled_edges(chain) == std::set<std::pair<std::string, std::string>>{
                                      {"t_1", "t_2/t_3"},
                                      {"t_2/t_3", "t_3^2/t_4"},
                                      {"t_3^2/t_4", "t_3/t_5"},
                                      {"t_3/t_5", "t_4/t_5^2"},
                                      {"t_4/t_5^2", "t_5/t_6"},
                                  });
  CHECK(chain.vertices().size() == 6);
  CHECK(monomials(build_graph(w2, 1)) == std::set<std::string>{"t_6"});
}

TEST_CASE("unsupported indices") {
  const auto f4 = first_w0_word(cartan_matrix(CartanType::parse("F4")));
  try {
    build_graph(f4, 2);
    FAIL("expected UnsupportedIndex");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedIndex);
  }
  BuildOptions force;
  force.force = true;
  force.max_vertices = 5000;
  const auto g = build_graph(f4, 2, force);
  CHECK(g.status() == SupportStatus::Unproven);
  CHECK(g.vertices().size() >= 1);
  CHECK_THROWS_AS(build_graph(f4, 5), Error);
}

TEST_CASE("determinism and invariants") {
  const auto c3 = word("C3", kC3Word);
  const auto a = build_graph(c3, 2);
  const auto b = build_graph(c3, 2);
  CHECK(identical(a, b));
  const auto report = check_invariants(a);
  CHECK(report.ok());
  CHECK(report.find("L_monotone") != nullptr);

  for (const auto& e : a.edges()) {
    CHECK(weighted_b_sum(a.vertices()[e.dst].b) < weighted_b_sum(a.vertices()[e.src].b));
  }
}

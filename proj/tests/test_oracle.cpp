#include "deco/decograph.hpp"
#include "deco/error.hpp"
#include "deco/oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using namespace deco;

namespace {

CartanData cd_of(const char* name) { return cartan_matrix(CartanType::parse(name)); }

ReducedWord word(const char* type, const std::vector<int>& letters) { return validate_word(cd_of(type), letters); }

IntVector vec(std::initializer_list<int> xs) {
  IntVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (int x : xs) v(k++) = x;
  return v;
}

std::vector<ExponentVec> sorted_vertices(const DecoGraph& g) {
  std::vector<ExponentVec> out;
  for (const auto& v : g.vertices()) out.push_back(v.d);
  std::sort(out.begin(), out.end(), ExponentLess{});
  return out;
}

}  // namespace

TEST_CASE("LaurentPoly arithmetic") {
  const auto x = LaurentPoly::monomial(vec({1, 0}));
  const auto xinv = LaurentPoly::monomial(vec({-1, 0}));
  const auto sq = (x + xinv) * (x + xinv);
  CHECK(sq.coefficient(vec({2, 0})) == 1);
  CHECK(sq.coefficient(vec({0, 0})) == 2);
  CHECK(sq.coefficient(vec({-2, 0})) == 1);
  CHECK(sq.terms().size() == 3);
  CHECK((sq - sq).is_zero());
  CHECK((x - x).terms().empty());
  CHECK((-x).coefficient(vec({1, 0})) == -1);
  CHECK(x.times_monomial(vec({0, 2})) == LaurentPoly::monomial(vec({1, 2})));

  // Coefficients do not overflow.
  LaurentPoly big = LaurentPoly::constant(1, 1);
  const auto two = LaurentPoly::constant(1, 2);
  for (int k = 0; k < 100; ++k) big = big * two;
  CHECK(big.coefficient(IntVector::Zero(1)) == (BigInt(1) << 100));
}

TEST_CASE("minuscule weights") {
  CHECK(minuscule_weights(cd_of("A3"), 2).size() == 6);
  CHECK(minuscule_weights(cd_of("C3"), 1).size() == 6);
  CHECK(minuscule_weights(cd_of("B3"), 3).size() == 8);
  CHECK(minuscule_weights(cd_of("D4"), 1).size() == 8);
  CHECK(minuscule_weights(cd_of("E6"), 1).size() == 27);
  CHECK(minuscule_weights(cd_of("E7"), 6).size() == 56);
  try {
    minuscule_weights(cd_of("C3"), 2);
    FAIL("expected NotMinuscule");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotMinuscule);
  }
}

TEST_CASE("type A minor") {
  const auto a1 = word("A1", {1});
  const auto m = typeA_minor_poly(a1, 1);
  CHECK(m.terms().size() == 1);
  CHECK(m.coefficient(vec({1})) == 1);

  // Delta_{w0 Lambda_2, s_2 Lambda_2} for A2 and word (1,2,1) is t_1 + t_2/t_3.
  const auto a2 = word("A2", {1, 2, 1});
  const auto p = typeA_minor_poly(a2, 2);
  CHECK(p.terms().size() == 2);
  CHECK(p.coefficient(vec({1, 0, 0})) == 1);
  CHECK(p.coefficient(vec({0, 1, -1})) == 1);
  CHECK(typeA_minor_poly(a2, 1).support() == std::vector<ExponentVec>{vec({0, 0, 1})});

  try {
    typeA_minor_poly(first_w0_word(cd_of("C3")), 1);
    FAIL("expected NotTypeA");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotTypeA);
  }
}

TEST_CASE("three-way agreement in type A") {
  for (const char* type : {"A1", "A2", "A3"}) {
    const auto cd = cd_of(type);
    for (const auto& w : enumerate_w0_words(cd)) {
      for (int i = 1; i <= cd.rank(); ++i) {
        CAPTURE(w.to_string());
        CAPTURE(i);
        const auto graph = sorted_vertices(build_graph(w, i));
        CHECK(graph == minuscule_trail_monomials(w, i));
        const auto minor = typeA_minor_poly(w, i);
        CHECK(minor.support() == graph);
        for (const auto& [d, c] : minor.terms()) CHECK(c > 0);
        const auto report = run_oracle(w, i);
        CHECK(report.pass());
        CHECK(report.has_minor);
      }
    }
  }
}

TEST_CASE("trails and b = c") {
  for (const char* type : {"A3", "B3", "C3", "D4"}) {
    const auto cd = cd_of(type);
    const auto w = first_w0_word(cd);
    for (int i = 1; i <= cd.rank(); ++i) {
      if (!is_minuscule(cd, i)) continue;
      CAPTURE(type);
      CAPTURE(i);
      const auto trails = minuscule_trails(w, i);
      // Minuscule trails have distinct d-vectors, so the summand is
      // multiplicity free.
      CHECK(minuscule_trail_monomials(w, i).size() == trails.size());
      for (const auto& t : trails) {
        CHECK(t.gamma.size() == static_cast<std::size_t>(w.size() + 1));
        CHECK(((t.c.array() == 0) || (t.c.array() == 1)).all());
      }
      const auto bc = crosscheck_b_equals_c(w, i);
      CHECK(bc.ok());
      CHECK(bc.trails == trails.size());
      const auto report = run_oracle(w, i);
      CHECK(report.pass());
      CHECK(report.has_minor == (cd.type().family == Family::A));
    }
  }
}

TEST_CASE("oracle report json") {
  const auto report = run_oracle(word("A2", {1, 2, 1}), 1);
  const auto j = to_json(report);
  CHECK(j["input"]["type"] == "A2");
  CHECK(j["input"]["i"] == 1);
  CHECK(j["status"] == "pass");
  CHECK(j["missing_in_graph"].empty());
}

TEST_CASE("Kostant partition counts") {
  CHECK(kostant_partition_count(cd_of("A2"), vec({0, 0})) == 1);
  CHECK(kostant_partition_count(cd_of("A2"), vec({1, 1})) == 2);
  CHECK(kostant_partition_count(cd_of("A3"), vec({1, 1, 1})) == 4);
  CHECK(kostant_partition_count(cd_of("A2"), vec({-1, 0})) == 0);
  // B2 positive roots a1, a2, a1+a2, a1+2a2 (alpha_2 short); C2 swaps the roles.
  CHECK(kostant_partition_count(cd_of("B2"), vec({1, 2})) == 3);
  CHECK(kostant_partition_count(cd_of("C2"), vec({1, 2})) == 2);
  CHECK(dual_kostant_count(cd_of("B2"), vec({1, 2})) == 2);
  // G2: a1, a2, a1+a2, a1+2a2, a1+3a2, 2a1+3a2 with alpha_2 short.
  CHECK(kostant_partition_count(cd_of("G2"), vec({1, 3})) == 4);
  CHECK(kostant_partition_count(cd_of("G2"), vec({2, 3})) == 7);
}

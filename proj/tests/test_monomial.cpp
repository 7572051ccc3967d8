#include "deco/error.hpp"
#include "deco/monomial.hpp"

#include <doctest.h>

#include <random>

using namespace deco;

namespace {

const std::vector<int> kC3Word{2, 3, 2, 1, 2, 3, 2, 3, 1};
const std::vector<int> kD4Word{2, 1, 3, 2, 4, 2, 3, 2, 1, 2, 3, 4};

ReducedWord word(const char* type, const std::vector<int>& letters) {
  return validate_word(cartan_matrix(CartanType::parse(type)), letters);
}

}  // namespace

TEST_CASE("mul and div") {
  const ExponentVec x = parse_monomial(4, "t_1*t_3^2/t_4");
  const ExponentVec zero = ExponentVec::Zero(4);
  CHECK(mul(x, zero) == x);
  CHECK(div(x, x) == zero);
  CHECK(mul(x, div(zero, x)) == zero);
  CHECK_THROWS_AS(mul(x, ExponentVec::Zero(3)), Error);
}

TEST_CASE("a_monomial") {
  const auto c3 = word("C3", kC3Word);
  CHECK(render_monomial(a_monomial(c3, 1)) == "t_1*t_3/t_2");
  CHECK(render_monomial(div(unit_monomial(9, 1), a_monomial(c3, 1))) == "t_2/t_3");
  // j+ = j+1: empty product.
  const auto a2 = word("A2", {1, 2, 1});
  const auto g2 = word("G2", {1, 2, 1, 2, 1, 2});
  CHECK(render_monomial(a_monomial(g2, 1)) == "t_1*t_3/t_2^3");
  CHECK(render_monomial(a_monomial(g2, 2)) == "t_2*t_4/t_3");
  CHECK(render_monomial(a_monomial(a2, 1)) == "t_1*t_3/t_2");

  const auto d4 = word("D4", kD4Word);
  CHECK(div(unit_monomial(12, 1), a_monomial(d4, 1)) == parse_monomial(12, "t_2*t_3/t_4"));

  try {
    a_monomial(c3, 9);
    FAIL("expected NoNextOccurrence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoNextOccurrence);
  }

  // Two +1 entries at j and j+, non-positive strictly between, zero elsewhere.
  for (const auto& w : {c3, d4, g2}) {
    for (int j = 1; j <= w.size(); ++j) {
      const int next = j_plus(w, j);
      if (next > w.size()) continue;
      const ExponentVec a = a_monomial(w, j);
      for (int l = 1; l <= w.size(); ++l) {
        if (l == j || l == next) CHECK(a(l - 1) == 1);
        else if (l > j && l < next) CHECK(a(l - 1) <= 0);
        else CHECK(a(l - 1) == 0);
      }
    }
  }
}

TEST_CASE("lowest_term") {
  const auto c3 = word("C3", kC3Word);
  CHECK(render_monomial(lowest_term(c3, 2)) == "t_7/(t_8*t_9)");
  CHECK(render_monomial(lowest_term(c3, 1)) == "t_9");
  CHECK(render_monomial(lowest_term(c3, 3)) == "t_8");
  const auto d4 = word("D4", kD4Word);
  CHECK(render_monomial(lowest_term(d4, 2)) == "t_10/(t_11*t_12)");
  for (int i = 1; i <= 4; ++i) {
    const ExponentVec low = lowest_term(d4, i);
    CHECK((low.array() > 0).count() == 1);
    CHECK(low.maxCoeff() == 1);
  }
}

TEST_CASE("render and parse") {
  CHECK(render_monomial(ExponentVec::Zero(3)) == "1");
  CHECK(render_monomial(parse_monomial(3, "1/t_2")) == "1/t_2");
  CHECK(render_monomial(parse_monomial(9, "t_3 * t_5^2 / t_6")) == "t_3*t_5^2/t_6");
  CHECK(render_monomial(parse_monomial(9, "t_4*t_6/(t_5*t_7^2)")) == "t_4*t_6/(t_5*t_7^2)");
  CHECK_THROWS_AS(parse_monomial(3, "t_4"), Error);
  CHECK_THROWS_AS(parse_monomial(3, "t_1*"), Error);
  CHECK_THROWS_AS(parse_monomial(3, "x_1"), Error);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    ExponentVec d(8);
    for (int l = 0; l < 8; ++l) d(l) = exp(rng);
    CHECK(parse_monomial(8, render_monomial(d)) == d);
  }
}

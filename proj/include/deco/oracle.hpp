#ifndef DECO_ORACLE_HPP
#define DECO_ORACLE_HPP

#include "deco/monomial.hpp"
#include "deco/rootsystem.hpp"
#include "deco/wordtools.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Brute-force computations of the summand monomial sets that share no code
// path with the graph construction: weight-path enumeration in minuscule
// modules, and literal minor expansion for type A.

namespace deco {

using BigInt = boost::multiprecision::cpp_int;

/// Exact Laurent polynomial in t_1..t_N with integer coefficients. Zero
/// coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVec, BigInt, ExponentLess>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}

  static LaurentPoly constant(int nvars, const BigInt& c);
  static LaurentPoly monomial(const ExponentVec& d, const BigInt& c = 1);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(const ExponentVec& d) const;

  void add_term(const ExponentVec& d, const BigInt& c);
  LaurentPoly times_monomial(const ExponentVec& d) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  std::vector<ExponentVec> support() const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  Terms terms_;
};

/// Weights of V(-w0 Lambda_i), i.e. the W-orbit of its highest weight.
/// Throws NotMinuscule.
std::vector<Weight> minuscule_weights(const CartanData& cd, int i);

/// An i-trail from -w0 Lambda_i to -s_i Lambda_i: gamma_0..gamma_N, the
/// exponents c_k and the monomial exponents d_k = c_k + <h_{i_k}, gamma_k>.
struct Trail {
  std::vector<Weight> gamma;
  IntVector c;
  ExponentVec d;
};

std::vector<Trail> minuscule_trails(const ReducedWord& w, int i);

/// Distinct d-vectors of the trails, sorted lexicographically.
std::vector<ExponentVec> minuscule_trail_monomials(const ReducedWord& w, int i);

/// Delta_{w0 Lambda_i, s_i Lambda_i} pulled back along the product of the
/// x_{-i_l}(t_l), computed as an (i x i) minor of an (n+1) x (n+1) matrix
/// of Laurent polynomials. Normalized to positive coefficients. Throws
/// NotTypeA or MixedSigns.
LaurentPoly typeA_minor_poly(const ReducedWord& w, int i);

struct BcReport {
  std::size_t trails = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// For every minuscule trail, b_from_d(d) must equal its exponents c.
BcReport crosscheck_b_equals_c(const ReducedWord& w, int i);

struct OracleReport {
  std::string type;
  std::vector<int> word;
  int index = 0;
  std::size_t graph_vertices = 0;
  std::size_t trail_count = 0;
  bool trails_distinct = true;
  bool has_minor = false;
  std::vector<std::string> missing_in_graph;
  std::vector<std::string> extra_in_graph;
  std::vector<std::string> oracle_disagreements;
  std::vector<std::string> bc_mismatches;
  std::vector<std::pair<std::string, std::string>> coefficient_table;

  bool pass() const;
};

/// Graph vs trails vs (type A) minor expansion for one (word, i).
OracleReport run_oracle(const ReducedWord& w, int i);

nlohmann::json to_json(const OracleReport& report);

/// Number of multisets of positive roots of cd summing to beta (simple-root
/// coordinates).
std::uint64_t kostant_partition_count(const CartanData& cd, const IntVector& beta);

/// Kostant partition count in the Langlands dual root system.
std::uint64_t dual_kostant_count(const CartanData& cd, const IntVector& beta);

}  // namespace deco

#endif

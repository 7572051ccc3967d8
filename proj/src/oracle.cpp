#include "deco/oracle.hpp"

#include "deco/decograph.hpp"
#include "deco/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace deco {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(int nvars, const BigInt& c) {
  LaurentPoly p(nvars);
  p.add_term(ExponentVec::Zero(nvars), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const ExponentVec& d, const BigInt& c) {
  LaurentPoly p(static_cast<int>(d.size()));
  p.add_term(d, c);
  return p;
}

BigInt LaurentPoly::coefficient(const ExponentVec& d) const {
  const auto it = terms_.find(d);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void LaurentPoly::add_term(const ExponentVec& d, const BigInt& c) {
  if (d.size() != nvars_) throw Error(ErrorKind::LengthMismatch, "term has " + std::to_string(d.size()) + " variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::times_monomial(const ExponentVec& d) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(mul(e, d), c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (terms_.empty()) nvars_ = other.nvars_;
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(mul(ea, eb), ca * cb);
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::vector<ExponentVec> LaurentPoly::support() const {
  std::vector<ExponentVec> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (mag != 1) os << mag << "*";
    os << render_monomial(e);
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Minuscule trails

namespace {

struct CoordLess {
  bool operator()(const Weight& a, const Weight& b) const { return ExponentLess{}(a.coords, b.coords); }
};

Weight w0_action(const ReducedWord& w, Weight lambda) {
  for (int l = w.size(); l >= 1; --l) lambda = reflect(w.cartan(), w.letter(l), lambda);
  return lambda;
}

void require_minuscule(const CartanData& cd, int i) {
  if (max_coroot_coefficient(cd, i) > 1) {
    throw Error(ErrorKind::NotMinuscule, "V(Lambda_" + std::to_string(i) + ") of " + cd.type().name() +
                                             " is not minuscule");
  }
}

}  // namespace

std::vector<Weight> minuscule_weights(const CartanData& cd, int i) {
  require_minuscule(cd, i);
  const ReducedWord w0 = first_w0_word(cd);
  const Weight highest = -w0_action(w0, fundamental_weight(cd, i));
  std::set<Weight, CoordLess> seen{highest};
  std::deque<Weight> queue{highest};
  while (!queue.empty()) {
    const Weight mu = queue.front();
    queue.pop_front();
    for (int j = 1; j <= cd.rank(); ++j) {
      Weight image = reflect(cd, j, mu);
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Trail> minuscule_trails(const ReducedWord& w, int i) {
  const auto& cd = w.cartan();
  const auto weights = minuscule_weights(cd, i);
  const std::set<Weight, CoordLess> in_module(weights.begin(), weights.end());
  const int N = w.size();

  const Weight start = -w0_action(w, fundamental_weight(cd, i));
  const Weight end = -reflect(cd, i, fundamental_weight(cd, i));

  // Walk backwards from gamma_N = end: gamma_{k-1} = gamma_k + c_k alpha_{i_k}.
  // One-dimensional weight spaces make e_j an isomorphism between adjacent
  // weights, so every such path is a trail.
  std::vector<Trail> out;
  std::vector<Weight> gamma(N + 1);
  IntVector c = IntVector::Zero(N);
  gamma[N] = end;
  std::function<void(int)> walk = [&](int k) {
    if (k == 0) {
      if (!(gamma[0] == start)) return;
      Trail t{gamma, c, ExponentVec(N)};
      for (int l = 1; l <= N; ++l) t.d(l - 1) = c(l - 1) + gamma[l].pairing(w.letter(l));
      out.push_back(std::move(t));
      return;
    }
    const int letter = w.letter(k);
    c(k - 1) = 0;
    gamma[k - 1] = gamma[k];
    walk(k - 1);
    Weight raised = gamma[k] + simple_root_weight(cd, letter);
    if (in_module.count(raised)) {
      c(k - 1) = 1;
      gamma[k - 1] = std::move(raised);
      walk(k - 1);
      c(k - 1) = 0;
    }
  };
  walk(N);
  return out;
}

std::vector<ExponentVec> minuscule_trail_monomials(const ReducedWord& w, int i) {
  std::set<ExponentVec, ExponentLess> distinct;
  for (const auto& t : minuscule_trails(w, i)) distinct.insert(t.d);
  return {distinct.begin(), distinct.end()};
}

// ---------------------------------------------------------------------------
// Type A minor expansion

namespace {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly determinant(const PolyMatrix& m, std::vector<int> rows, const std::vector<int>& cols, int nvars) {
  if (rows.empty()) return LaurentPoly::constant(nvars, 1);
  const int r = rows.front();
  std::vector<int> rest(rows.begin() + 1, rows.end());
  LaurentPoly det(nvars);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& entry = m[r][cols[k]];
    if (entry.is_zero()) continue;
    std::vector<int> minor_cols = cols;
    minor_cols.erase(minor_cols.begin() + static_cast<std::ptrdiff_t>(k));
    const LaurentPoly term = entry * determinant(m, rest, minor_cols, nvars);
    if (k % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

}  // namespace

LaurentPoly typeA_minor_poly(const ReducedWord& w, int i) {
  const auto& cd = w.cartan();
  if (cd.type().family != Family::A) {
    throw Error(ErrorKind::NotTypeA, cd.type().name() + " has no matrix-minor oracle");
  }
  check_index(cd, i);
  const int n = cd.rank();
  const int size = n + 1;
  const int N = w.size();

  // Running product x_{-i_1}(t_1) ... x_{-i_l}(t_l), 0-based storage.
  PolyMatrix m(size, std::vector<LaurentPoly>(size, LaurentPoly(N)));
  for (int r = 0; r < size; ++r) m[r][r] = LaurentPoly::constant(N, 1);
  for (int l = 1; l <= N; ++l) {
    // Right multiplication by the block [[t^-1, 0], [1, t]] on columns (a, a+1).
    const int a = w.letter(l) - 1;
    const ExponentVec t = unit_monomial(N, l);
    for (int r = 0; r < size; ++r) {
      LaurentPoly left = m[r][a].times_monomial(-t) + m[r][a + 1];
      LaurentPoly right = m[r][a + 1].times_monomial(t);
      m[r][a] = std::move(left);
      m[r][a + 1] = std::move(right);
    }
  }

  // Rows w0([1,i]) = {n+2-i, ..., n+1}; columns s_i([1,i]) = [1,i-1] u {i+1}.
  std::vector<int> rows;
  for (int r = n + 2 - i; r <= n + 1; ++r) rows.push_back(r - 1);
  std::vector<int> cols;
  for (int c = 1; c < i; ++c) cols.push_back(c - 1);
  cols.push_back(i);

  LaurentPoly det = determinant(m, rows, cols, N);
  bool any_pos = false;
  bool any_neg = false;
  for (const auto& [e, c] : det.terms()) (c > 0 ? any_pos : any_neg) = true;
  if (any_pos && any_neg) {
    throw Error(ErrorKind::MixedSigns, "minor for i=" + std::to_string(i) + " on word " + w.to_string() +
                                           " has mixed signs: " + det.to_string());
  }
  return any_neg ? -det : det;
}

// ---------------------------------------------------------------------------
// Cross-checks

BcReport crosscheck_b_equals_c(const ReducedWord& w, int i) {
  BcReport report;
  for (const auto& t : minuscule_trails(w, i)) {
    ++report.trails;
    const BVector b = b_from_d(w, i, t.d);
    if (b != t.c) report.mismatches.push_back(render_monomial(t.d));
  }
  return report;
}

bool OracleReport::pass() const {
  return trails_distinct && missing_in_graph.empty() && extra_in_graph.empty() && oracle_disagreements.empty() &&
         bc_mismatches.empty();
}

OracleReport run_oracle(const ReducedWord& w, int i) {
  OracleReport report;
  report.type = w.cartan().type().name();
  report.word = w.letters();
  report.index = i;

  const DecoGraph g = build_graph(w, i);
  std::set<ExponentVec, ExponentLess> graph_set;
  for (const auto& v : g.vertices()) graph_set.insert(v.d);
  report.graph_vertices = graph_set.size();

  const auto trails = minuscule_trails(w, i);
  report.trail_count = trails.size();
  std::set<ExponentVec, ExponentLess> trail_set;
  for (const auto& t : trails) trail_set.insert(t.d);
  report.trails_distinct = trail_set.size() == trails.size();

  std::set<ExponentVec, ExponentLess> oracle_set = trail_set;
  if (w.cartan().type().family == Family::A) {
    report.has_minor = true;
    const LaurentPoly minor = typeA_minor_poly(w, i);
    std::set<ExponentVec, ExponentLess> minor_set;
    for (const auto& [e, c] : minor.terms()) {
      minor_set.insert(e);
      report.coefficient_table.emplace_back(render_monomial(e), c.str());
    }
    for (const auto& e : minor_set) {
      if (!trail_set.count(e)) report.oracle_disagreements.push_back("minor-only " + render_monomial(e));
    }
    for (const auto& e : trail_set) {
      if (!minor_set.count(e)) report.oracle_disagreements.push_back("trail-only " + render_monomial(e));
    }
    oracle_set.insert(minor_set.begin(), minor_set.end());
  }

  for (const auto& e : oracle_set) {
    if (!graph_set.count(e)) report.missing_in_graph.push_back(render_monomial(e));
  }
  for (const auto& e : graph_set) {
    if (!oracle_set.count(e)) report.extra_in_graph.push_back(render_monomial(e));
  }
  report.bc_mismatches = crosscheck_b_equals_c(w, i).mismatches;
  return report;
}

nlohmann::json to_json(const OracleReport& report) {
  nlohmann::json out;
  out["input"] = {{"type", report.type}, {"word", report.word}, {"i", report.index}};
  out["status"] = report.pass() ? "pass" : "fail";
  out["graph_vertices"] = report.graph_vertices;
  out["trail_count"] = report.trail_count;
  out["trails_distinct"] = report.trails_distinct;
  out["missing_in_graph"] = report.missing_in_graph;
  out["extra_in_graph"] = report.extra_in_graph;
  out["oracle_disagreements"] = report.oracle_disagreements;
  out["b_equals_c_mismatches"] = report.bc_mismatches;
  auto& table = out["coefficient_table"] = nlohmann::json::array();
  for (const auto& [monomial, coefficient] : report.coefficient_table) {
    table.push_back({{"monomial", monomial}, {"coefficient", coefficient}});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Kostant partition function

std::uint64_t kostant_partition_count(const CartanData& cd, const IntVector& beta) {
  if (beta.size() != cd.rank()) throw Error(ErrorKind::LengthMismatch, "beta has length " + std::to_string(beta.size()));
  if ((beta.array() < 0).any()) return 0;
  const auto roots = positive_roots(cd);
  std::map<std::pair<std::size_t, std::vector<int>>, std::uint64_t> memo;
  std::function<std::uint64_t(std::size_t, const IntVector&)> count = [&](std::size_t idx,
                                                                           const IntVector& rest) -> std::uint64_t {
    if ((rest.array() == 0).all()) return 1;
    if (idx == roots.size()) return 0;
    const auto key = std::make_pair(idx, std::vector<int>(rest.begin(), rest.end()));
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (IntVector r = rest; (r.array() >= 0).all(); r -= roots[idx].coeffs) total += count(idx + 1, r);
    memo.emplace(key, total);
    return total;
  };
  return count(0, beta);
}

std::uint64_t dual_kostant_count(const CartanData& cd, const IntVector& beta) {
  return kostant_partition_count(cd.dual(), beta);
}

}  // namespace deco

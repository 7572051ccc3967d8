#include "deco/decograph.hpp"

#include "deco/error.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace deco {

namespace {

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index k = 0; k < v.size(); ++k) os << (k ? "," : "") << v(k);
  os << ')';
  return os.str();
}

Weight s_i_lambda_i(const CartanData& cd, int i) { return reflect(cd, i, fundamental_weight(cd, i)); }

bool all_nonnegative(const IntVector& v) { return (v.array() >= 0).all(); }

// Condition (b): d_{j+} = d_j and, walking j^{2+}, j^{3+}, ..., a run of
// (d, b) = (0, 0) positions ends in a (-1, 1) position before N+1.
bool condition_b(const ReducedWord& w, const Vertex& v, int j) {
  const int N = w.size();
  for (int q = j_iter(w, j, 2, Direction::Plus); q <= N; q = w.plus(q)) {
    const int d = v.d(q - 1);
    const int b = v.b(q - 1);
    if (d == 0 && b == 0) continue;
    return d == -1 && b == 1;
  }
  return false;
}

}  // namespace

std::string_view to_string(SupportStatus status) {
  switch (status) {
    case SupportStatus::MinusculeLike: return "MinusculeLike";
    case SupportStatus::G2Proven: return "G2Proven";
    case SupportStatus::Unproven: return "Unproven";
  }
  return "Unknown";
}

SupportStatus supported(const CartanType& type, int i) {
  if (i < 1 || i > type.rank) throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i));
  auto in = [i](std::initializer_list<int> list) { return std::find(list.begin(), list.end(), i) != list.end(); };
  switch (type.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: return SupportStatus::MinusculeLike;
    case Family::E:
      if (type.rank == 6 && in({1, 2, 4, 5, 6})) return SupportStatus::MinusculeLike;
      if (type.rank == 7 && in({1, 5, 6, 7})) return SupportStatus::MinusculeLike;
      if (type.rank == 8 && in({1, 7})) return SupportStatus::MinusculeLike;
      return SupportStatus::Unproven;
    case Family::F: return in({1, 4}) ? SupportStatus::MinusculeLike : SupportStatus::Unproven;
    case Family::G: return SupportStatus::G2Proven;
  }
  return SupportStatus::Unproven;
}

bool is_minuscule(const CartanData& cd, int i) { return max_coroot_coefficient(cd, i) <= 1; }

bool satisfies_level_two(const CartanData& cd, int i) { return max_coroot_coefficient(cd, i) <= 2; }

DecoGraph::DecoGraph(ReducedWord word, int index, SupportStatus status)
    : word_(std::move(word)), index_(index), status_(status) {}

std::optional<std::size_t> DecoGraph::find(const ExponentVec& d) const {
  const auto it = lookup_.find(d);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> DecoGraph::out_degree() const {
  std::vector<std::size_t> deg(vertices_.size(), 0);
  for (const auto& e : edges_) ++deg[e.src];
  return deg;
}

std::vector<std::size_t> DecoGraph::sinks() const {
  const auto deg = out_degree();
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) out.push_back(v);
  }
  return out;
}

std::pair<std::size_t, bool> DecoGraph::insert(Vertex v) {
  const auto [it, inserted] = lookup_.try_emplace(v.d, vertices_.size());
  if (inserted) vertices_.push_back(std::move(v));
  return {it->second, inserted};
}

BVector b_from_d(const ReducedWord& w, int i, const ExponentVec& d) {
  const auto& cd = w.cartan();
  const int N = w.size();
  if (d.size() != N) {
    throw Error(ErrorKind::LengthMismatch, "exponent vector has length " + std::to_string(d.size()));
  }
  BVector b(N);
  Weight gamma = s_i_lambda_i(cd, i);
  for (int t = N; t >= 1; --t) {
    const int letter = w.letter(t);
    b(t - 1) = d(t - 1) + gamma.pairing(letter);
    gamma = gamma - b(t - 1) * simple_root_weight(cd, letter);
  }
  return b;
}

BVector initial_b_closed_form(const ReducedWord& w, int i) {
  const auto& cd = w.cartan();
  const int N = w.size();
  const int k = source_index(w, i);
  BVector b(N);
  // nu_t = s_{i_{t+1}} ... s_{i_N} s_i Lambda_i and mu_t likewise applied to Lambda_i.
  Weight nu = s_i_lambda_i(cd, i);
  Weight mu = fundamental_weight(cd, i);
  for (int t = N; t >= 1; --t) {
    const int letter = w.letter(t);
    if (t > k) {
      b(t - 1) = nu.pairing(letter);
    } else if (t == k) {
      b(t - 1) = 0;
    } else {
      b(t - 1) = mu.pairing(letter);
    }
    nu = reflect(cd, letter, nu);
    mu = reflect(cd, letter, mu);
  }
  return b;
}

Vertex initial_vertex(const ReducedWord& w, int i) {
  const int k = source_index(w, i);
  Vertex v{unit_monomial(w.size(), k), {}};
  v.b = b_from_d(w, i, v.d);
  const BVector closed = initial_b_closed_form(w, i);
  if (v.b != closed) {
    throw Error(ErrorKind::ClosedFormMismatch,
                "source t_" + std::to_string(k) + ": recursion gives " + vec_str(v.b) + ", closed form " + vec_str(closed));
  }
  return v;
}

std::vector<int> firing_labels(const ReducedWord& w, const Vertex& v) {
  const int N = w.size();
  std::vector<int> out;
  for (int j = 1; j <= N; ++j) {
    const int next = w.plus(j);
    if (next > N) continue;
    const int dj = v.d(j - 1);
    const int dn = v.d(next - 1);
    if (dj <= 0 || v.b(next - 1) <= 0) continue;
    if (dn < dj || (dn == dj && condition_b(w, v, j))) out.push_back(j);
  }
  return out;
}

std::vector<int> firing_labels_minuscule(const ReducedWord& w, int i, const Vertex& v) {
  if (!is_minuscule(w.cartan(), i)) {
    throw Error(ErrorKind::NotMinuscule, "V(Lambda_" + std::to_string(i) + ") of " + w.cartan().type().name() +
                                             " is not minuscule");
  }
  const int N = w.size();
  std::vector<int> out;
  for (int j = 1; j <= N; ++j) {
    const int next = w.plus(j);
    if (next <= N && v.d(j - 1) == 1 && v.d(next - 1) != 1) out.push_back(j);
  }
  return out;
}

Vertex step_vertex(const ReducedWord& w, int i, const Vertex& v, int j) {
  const int next = w.plus(j);
  Vertex out{div(v.d, a_monomial(w, j)), v.b};
  out.b(j - 1) += 1;
  out.b(next - 1) -= 1;
  const BVector expected = b_from_d(w, i, out.d);
  if (out.b != expected) {
    throw Error(ErrorKind::BUpdateMismatch, render_monomial(v.d) + " --" + std::to_string(j) + "--> " +
                                                render_monomial(out.d) + ": updated b " + vec_str(out.b) +
                                                " but recursion gives " + vec_str(expected));
  }
  return out;
}

DecoGraph build_graph(const ReducedWord& w, int i, const BuildOptions& options) {
  const auto& cd = w.cartan();
  check_index(cd, i);
  const SupportStatus status = supported(cd.type(), i);
  if (status == SupportStatus::Unproven && !options.force) {
    throw Error(ErrorKind::UnsupportedIndex, "(" + cd.type().name() + ", i=" + std::to_string(i) +
                                                 ") is outside the proven range; use force to build anyway");
  }
  if (options.minuscule_fast_path && !is_minuscule(cd, i)) {
    throw Error(ErrorKind::NotMinuscule, "fast path requested for non-minuscule V(Lambda_" + std::to_string(i) + ")");
  }

  DecoGraph g(w, i, status);
  g.insert(initial_vertex(w, i));

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t current = queue.front();
    queue.pop_front();
    const Vertex v = g.vertices()[current];
    const auto labels = options.minuscule_fast_path ? firing_labels_minuscule(w, i, v) : firing_labels(w, v);
    for (int j : labels) {
      Vertex next;
      try {
        next = step_vertex(w, i, v, j);
      } catch (const Error& e) {
        if (!options.force || e.kind() != ErrorKind::BUpdateMismatch) throw;
        g.note(e.what());
        next = Vertex{div(v.d, a_monomial(w, j)), {}};
        next.b = b_from_d(w, i, next.d);
      }
      const auto [target, inserted] = g.insert(next);
      if (!inserted && g.vertices()[target].b != next.b) {
        const std::string msg = "merge at " + render_monomial(next.d) + ": stored b " +
                                vec_str(g.vertices()[target].b) + " differs from incoming " + vec_str(next.b);
        if (!options.force) throw Error(ErrorKind::BUpdateMismatch, msg);
        g.note(msg);
      }
      g.add_edge({current, j, target});
      if (inserted) {
        if (g.vertices().size() > options.max_vertices) {
          throw Error(ErrorKind::VertexLimit, "more than " + std::to_string(options.max_vertices) + " vertices");
        }
        queue.push_back(target);
      }
    }
  }

  if (options.force && status == SupportStatus::Unproven) {
    for (const auto& check : check_invariants(g).checks) {
      for (const auto& detail : check.details) g.note(check.name + ": " + detail);
    }
  }
  return g;
}

long long weighted_b_sum(const BVector& b) {
  long long sum = 0;
  for (Eigen::Index t = 0; t < b.size(); ++t) sum += static_cast<long long>(t + 1) * b(t);
  return sum;
}

bool InvariantReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck& c) { return c.passed; });
}

const InvariantCheck* InvariantReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

InvariantReport check_invariants(const DecoGraph& g) {
  const auto& w = g.word();
  const int i = g.index();
  const int N = w.size();
  const auto& vs = g.vertices();
  InvariantReport report;
  auto add = [&report](std::string name) -> InvariantCheck& {
    report.checks.push_back({std::move(name), true, {}});
    return report.checks.back();
  };
  auto fail = [](InvariantCheck& c, std::string detail) {
    c.passed = false;
    c.details.push_back(std::move(detail));
  };

  {
    auto& c = add("unique_source");
    const ExponentVec tk = unit_monomial(N, source_index(w, i));
    std::vector<std::size_t> nonneg;
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (all_nonnegative(vs[v].d)) nonneg.push_back(v);
    }
    if (nonneg.size() != 1 || vs[nonneg.front()].d != tk) {
      fail(c, std::to_string(nonneg.size()) + " vertices with nonnegative exponents; expected exactly " +
                  render_monomial(tk));
    }
    std::vector<bool> has_in(vs.size(), false);
    for (const auto& e : g.edges()) has_in[e.dst] = true;
    for (std::size_t v = 0; v < vs.size(); ++v) {
      if (!has_in[v] && v != g.source()) fail(c, "extra source " + render_monomial(vs[v].d));
    }
    if (!vs.empty() && has_in[g.source()]) fail(c, "source has an incoming edge");
  }
  {
    auto& c = add("lowest_term_sink");
    const ExponentVec low = lowest_term(w, i);
    const auto idx = g.find(low);
    if (!idx) {
      fail(c, render_monomial(low) + " is not a vertex");
    } else if (g.out_degree()[*idx] != 0) {
      fail(c, render_monomial(low) + " has outgoing edges");
    }
  }
  auto& division = add("edge_division");
  auto& update = add("b_update");
  auto& gate = add("arrow_gate");
  auto& monotone = add("L_monotone");
  for (const auto& e : g.edges()) {
    const auto& src = vs[e.src];
    const auto& dst = vs[e.dst];
    const int next = w.plus(e.label);
    const std::string tag = render_monomial(src.d) + " --" + std::to_string(e.label) + "--> " + render_monomial(dst.d);
    if (next > N) {
      fail(division, tag + ": label has no next occurrence");
      continue;
    }
    if (dst.d != div(src.d, a_monomial(w, e.label))) fail(division, tag);
    BVector expected = src.b;
    expected(e.label - 1) += 1;
    expected(next - 1) -= 1;
    if (dst.b != expected) fail(update, tag);
    if (src.d(e.label - 1) <= 0 || src.b(next - 1) <= 0) fail(gate, tag);
    const long long before = weighted_b_sum(src.b);
    const long long after = weighted_b_sum(dst.b);
    if (after != before + e.label - next || after >= before) fail(monotone, tag);
  }
  auto& consistent = add("b_consistency");
  auto& nonneg = add("b_nonnegative");
  for (const auto& v : vs) {
    if (v.b != b_from_d(w, i, v.d)) fail(consistent, render_monomial(v.d));
    if (!all_nonnegative(v.b)) fail(nonneg, render_monomial(v.d) + " b=" + vec_str(v.b));
  }
  return report;
}

bool identical(const DecoGraph& a, const DecoGraph& b) {
  if (a.vertices().size() != b.vertices().size() || a.edges() != b.edges()) return false;
  for (std::size_t v = 0; v < a.vertices().size(); ++v) {
    if (a.vertices()[v].d != b.vertices()[v].d || a.vertices()[v].b != b.vertices()[v].b) return false;
  }
  return true;
}

}  // namespace deco

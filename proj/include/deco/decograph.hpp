#ifndef DECO_DECOGRAPH_HPP
#define DECO_DECOGRAPH_HPP

#include "deco/monomial.hpp"
#include "deco/rootsystem.hpp"
#include "deco/wordtools.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace deco {

/// The b-integers attached to a monomial. On graph vertices they coincide
/// with the exponents c_t of the corresponding trail.
using BVector = IntVector;

struct Vertex {
  ExponentVec d;
  BVector b;
};

/// src --label--> dst, where label is the word position j and
/// dst = src * A_j^{-1}.
struct Edge {
  std::size_t src;
  int label;
  std::size_t dst;

  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class SupportStatus { MinusculeLike, G2Proven, Unproven };

std::string_view to_string(SupportStatus status);

/// Whether the graph algorithm is known to produce the full monomial set of
/// the summand indexed by i.
SupportStatus supported(const CartanType& type, int i);

/// V(Lambda_i) is minuscule: every weight pairs with every h_t into {-1,0,1}.
bool is_minuscule(const CartanData& cd, int i);

/// Every weight of V(Lambda_i) pairs with every h_t into {-2,...,2}.
bool satisfies_level_two(const CartanData& cd, int i);

/// Decoration graph for one summand. Vertex 0 is the source t_k; vertices
/// and edges are stored in creation order, which is deterministic.
class DecoGraph {
 public:
  DecoGraph(ReducedWord word, int index, SupportStatus status);

  const ReducedWord& word() const { return word_; }
  int index() const { return index_; }
  SupportStatus status() const { return status_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t source() const { return 0; }
  std::optional<std::size_t> find(const ExponentVec& d) const;
  std::vector<std::size_t> sinks() const;
  std::vector<std::size_t> out_degree() const;

  /// Findings recorded instead of thrown when a graph is built in force mode.
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

  /// Returns (index, inserted).
  std::pair<std::size_t, bool> insert(Vertex v);
  void add_edge(Edge e) { edges_.push_back(e); }
  void note(std::string message) { diagnostics_.push_back(std::move(message)); }

 private:
  ReducedWord word_;
  int index_;
  SupportStatus status_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<ExponentVec, std::size_t, ExponentHash, ExponentEqual> lookup_;
  std::vector<std::string> diagnostics_;
};

/// Downward recursion b_N = d_N + <h_{i_N}, s_i Lambda_i>,
/// b_t = d_t + <h_{i_t}, s_i Lambda_i - sum_{l>t} b_l alpha_{i_l}>.
BVector b_from_d(const ReducedWord& w, int i, const ExponentVec& d);

/// b-vector of the source t_k via the reflection closed form (no recursion).
BVector initial_b_closed_form(const ReducedWord& w, int i);

/// The source t_k. Throws ClosedFormMismatch if the recursion and the
/// closed form disagree.
Vertex initial_vertex(const ReducedWord& w, int i);

/// Positions j at which an arrow v -> v * A_j^{-1} is drawn. Ascending.
std::vector<int> firing_labels(const ReducedWord& w, const Vertex& v);

/// Rule valid for minuscule V(Lambda_i): d_j = 1 and d_{j+} != 1.
/// Throws NotMinuscule otherwise.
std::vector<int> firing_labels_minuscule(const ReducedWord& w, int i, const Vertex& v);

/// v * A_j^{-1} with b' = b + e_j - e_{j+}. Throws BUpdateMismatch when the
/// updated b differs from b_from_d of the new exponents.
Vertex step_vertex(const ReducedWord& w, int i, const Vertex& v, int j);

struct BuildOptions {
  bool force = false;
  bool minuscule_fast_path = false;
  std::size_t max_vertices = 1'000'000;
};

/// Worklist construction of the decoration graph. Throws UnsupportedIndex
/// for Unproven (type, i) unless options.force is set; in force mode
/// consistency failures are recorded in diagnostics() instead of thrown.
DecoGraph build_graph(const ReducedWord& w, int i, const BuildOptions& options = {});

/// L(M) = sum_t t * b_t; strictly decreasing along every edge.
long long weighted_b_sum(const BVector& b);

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;

  bool ok() const;
  const InvariantCheck* find(std::string_view name) const;
};

/// Runtime checks of the structural facts the construction relies on:
/// unique nonnegative source, lowest term is a sink, edge division by A_j,
/// b-update and b-consistency, nonnegative b, arrow gate, L-monotonicity.
InvariantReport check_invariants(const DecoGraph& g);

/// Same vertices (d and b) and edges in the same order.
bool identical(const DecoGraph& a, const DecoGraph& b);

}  // namespace deco

#endif

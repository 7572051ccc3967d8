#ifndef DECO_ROOTSYSTEM_HPP
#define DECO_ROOTSYSTEM_HPP

#include <Eigen/Core>

#include <string>
#include <string_view>
#include <vector>

namespace deco {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = Vector<int>;
using IntMatrix = Matrix<int>;

enum class Family { A, B, C, D, E, F, G };

/// A finite Cartan type such as A3, C3, D4 or G2.
struct CartanType {
  Family family;
  int rank;

  /// Throws InvalidCartanType when (family, rank) is not a finite type.
  CartanType(Family family, int rank);

  /// Parses strings like "A3", "c3", "G2".
  static CartanType parse(std::string_view text);

  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Integral weight in fundamental-weight coordinates: coords[t-1] = <h_t, lambda>.
struct Weight {
  IntVector coords;

  int pairing(int t) const { return coords(t - 1); }
  int size() const { return static_cast<int>(coords.size()); }

  friend Weight operator+(const Weight& a, const Weight& b) { return {a.coords + b.coords}; }
  friend Weight operator-(const Weight& a, const Weight& b) { return {a.coords - b.coords}; }
  friend Weight operator-(const Weight& a) { return {-a.coords}; }
  friend Weight operator*(int k, const Weight& a) { return {k * a.coords}; }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
};

/// Element of the root lattice in simple-root coordinates.
struct Root {
  IntVector coeffs;

  bool is_positive() const { return (coeffs.array() >= 0).all() && (coeffs.array() > 0).any(); }
  int height() const { return coeffs.sum(); }

  friend Root operator+(const Root& a, const Root& b) { return {a.coeffs + b.coeffs}; }
  friend Root operator-(const Root& a) { return {-a.coeffs}; }
  friend bool operator==(const Root& a, const Root& b) {
    return a.coeffs.size() == b.coeffs.size() && a.coeffs == b.coeffs;
  }
};

/// Cartan matrix in Kac numbering with a(i, j) = alpha_j(h_i). Public
/// accessors use 1-based indices; matrix() exposes the 0-based storage.
class CartanData {
 public:
  explicit CartanData(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return static_cast<int>(a_.rows()); }
  const IntMatrix& matrix() const { return a_; }

  int a(int i, int j) const { return a_(i - 1, j - 1); }

  /// Langlands dual: the transposed Cartan matrix. The type label is kept
  /// (B and C swap, which callers that care handle themselves).
  CartanData dual() const;

 private:
  friend CartanData cartan_matrix(CartanType type);
  CartanData(CartanType type, IntMatrix a);

  CartanType type_;
  IntMatrix a_;
};

CartanData cartan_matrix(CartanType type);

Weight fundamental_weight(const CartanData& cd, int i);
Weight zero_weight(const CartanData& cd);

/// alpha_j in fundamental-weight coordinates, i.e. column j of the Cartan matrix.
Weight simple_root_weight(const CartanData& cd, int j);
Weight to_weight(const CartanData& cd, const Root& beta);
Root simple_root(const CartanData& cd, int j);

/// s_j(lambda) = lambda - <h_j, lambda> alpha_j.
Weight reflect(const CartanData& cd, int j, const Weight& lambda);
Root reflect_root(const CartanData& cd, int j, const Root& beta);

/// Positive roots ordered by height, then lexicographically by coefficients.
std::vector<Root> positive_roots(const CartanData& cd);

/// Largest coefficient of alpha_i^vee among the positive coroots. Equals the
/// maximum of |<h_t, mu>| over weights mu of the fundamental module V(Lambda_i).
int max_coroot_coefficient(const CartanData& cd, int i);

void check_index(const CartanData& cd, int i);

}  // namespace deco

#endif

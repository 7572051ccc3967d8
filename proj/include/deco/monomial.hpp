#ifndef DECO_MONOMIAL_HPP
#define DECO_MONOMIAL_HPP

#include "deco/rootsystem.hpp"
#include "deco/wordtools.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace deco {

/// Laurent monomial t_1^{d_1} ... t_N^{d_N} stored as its exponent vector.
/// The same type doubles as a cone inequality row and as a lattice point.
using ExponentVec = IntVector;

struct ExponentHash {
  std::size_t operator()(const ExponentVec& d) const noexcept {
    std::size_t h = static_cast<std::size_t>(d.size());
    for (int x : d) h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct ExponentEqual {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return a.size() == b.size() && a == b;
  }
};

struct ExponentLess {
  bool operator()(const ExponentVec& a, const ExponentVec& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

ExponentVec mul(const ExponentVec& a, const ExponentVec& b);
ExponentVec div(const ExponentVec& a, const ExponentVec& b);

/// t_k as an exponent vector of length N.
ExponentVec unit_monomial(int N, int k);

/// A_j = t_j t_{j+} prod_{j<l<j+} t_l^{a(i_l, i_j)}. Throws NoNextOccurrence
/// when j is the last occurrence of its letter.
ExponentVec a_monomial(const ReducedWord& w, int j);

/// t_J t_{J+1}^{a(i_{J+1}, i)} ... t_N^{a(i_N, i)} with J the last position
/// carrying letter i.
ExponentVec lowest_term(const ReducedWord& w, int i);

/// "t_1", "t_2/t_3", "t_3*t_5^2/t_6", "t_6/(t_7*t_9)", "1/t_8", "1".
std::string render_monomial(const ExponentVec& d);

/// Inverse of render_monomial; also accepts whitespace around factors.
ExponentVec parse_monomial(int N, std::string_view text);

}  // namespace deco

#endif

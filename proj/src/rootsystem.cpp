#include "deco/rootsystem.hpp"

#include "deco/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

namespace deco {

namespace {

bool legal(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B:
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

char family_letter(Family family) { return "ABCDEFG"[static_cast<int>(family)]; }

void bond(IntMatrix& a, int i, int j, int aij = -1, int aji = -1) {
  a(i - 1, j - 1) = aij;
  a(j - 1, i - 1) = aji;
}

struct CoeffLess {
  bool operator()(const IntVector& x, const IntVector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

}  // namespace

CartanType::CartanType(Family family_, int rank_) : family(family_), rank(rank_) {
  if (!legal(family, rank)) {
    throw Error(ErrorKind::InvalidCartanType,
                std::string(1, family_letter(family)) + std::to_string(rank) + " is not a finite type");
  }
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw Error(ErrorKind::InvalidCartanType, "cannot parse '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G') {
    throw Error(ErrorKind::InvalidCartanType, "unknown family in '" + std::string(text) + "'");
  }
  int rank = 0;
  const auto digits = text.substr(1);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::InvalidCartanType, "bad rank in '" + std::string(text) + "'");
  }
  return CartanType(static_cast<Family>(letter - 'A'), rank);
}

std::string CartanType::name() const { return family_letter(family) + std::to_string(rank); }

CartanData::CartanData(CartanType type) : CartanData(cartan_matrix(type)) {}

CartanData::CartanData(CartanType type, IntMatrix a) : type_(type), a_(std::move(a)) {}

CartanData CartanData::dual() const { return CartanData(type_, a_.transpose()); }

CartanData cartan_matrix(CartanType type) {
  const int n = type.rank;
  IntMatrix a = 2 * IntMatrix::Identity(n, n);
  switch (type.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(a, i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(a, i, i + 1);
      bond(a, n - 1, n, -1, -2);  // alpha_n short
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(a, i, i + 1);
      bond(a, n - 1, n, -2, -1);  // alpha_n long
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(a, i, i + 1);
      bond(a, n - 2, n);
      break;
    case Family::E:
      // Chain 1..n-1; node n hangs off node 3 (E6, E7) or node 5 (E8).
      for (int i = 1; i < n - 1; ++i) bond(a, i, i + 1);
      bond(a, n == 8 ? 5 : 3, n);
      break;
    case Family::F:
      bond(a, 1, 2);
      bond(a, 2, 3, -2, -1);
      bond(a, 3, 4);
      break;
    case Family::G:
      bond(a, 1, 2, -1, -3);
      break;
  }
  return CartanData(type, std::move(a));
}

void check_index(const CartanData& cd, int i) {
  if (i < 1 || i > cd.rank()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "index " + std::to_string(i) + " outside [1," + std::to_string(cd.rank()) + "]");
  }
}

Weight fundamental_weight(const CartanData& cd, int i) {
  check_index(cd, i);
  return {IntVector::Unit(cd.rank(), i - 1)};
}

Weight zero_weight(const CartanData& cd) { return {IntVector::Zero(cd.rank())}; }

Weight simple_root_weight(const CartanData& cd, int j) {
  check_index(cd, j);
  return {cd.matrix().col(j - 1)};
}

Weight to_weight(const CartanData& cd, const Root& beta) { return {cd.matrix() * beta.coeffs}; }

Root simple_root(const CartanData& cd, int j) {
  check_index(cd, j);
  return {IntVector::Unit(cd.rank(), j - 1)};
}

Weight reflect(const CartanData& cd, int j, const Weight& lambda) {
  check_index(cd, j);
  return {lambda.coords - lambda.coords(j - 1) * cd.matrix().col(j - 1)};
}

Root reflect_root(const CartanData& cd, int j, const Root& beta) {
  check_index(cd, j);
  const int pairing = cd.matrix().row(j - 1).dot(beta.coeffs);
  Root out = beta;
  out.coeffs(j - 1) -= pairing;
  return out;
}

std::vector<Root> positive_roots(const CartanData& cd) {
  const int n = cd.rank();
  std::set<IntVector, CoeffLess> seen;
  std::deque<IntVector> queue;
  for (int j = 1; j <= n; ++j) {
    auto alpha = simple_root(cd, j).coeffs;
    seen.insert(alpha);
    queue.push_back(std::move(alpha));
  }
  while (!queue.empty()) {
    const Root beta{queue.front()};
    queue.pop_front();
    for (int j = 1; j <= n; ++j) {
      auto image = reflect_root(cd, j, beta).coeffs;
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  }
  std::vector<Root> out;
  for (const auto& coeffs : seen) {
    Root beta{coeffs};
    if (beta.is_positive()) out.push_back(std::move(beta));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Root& x, const Root& y) { return x.height() < y.height(); });
  return out;
}

int max_coroot_coefficient(const CartanData& cd, int i) {
  check_index(cd, i);
  int best = 0;
  for (const auto& coroot : positive_roots(cd.dual())) best = std::max(best, coroot.coeffs(i - 1));
  return best;
}

}  // namespace deco

#include "deco/stringcone.hpp"

#include "deco/error.hpp"

#include <cstdlib>
#include <sstream>

namespace deco {

namespace {

// Depth-first lattice-point count over the box [-S, S]^N, S = total weight.
// Coordinates are fixed left to right; the last position of each letter is
// forced by its letter sum, and a row is abandoned once even the most
// favourable completion cannot make it nonnegative.
class CensusEnumerator {
 public:
  CensusEnumerator(const ConeSystem& cone, const IntVector& weight)
      : cone_(cone), N_(cone.length()), bound_(weight.sum()), remaining_(weight) {
    const auto& w = cone.word();
    const auto R = cone.rows().size();
    last_of_letter_.assign(cone.rank() + 1, 0);
    for (int l = 1; l <= N_; ++l) last_of_letter_[w.letter(l)] = l;
    coeff_.resize(R, N_);
    for (std::size_t r = 0; r < R; ++r) coeff_.row(r) = cone.rows()[r].coeffs.transpose();
    // slack_(r, l) = sum_{l' > l} |coeff(r, l')| for l = 0..N (1-based positions).
    slack_ = IntMatrix::Zero(R, N_ + 1);
    for (int l = N_ - 1; l >= 0; --l) slack_.col(l) = slack_.col(l + 1) + coeff_.col(l).cwiseAbs();
    partial_ = IntVector::Zero(R);
  }

  std::uint64_t run() {
    if ((remaining_.array() < 0).any()) return 0;
    count_ = 0;
    dfs(1);
    return count_;
  }

 private:
  void dfs(int l) {
    if (l > N_) {
      ++count_;
      return;
    }
    const int letter = cone_.word().letter(l);
    if (last_of_letter_[letter] == l) {
      const int forced = remaining_(letter - 1);
      if (std::abs(forced) <= bound_) place(l, letter, forced);
      return;
    }
    for (int value = -bound_; value <= bound_; ++value) place(l, letter, value);
  }

  void place(int l, int letter, int value) {
    partial_ += value * coeff_.col(l - 1);
    remaining_(letter - 1) -= value;
    const bool viable = ((partial_ + bound_ * slack_.col(l)).array() >= 0).all();
    if (viable) dfs(l + 1);
    remaining_(letter - 1) += value;
    partial_ -= value * coeff_.col(l - 1);
  }

  const ConeSystem& cone_;
  int N_;
  int bound_;
  IntVector remaining_;
  std::vector<int> last_of_letter_;
  IntMatrix coeff_;
  IntMatrix slack_;
  IntVector partial_;
  std::uint64_t count_ = 0;
};

std::string text_row(const ExponentVec& coeffs, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (Eigen::Index l = 0; l < coeffs.size(); ++l) {
    const int c = coeffs(l);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? (latex ? "+" : " + ") : (latex ? "-" : " - "));
    else if (c < 0) os << "-";
    const int mag = std::abs(c);
    if (mag != 1) os << mag << (latex ? "" : "*");
    if (latex) os << "z_{" << l + 1 << "}";
    else os << "z_" << l + 1;
    first = false;
  }
  if (first) os << "0";
  os << (latex ? "\\geq 0" : " >= 0");
  return os.str();
}

}  // namespace

bool ConeSystem::add_row(int index, const ExponentVec& coeffs) {
  if (coeffs.size() != length()) {
    throw Error(ErrorKind::LengthMismatch, "row has length " + std::to_string(coeffs.size()));
  }
  for (const auto& row : rows_) {
    if (row.coeffs == coeffs) return false;
  }
  rows_.push_back({index, coeffs});
  return true;
}

bool ConeSystem::contains(const IntVector& z) const {
  if (z.size() != length()) throw Error(ErrorKind::LengthMismatch, "point has length " + std::to_string(z.size()));
  for (const auto& row : rows_) {
    if (row.coeffs.dot(z) < 0) return false;
  }
  return true;
}

std::map<int, std::vector<ExponentVec>> half_potential_monomials(const ReducedWord& w, const BuildOptions& options) {
  std::map<int, std::vector<ExponentVec>> out;
  for (int i = 1; i <= w.cartan().rank(); ++i) {
    const DecoGraph g = build_graph(w, i, options);
    auto& monomials = out[i];
    for (const auto& v : g.vertices()) monomials.push_back(v.d);
  }
  return out;
}

ConeSystem string_cone(const ReducedWord& w, const BuildOptions& options) {
  ConeSystem cone(w);
  for (const auto& [i, monomials] : half_potential_monomials(w, options)) {
    for (const auto& d : monomials) cone.add_row(i, d);
  }
  return cone;
}

std::uint64_t weight_census(const ConeSystem& cone, const IntVector& weight) {
  if (weight.size() != cone.rank()) {
    throw Error(ErrorKind::LengthMismatch, "weight has length " + std::to_string(weight.size()));
  }
  return CensusEnumerator(cone, weight).run();
}

std::string render(const ConeSystem& cone, ConeFormat format) {
  switch (format) {
    case ConeFormat::Json: return to_json(cone).dump(2) + "\n";
    case ConeFormat::Text: {
      std::ostringstream os;
      os << "# " << cone.word().cartan().type().name() << " word " << cone.word().to_string() << ", "
         << cone.rows().size() << " inequalities\n";
      for (const auto& row : cone.rows()) os << text_row(row.coeffs, false) << "\n";
      return os.str();
    }
    case ConeFormat::Latex: {
      std::ostringstream os;
      os << "\\left\\{ (z_1,\\ldots,z_{" << cone.length() << "})\\in\\mathbb{Z}^{" << cone.length()
         << "} \\;\\middle|\\; \\begin{array}{l}\n";
      for (std::size_t r = 0; r < cone.rows().size(); ++r) {
        os << "  " << text_row(cone.rows()[r].coeffs, true) << (r + 1 < cone.rows().size() ? ",\\\\\n" : "\n");
      }
      os << "\\end{array} \\right\\}\n";
      return os.str();
    }
  }
  return {};
}

nlohmann::json to_json(const ConeSystem& cone) {
  nlohmann::json out;
  out["type"] = cone.word().cartan().type().name();
  out["rank"] = cone.rank();
  out["word"] = cone.word().letters();
  auto& rows = out["rows"] = nlohmann::json::array();
  for (const auto& row : cone.rows()) {
    rows.push_back({{"i", row.index}, {"coeffs", std::vector<int>(row.coeffs.begin(), row.coeffs.end())}});
  }
  return out;
}

}  // namespace deco

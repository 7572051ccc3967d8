#ifndef DECO_STRINGCONE_HPP
#define DECO_STRINGCONE_HPP

#include "deco/decograph.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace deco {

/// One inequality sum_l coeffs_l z_l >= 0, contributed by summand `index`.
struct ConeRow {
  int index;
  ExponentVec coeffs;
};

/// Tropicalization of the half-potential: min over all monomials of the
/// linear forms they induce is >= 0, i.e. every form is >= 0.
class ConeSystem {
 public:
  explicit ConeSystem(ReducedWord word) : word_(std::move(word)) {}

  const ReducedWord& word() const { return word_; }
  int rank() const { return word_.cartan().rank(); }
  int length() const { return word_.size(); }
  const std::vector<ConeRow>& rows() const { return rows_; }

  /// Appends unless an identical coefficient vector is already present.
  bool add_row(int index, const ExponentVec& coeffs);

  bool contains(const IntVector& z) const;

 private:
  ReducedWord word_;
  std::vector<ConeRow> rows_;
};

/// Vertex sets of the decoration graphs for every i, keyed by i.
std::map<int, std::vector<ExponentVec>> half_potential_monomials(const ReducedWord& w,
                                                                 const BuildOptions& options = {});

ConeSystem string_cone(const ReducedWord& w, const BuildOptions& options = {});

inline bool contains(const ConeSystem& cone, const IntVector& z) { return cone.contains(z); }

/// Number of lattice points z of the cone whose letter sums
/// sum_{l : i_l = t} z_l equal weight(t-1) for every t.
std::uint64_t weight_census(const ConeSystem& cone, const IntVector& weight);

enum class ConeFormat { Text, Json, Latex };

std::string render(const ConeSystem& cone, ConeFormat format);

/// {type, rank, word, rows: [{i, coeffs}]}
nlohmann::json to_json(const ConeSystem& cone);

}  // namespace deco

#endif

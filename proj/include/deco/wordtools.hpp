#ifndef DECO_WORDTOOLS_HPP
#define DECO_WORDTOOLS_HPP

#include "deco/rootsystem.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace deco {

/// A reduced word (i_1, ..., i_N) of the longest Weyl group element,
/// validated on construction. Positions are 1-based.
///
/// beta(k) = s_{i_N} s_{i_{N-1}} ... s_{i_{k+1}} (alpha_{i_k}); for a reduced
/// word of w0 these run through every positive root exactly once.
class ReducedWord {
 public:
  /// Throws WrongLength or NotReducedOrNotLongest.
  ReducedWord(const CartanData& cd, std::vector<int> letters);

  const CartanData& cartan() const { return cd_; }
  int size() const { return static_cast<int>(letters_.size()); }
  int letter(int k) const { return letters_[k - 1]; }
  const std::vector<int>& letters() const { return letters_; }
  const Root& beta(int k) const { return beta_[k - 1]; }

  /// Next occurrence of letter i_j after position j, or N+1.
  int plus(int j) const;
  /// Previous occurrence of letter i_j before position j, or 0.
  int minus(int j) const;

  std::string to_string() const;

  friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters_ == b.letters_; }

 private:
  CartanData cd_;
  std::vector<int> letters_;
  std::vector<Root> beta_;
  std::vector<int> next_;
  std::vector<int> prev_;
};

ReducedWord validate_word(const CartanData& cd, std::span<const int> letters);

/// Parses "2,3,2,1" (whitespace around entries is allowed).
std::vector<int> parse_letters(std::string_view text);

/// The unique k with beta(k) = alpha_i.
int source_index(const ReducedWord& w, int i);

int j_plus(const ReducedWord& w, int j);
int j_minus(const ReducedWord& w, int j);

enum class Direction { Plus, Minus };

/// m-fold iterate of j -> j^+ (or j^-), with N+1 and 0 absorbing.
int j_iter(const ReducedWord& w, int j, int m, Direction direction);

inline constexpr std::size_t kDefaultWordLimit = 100000;

/// Visits every reduced word of w0 in lexicographic order. Throws
/// LimitExceeded once more than `limit` words would be produced. The visitor
/// may return false to stop early.
void for_each_w0_word(const CartanData& cd, const std::function<bool(const std::vector<int>&)>& visit,
                      std::size_t limit = kDefaultWordLimit);

std::vector<ReducedWord> enumerate_w0_words(const CartanData& cd, std::size_t limit = kDefaultWordLimit);

/// Lexicographically first reduced word of w0.
ReducedWord first_w0_word(const CartanData& cd);

}  // namespace deco

#endif

#include "deco/wordtools.hpp"

#include "deco/error.hpp"

#include <charconv>
#include <set>

namespace deco {

namespace {

struct CoeffLess {
  bool operator()(const IntVector& x, const IntVector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

std::string join(std::span<const int> letters) {
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters[k]);
  }
  return out;
}

}  // namespace

ReducedWord::ReducedWord(const CartanData& cd, std::vector<int> letters)
    : cd_(cd), letters_(std::move(letters)) {
  const int n = cd_.rank();
  for (int letter : letters_) check_index(cd_, letter);

  const auto expected = positive_roots(cd_).size();
  if (letters_.size() != expected) {
    throw Error(ErrorKind::WrongLength, "word (" + join(letters_) + ") has length " +
                                            std::to_string(letters_.size()) + ", w0 of " + cd_.type().name() +
                                            " has length " + std::to_string(expected));
  }

  const int len = size();
  beta_.reserve(len);
  std::set<IntVector, CoeffLess> seen;
  for (int k = 1; k <= len; ++k) {
    Root beta = simple_root(cd_, letter(k));
    for (int l = k + 1; l <= len; ++l) beta = reflect_root(cd_, letter(l), beta);
    if (!beta.is_positive() || !seen.insert(beta.coeffs).second) {
      throw Error(ErrorKind::NotReducedOrNotLongest,
                  "word (" + join(letters_) + ") is not a reduced word of w0 (fails at position " +
                      std::to_string(k) + ")");
    }
    beta_.push_back(std::move(beta));
  }

  next_.assign(len, len + 1);
  prev_.assign(len, 0);
  std::vector<int> last(n + 1, 0);
  for (int k = 1; k <= len; ++k) {
    const int l = last[letter(k)];
    if (l) {
      next_[l - 1] = k;
      prev_[k - 1] = l;
    }
    last[letter(k)] = k;
  }
}

int ReducedWord::plus(int j) const {
  if (j < 1 || j > size()) throw Error(ErrorKind::IndexOutOfRange, "position " + std::to_string(j));
  return next_[j - 1];
}

int ReducedWord::minus(int j) const {
  if (j < 1 || j > size()) throw Error(ErrorKind::IndexOutOfRange, "position " + std::to_string(j));
  return prev_[j - 1];
}

std::string ReducedWord::to_string() const { return join(letters_); }

ReducedWord validate_word(const CartanData& cd, std::span<const int> letters) {
  return ReducedWord(cd, std::vector<int>(letters.begin(), letters.end()));
}

std::vector<int> parse_letters(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto field = text.substr(pos, end - pos);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front()))) field.remove_prefix(1);
    while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back()))) field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::ParseError, "bad word entry '" + std::string(field) + "'");
    }
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

int source_index(const ReducedWord& w, int i) {
  check_index(w.cartan(), i);
  const Root alpha = simple_root(w.cartan(), i);
  for (int k = 1; k <= w.size(); ++k) {
    if (w.beta(k) == alpha) return k;
  }
  // Unreachable for a validated word: the betas exhaust the positive roots.
  throw Error(ErrorKind::NotReducedOrNotLongest, "no position maps to alpha_" + std::to_string(i));
}

int j_plus(const ReducedWord& w, int j) { return w.plus(j); }

int j_minus(const ReducedWord& w, int j) { return w.minus(j); }

int j_iter(const ReducedWord& w, int j, int m, Direction direction) {
  const int sentinel = direction == Direction::Plus ? w.size() + 1 : 0;
  for (int step = 0; step < m && j != sentinel; ++step) {
    j = direction == Direction::Plus ? w.plus(j) : w.minus(j);
  }
  return j;
}

void for_each_w0_word(const CartanData& cd, const std::function<bool(const std::vector<int>&)>& visit,
                      std::size_t limit) {
  const int n = cd.rank();
  const int len = static_cast<int>(positive_roots(cd).size());

  // mu = w^{-1}(rho) for the current prefix w; appending s_j keeps the word
  // reduced iff <h_j, mu> > 0. Every reduced prefix extends to w0.
  std::vector<int> word;
  word.reserve(len);
  std::size_t count = 0;
  bool stop = false;

  std::function<void(const Weight&)> dfs = [&](const Weight& mu) {
    if (static_cast<int>(word.size()) == len) {
      if (++count > limit) {
        throw Error(ErrorKind::LimitExceeded,
                    "more than " + std::to_string(limit) + " reduced words of w0 in " + cd.type().name());
      }
      if (!visit(word)) stop = true;
      return;
    }
    for (int j = 1; j <= n && !stop; ++j) {
      if (mu.pairing(j) <= 0) continue;
      word.push_back(j);
      dfs(reflect(cd, j, mu));
      word.pop_back();
    }
  };
  dfs(Weight{IntVector::Ones(n)});
}

std::vector<ReducedWord> enumerate_w0_words(const CartanData& cd, std::size_t limit) {
  std::vector<ReducedWord> out;
  for_each_w0_word(
      cd,
      [&](const std::vector<int>& letters) {
        out.emplace_back(cd, letters);
        return true;
      },
      limit);
  return out;
}

ReducedWord first_w0_word(const CartanData& cd) {
  std::vector<int> first;
  for_each_w0_word(cd, [&](const std::vector<int>& letters) {
    first = letters;
    return false;
  });
  return ReducedWord(cd, std::move(first));
}

}  // namespace deco

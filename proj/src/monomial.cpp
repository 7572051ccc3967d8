#include "deco/monomial.hpp"

#include "deco/error.hpp"

#include <cctype>
#include <charconv>

namespace deco {

namespace {

void require_same_length(const ExponentVec& a, const ExponentVec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "exponent vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}

std::string factor(int l, int e) {
  std::string out = "t_" + std::to_string(l);
  if (e != 1) out += "^" + std::to_string(e);
  return out;
}

class MonomialParser {
 public:
  MonomialParser(int N, std::string_view text) : text_(text), d_(ExponentVec::Zero(N)) {}

  ExponentVec parse() {
    skip();
    if (peek() == '1') {
      ++pos_;
    } else {
      product(+1);
    }
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      if (peek() == '(') {
        ++pos_;
        product(-1);
        skip();
        expect(')');
      } else {
        product(-1);
      }
    }
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return d_;
  }

 private:
  void product(int sign) {
    term(sign);
    for (skip(); peek() == '*'; skip()) {
      ++pos_;
      term(sign);
    }
  }

  void term(int sign) {
    skip();
    expect('t');
    expect('_');
    const int l = number();
    int e = 1;
    if (peek() == '^') {
      ++pos_;
      e = number();
    }
    if (l < 1 || l > d_.size()) fail("variable index out of range");
    d_(l - 1) += sign * e;
  }

  int number() {
    int value = 0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, "monomial '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  ExponentVec d_;
};

}  // namespace

ExponentVec mul(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  return a + b;
}

ExponentVec div(const ExponentVec& a, const ExponentVec& b) {
  require_same_length(a, b);
  return a - b;
}

ExponentVec unit_monomial(int N, int k) {
  if (k < 1 || k > N) throw Error(ErrorKind::IndexOutOfRange, "variable t_" + std::to_string(k));
  return ExponentVec::Unit(N, k - 1);
}

ExponentVec a_monomial(const ReducedWord& w, int j) {
  const int next = w.plus(j);
  if (next > w.size()) {
    throw Error(ErrorKind::NoNextOccurrence, "position " + std::to_string(j) + " is the last occurrence of letter " +
                                                 std::to_string(w.letter(j)));
  }
  const auto& cd = w.cartan();
  ExponentVec out = ExponentVec::Zero(w.size());
  out(j - 1) = 1;
  out(next - 1) = 1;
  for (int l = j + 1; l < next; ++l) out(l - 1) = cd.a(w.letter(l), w.letter(j));
  return out;
}

ExponentVec lowest_term(const ReducedWord& w, int i) {
  check_index(w.cartan(), i);
  int last = 0;
  for (int k = 1; k <= w.size(); ++k) {
    if (w.letter(k) == i) last = k;
  }
  ExponentVec out = ExponentVec::Zero(w.size());
  out(last - 1) = 1;
  for (int l = last + 1; l <= w.size(); ++l) out(l - 1) = w.cartan().a(w.letter(l), i);
  return out;
}

std::string render_monomial(const ExponentVec& d) {
  std::string num;
  std::string den;
  int den_factors = 0;
  for (int l = 1; l <= d.size(); ++l) {
    const int e = d(l - 1);
    if (e > 0) {
      if (!num.empty()) num += '*';
      num += factor(l, e);
    } else if (e < 0) {
      if (!den.empty()) den += '*';
      den += factor(l, -e);
      ++den_factors;
    }
  }
  if (num.empty()) num = "1";
  if (den_factors == 0) return num;
  if (den_factors == 1) return num + "/" + den;
  return num + "/(" + den + ")";
}

ExponentVec parse_monomial(int N, std::string_view text) { return MonomialParser(N, text).parse(); }

}  // namespace deco

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ajb {

using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the commutative ring Z[A^{+-1}, c].
///
/// Canonical form: no term with coefficient zero is ever stored, so two
/// values are equal iff their term maps are equal. The exponent of c is
/// always non-negative (c is never inverted anywhere in the bracket
/// calculus). Coefficients are arbitrary-precision integers; leaf counts
/// and state sums overflow any fixed width already at desk-size inputs.
///
/// Values are immutable in spirit: all operations return new values and
/// never alias, so they can be shared freely across threads.
class TiedLaurent {
 public:
  /// Term key. Ordered by (c exponent ascending, A exponent descending),
  /// which is the serialization order: constants first, then A-powers
  /// high to low, then the c-multiples.
  struct Key {
    int c_exp = 0;
    int a_exp = 0;

    friend bool operator==(const Key& l, const Key& r) = default;
    friend bool operator<(const Key& l, const Key& r) {
      if (l.c_exp != r.c_exp) return l.c_exp < r.c_exp;
      return l.a_exp > r.a_exp;
    }
  };

  using TermMap = std::map<Key, BigInt>;

  TiedLaurent() = default;

  /// Single-term value coeff * A^a_exp * c^c_exp; zero if coeff == 0.
  static TiedLaurent monomial(BigInt coeff, int a_exp = 0, int c_exp = 0) {
    if (c_exp < 0) throw std::invalid_argument("TiedLaurent: c exponent must be non-negative");
    TiedLaurent p;
    if (coeff != 0) p.terms_[Key{c_exp, a_exp}] = std::move(coeff);
    return p;
  }

  static TiedLaurent zero() { return TiedLaurent(); }
  static TiedLaurent unit() { return monomial(1); }
  /// A^k for any integer k.
  static TiedLaurent a_power(int k) { return monomial(1, k); }
  /// The partition variable c.
  static TiedLaurent variable_c() { return monomial(1, 0, 1); }
  /// delta = A + A^{-1}, the label of the two merging smoothings.
  static TiedLaurent delta() {
    TiedLaurent p = a_power(1);
    p += a_power(-1);
    return p;
  }
  /// -A^2 - A^{-2}, the value of an extra same-colored circle.
  static TiedLaurent loop_value() {
    TiedLaurent p = monomial(-1, 2);
    p += monomial(-1, -2);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }

  /// True if any term involves the variable c.
  bool mentions_c() const {
    for (const auto& [key, coeff] : terms_)
      if (key.c_exp > 0) return true;
    return false;
  }

  const TermMap& terms() const { return terms_; }

  TiedLaurent& operator+=(const TiedLaurent& o) {
    for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
    return *this;
  }

  TiedLaurent& operator-=(const TiedLaurent& o) {
    for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
    return *this;
  }

  friend TiedLaurent operator+(TiedLaurent l, const TiedLaurent& r) { return l += r; }
  friend TiedLaurent operator-(TiedLaurent l, const TiedLaurent& r) { return l -= r; }

  TiedLaurent operator-() const {
    TiedLaurent p;
    for (const auto& [key, coeff] : terms_) p.terms_[key] = -coeff;
    return p;
  }

  friend TiedLaurent operator*(const TiedLaurent& l, const TiedLaurent& r) {
    TiedLaurent p;
    for (const auto& [lk, lc] : l.terms_)
      for (const auto& [rk, rc] : r.terms_)
        p.add_term(Key{lk.c_exp + rk.c_exp, lk.a_exp + rk.a_exp}, lc * rc);
    return p;
  }

  TiedLaurent& operator*=(const TiedLaurent& o) { return *this = *this * o; }

  /// p^n for n >= 0; p^0 == 1.
  TiedLaurent pow(int n) const {
    if (n < 0) throw std::invalid_argument("TiedLaurent: negative power");
    TiedLaurent acc = unit();
    for (int i = 0; i < n; ++i) acc *= *this;
    return acc;
  }

  friend bool operator==(const TiedLaurent& l, const TiedLaurent& r) {
    return l.terms_ == r.terms_;
  }

  /// Renders in the fixed term order, e.g. "-A^4 - A^-4", "c", "2 + A^2*c".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : terms_) {
      const bool negative = coeff < 0;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      BigInt mag = negative ? BigInt(-coeff) : coeff;
      std::vector<std::string> factors;
      if (mag != 1 || (key.a_exp == 0 && key.c_exp == 0))
        factors.push_back(mag.str());
      if (key.a_exp != 0) factors.push_back("A^" + std::to_string(key.a_exp));
      if (key.c_exp == 1) factors.push_back("c");
      else if (key.c_exp > 1) factors.push_back("c^" + std::to_string(key.c_exp));
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i > 0) out += "*";
        out += factors[i];
      }
    }
    return out;
  }

  /// Inverse of to_string; accepts exactly the rendered grammar.
  static TiedLaurent parse(const std::string& text);

  friend std::ostream& operator<<(std::ostream& os, const TiedLaurent& p) {
    return os << p.to_string();
  }

 private:
  void add_term(const Key& key, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  TermMap terms_;
};

namespace detail {

inline void parse_factor(const std::string& token, BigInt& coeff, int& a_exp, int& c_exp) {
  if (token.empty()) throw std::invalid_argument("TiedLaurent: empty factor");
  if (token[0] == 'A') {
    int e = 1;
    if (token.size() > 1) {
      if (token[1] != '^') throw std::invalid_argument("TiedLaurent: bad factor '" + token + "'");
      e = std::stoi(token.substr(2));
    }
    a_exp += e;
  } else if (token[0] == 'c') {
    int e = 1;
    if (token.size() > 1) {
      if (token[1] != '^') throw std::invalid_argument("TiedLaurent: bad factor '" + token + "'");
      e = std::stoi(token.substr(2));
    }
    if (e < 0) throw std::invalid_argument("TiedLaurent: c exponent must be non-negative");
    c_exp += e;
  } else {
    coeff *= BigInt(token);
  }
}

}  // namespace detail

inline TiedLaurent TiedLaurent::parse(const std::string& text) {
  if (text == "0") return TiedLaurent();
  TiedLaurent result;
  std::size_t pos = 0;
  int sign = 1;
  if (!text.empty() && text[0] == '-') {
    sign = -1;
    pos = 1;
  }
  while (pos < text.size()) {
    std::size_t end = text.find(' ', pos);
    std::string chunk = text.substr(pos, end == std::string::npos ? end : end - pos);
    BigInt coeff = sign;
    int a_exp = 0;
    int c_exp = 0;
    std::size_t start = 0;
    while (start <= chunk.size()) {
      std::size_t star = chunk.find('*', start);
      std::string factor = chunk.substr(start, star == std::string::npos ? star : star - start);
      detail::parse_factor(factor, coeff, a_exp, c_exp);
      if (star == std::string::npos) break;
      start = star + 1;
    }
    result += monomial(coeff, a_exp, c_exp);
    if (end == std::string::npos) break;
    // expect " + " or " - "
    if (end + 2 >= text.size() || text[end + 2] != ' ' ||
        (text[end + 1] != '+' && text[end + 1] != '-'))
      throw std::invalid_argument("TiedLaurent: malformed separator in '" + text + "'");
    sign = text[end + 1] == '-' ? -1 : 1;
    pos = end + 3;
  }
  return result;
}

}  // namespace ajb

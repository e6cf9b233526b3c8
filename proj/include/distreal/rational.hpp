#pragma once

// Exact rational arithmetic for the whole library: a thin value wrapper over
// GMP's mpq_class that keeps every value canonical (lowest terms, positive
// denominator) and parses/prints the wire syntax used by the matrix formats:
// "p/q", plain integers, and finite decimals ("1.5" == 3/2). No floating
// point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace distreal {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int
  Rational(long num, long den) : v_(num, den) { canonical(); }
  explicit Rational(const mpq_class& q) : v_(q) { canonical(); }

  // Strict text forms: [sign]digits, [sign]digits/digits, [sign]digits.digits.
  // No exponents, no inf/nan, no embedded spaces. Returns nullopt on anything
  // else (including zero denominators).
  static std::optional<Rational> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    std::size_t pos = 0;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = (s[pos] == '-');
      ++pos;
    }
    auto digits = [&s, &pos]() {
      std::string out;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') out += s[pos++];
      return out;
    };
    std::string ipart = digits();
    if (ipart.empty()) return std::nullopt;
    Rational r;
    if (pos == s.size()) {
      r.v_ = mpz_class(ipart);
    } else if (s[pos] == '/') {
      ++pos;
      std::string den = digits();
      if (den.empty() || pos != s.size()) return std::nullopt;
      mpz_class d(den);
      if (d == 0) return std::nullopt;
      r.v_ = mpq_class(mpz_class(ipart)) / mpq_class(d);
    } else if (s[pos] == '.') {
      ++pos;
      std::string frac = digits();
      if (frac.empty() || pos != s.size()) return std::nullopt;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
      mpq_class value(mpz_class(ipart) * scale + mpz_class(frac));
      r.v_ = value / mpq_class(scale);
    } else {
      return std::nullopt;
    }
    if (neg) r.v_ = -r.v_;
    r.canonical();
    return r;
  }

  // "p/q" in lowest terms, or "p" when q == 1.
  std::string str() const { return v_.get_str(); }

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  void canonical() { v_.canonicalize(); }
  mpq_class v_;
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace distreal

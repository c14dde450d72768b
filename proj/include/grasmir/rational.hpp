#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace grasmir {

using Integer = mpz_class;

// Exact rational scalar over GMP. mpq_class keeps the canonical form we rely
// on (gcd(num, den) = 1, den > 0); every mutating path below re-canonicalizes.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose, 3 - q etc.
  Rational(const Integer& n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const Integer& num, const Integer& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  // Accepts "a" and "a/b".
  static Rational from_string(const std::string& s) {
    Rational r;
    if (r.v_.set_str(s, 10) != 0)
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (r.v_.get_den() == 0)
      throw std::domain_error("Rational: zero denominator in '" + s + "'");
    r.v_.canonicalize();
    return r;
  }

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // max(|num|, |den|), the usual height; bounds GMP cost in tests.
  Integer height() const {
    Integer a = v_.get_num() < 0 ? Integer(-v_.get_num()) : Integer(v_.get_num());
    Integer b = v_.get_den();
    return a > b ? a : b;
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero() && e < 0) throw std::domain_error("Rational: 0^negative");
    mpq_class base = e > 0 ? v_ : mpq_class(1 / v_);
    unsigned long m = static_cast<unsigned long>(e > 0 ? e : -e);
    mpq_class num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), m);
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), m);
    return Rational(num.get_num(), den.get_num());
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  explicit Rational(const mpq_class& q) : v_(q) {}
  mpq_class v_;
};

inline Integer factorial(unsigned long m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), m);
  return r;
}

inline Integer binomial(unsigned long a, unsigned long b) {
  if (b > a) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

}  // namespace grasmir

#pragma once

#include <stdexcept>
#include <vector>

#include "grasmir/rational.hpp"

namespace grasmir {

// First-order jet: a value with exact partial derivatives against a fixed
// set of active variables. Pushing jets through a rational expression yields
// the expression's Jacobian row at the evaluation point with no symbolic
// blowup; used for point-mode derivative checks.
struct Jet {
  Rational v;
  std::vector<Rational> d;

  Jet() = default;
  Jet(Rational value, size_t nvars) : v(std::move(value)), d(nvars, Rational(0)) {}

  static Jet constant(const Rational& value, size_t nvars) { return Jet(value, nvars); }

  static Jet var(const Rational& value, size_t index, size_t nvars) {
    Jet j(value, nvars);
    j.d.at(index) = Rational(1);
    return j;
  }

  size_t nvars() const { return d.size(); }

  Jet operator-() const {
    Jet r = *this;
    r.v = -r.v;
    for (auto& x : r.d) x = -x;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    check(o);
    v += o.v;
    for (size_t i = 0; i < d.size(); ++i) d[i] += o.d[i];
    return *this;
  }

  Jet& operator-=(const Jet& o) {
    check(o);
    v -= o.v;
    for (size_t i = 0; i < d.size(); ++i) d[i] -= o.d[i];
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    a.check(b);
    Jet r(a.v * b.v, a.d.size());
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = a.v * b.d[i] + b.v * a.d[i];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    a.check(b);
    if (b.v.is_zero()) throw std::domain_error("Jet: division by non-invertible jet");
    Jet r(a.v / b.v, a.d.size());
    for (size_t i = 0; i < r.d.size(); ++i) r.d[i] = (a.d[i] - r.v * b.d[i]) / b.v;
    return r;
  }

  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.v == b.v && a.d == b.d; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

 private:
  void check(const Jet& o) const {
    if (d.size() != o.d.size()) throw std::invalid_argument("Jet: mixed variable counts");
  }
};

inline Jet ring_zero(const Jet& j) { return Jet(Rational(0), j.d.size()); }
inline Jet ring_one(const Jet& j) { return Jet(Rational(1), j.d.size()); }
inline bool is_zero(const Jet& j) {
  if (!j.v.is_zero()) return false;
  for (const auto& x : j.d)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace grasmir

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasmir/rational.hpp"

namespace grasmir {

// Exponent vector, one slot per variable of the owning table; negative
// exponents allowed throughout (Laurent ring). std::map's vector<> ordering
// is lexicographic, which doubles as the canonical term order.
using ExpVec = std::vector<int32_t>;

using VarsPtr = std::shared_ptr<const std::vector<std::string>>;

inline VarsPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Sparse multivariate Laurent polynomial with exact Rational coefficients.
// Invariants: no stored zero coefficients; all exponent vectors have size
// vars()->size(); terms ordered lexicographically by exponent vector.
class LaurentPoly {
 public:
  using TermMap = std::map<ExpVec, Rational>;
  using PowHook = std::function<void(const std::string&, size_t)>;

  explicit LaurentPoly(VarsPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw std::invalid_argument("LaurentPoly: null variable table");
  }

  static LaurentPoly zero(const VarsPtr& vars) { return LaurentPoly(vars); }

  static LaurentPoly constant(const VarsPtr& vars, const Rational& c) {
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(vars->size(), 0), c);
    return p;
  }

  static LaurentPoly monomial(const VarsPtr& vars, const ExpVec& e, const Rational& c) {
    if (e.size() != vars->size())
      throw std::invalid_argument("LaurentPoly: exponent size mismatch");
    LaurentPoly p(vars);
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
  }

  static LaurentPoly variable(const VarsPtr& vars, size_t i, int32_t e = 1) {
    ExpVec ev(vars->size(), 0);
    ev.at(i) = e;
    return monomial(vars, ev, Rational(1));
  }

  static LaurentPoly variable(const VarsPtr& vars, const std::string& name, int32_t e = 1) {
    return variable(vars, var_index(vars, name), e);
  }

  static size_t var_index(const VarsPtr& vars, const std::string& name) {
    auto it = std::find(vars->begin(), vars->end(), name);
    if (it == vars->end())
      throw std::invalid_argument("LaurentPoly: unknown variable " + name);
    return static_cast<size_t>(it - vars->begin());
  }

  const VarsPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == ExpVec(vars_->size(), 0));
  }

  bool is_monomial() const { return terms_.size() == 1; }

  // Constant term as a Rational (coefficient of the zero exponent vector).
  Rational constant_coeff() const {
    auto it = terms_.find(ExpVec(vars_->size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Rational coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  LaurentPoly operator-() const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    LaurentPoly r(a.vars_);
    const size_t nv = a.vars_->size();
    ExpVec e(nv);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (size_t i = 0; i < nv; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly& operator*=(const Rational& c) {
    if (c.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
  }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // e >= 0. Repeated squaring; hook (if given) sees the term count after
  // every multiply, so callers can log expansion growth.
  LaurentPoly pow(unsigned e, const PowHook& hook = nullptr) const {
    LaurentPoly acc = constant(vars_, Rational(1));
    if (e == 0) return acc;
    LaurentPoly base = *this;
    unsigned remaining = e;
    int step = 0;
    while (true) {
      if (remaining & 1) {
        acc = acc * base;
        if (hook) hook("mul step " + std::to_string(step), acc.term_count());
      }
      remaining >>= 1;
      if (remaining == 0) break;
      base = base * base;
      ++step;
      if (hook) hook("square step " + std::to_string(step), base.term_count());
    }
    return acc;
  }

  // v_i * d/dv_i; multiplies each coefficient by its exponent at i. The
  // natural derivation on the Laurent ring (no negative-exponent edge cases).
  LaurentPoly logderiv(size_t i) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      if (e.at(i) != 0) r.terms_.emplace(e, c * Rational(e[i]));
    }
    return r;
  }

  // Sum of all terms with exponent 0 in every variable of `which`, projected
  // onto the remaining variables (in their original order).
  LaurentPoly constant_term(const std::vector<size_t>& which,
                            const VarsPtr& remaining_vars) const {
    std::vector<char> drop(vars_->size(), 0);
    for (size_t i : which) drop.at(i) = 1;
    size_t keep = vars_->size() - which.size();
    if (remaining_vars->size() != keep)
      throw std::invalid_argument("constant_term: remaining variable count mismatch");
    LaurentPoly r(remaining_vars);
    ExpVec proj(keep);
    for (const auto& [e, c] : terms_) {
      bool ct = true;
      for (size_t i = 0; i < e.size() && ct; ++i)
        if (drop[i] && e[i] != 0) ct = false;
      if (!ct) continue;
      size_t j = 0;
      for (size_t i = 0; i < e.size(); ++i)
        if (!drop[i]) proj[j++] = e[i];
      r.add_term(proj, c);
    }
    return r;
  }

  // Full evaluation; values must cover every variable, nonzero wherever a
  // negative exponent occurs.
  Rational eval(const std::vector<Rational>& values) const {
    if (values.size() != vars_->size())
      throw std::invalid_argument("eval: value count mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) t *= values[i].pow(e[i]);
      acc += t;
    }
    return acc;
  }

  // Bind one variable to a rational value (nonzero if negative exponents
  // touch it); result stays over the same table with slot i identically 0.
  LaurentPoly substitute(size_t i, const Rational& value) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      ExpVec e2 = e;
      int32_t p = e2[i];
      e2[i] = 0;
      r.add_term(e2, c * value.pow(p));
    }
    return r;
  }

  // Exact division; nullopt when b does not divide *this in the Laurent
  // ring. Both operands are shifted to honest polynomials, then divided by
  // lex leading terms (single-divisor division; exactness <=> remainder 0).
  std::optional<LaurentPoly> divexact(const LaurentPoly& b) const {
    check_same_vars(b);
    if (b.is_zero()) throw std::domain_error("divexact: division by zero");
    if (is_zero()) return zero(vars_);
    const size_t nv = vars_->size();
    ExpVec sa = min_exponents(), sb = b.min_exponents();
    LaurentPoly r = shifted(negate(sa));
    LaurentPoly bp = b.shifted(negate(sb));
    LaurentPoly q(vars_);
    const auto& [eb, cb] = *bp.terms_.rbegin();
    while (!r.is_zero()) {
      const auto& [er, cr] = *r.terms_.rbegin();
      ExpVec d(nv);
      for (size_t i = 0; i < nv; ++i) {
        d[i] = er[i] - eb[i];
        if (d[i] < 0) return std::nullopt;
      }
      LaurentPoly t = monomial(vars_, d, cr / cb);
      q += t;
      r -= t * bp;
    }
    ExpVec fix(nv);
    for (size_t i = 0; i < nv; ++i) fix[i] = sa[i] - sb[i];
    return q.shifted(fix);
  }

  // max over terms of sum of |exponents|; degree bound for point-count
  // certificates of randomized identity checks.
  long total_degree_bound() const {
    long best = 0;
    for (const auto& [e, c] : terms_) {
      (void)c;
      long s = 0;
      for (int32_t x : e) s += x < 0 ? -x : x;
      best = std::max(best, s);
    }
    return best;
  }

  // Canonical text form: terms in ascending lex exponent order, unit
  // coefficients elided, "^" only for exponents != 1.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      std::string mono = monomial_str(e);
      if (mono.empty()) {
        os << a.str();
      } else {
        if (a != Rational(1)) os << a.str() << "*";
        os << mono;
      }
    }
    return os.str();
  }

 private:
  static ExpVec negate(const ExpVec& e) {
    ExpVec r = e;
    for (auto& x : r) x = -x;
    return r;
  }

  ExpVec min_exponents() const {
    ExpVec m(vars_->size(), 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      (void)c;
      if (first) {
        m = e;
        first = false;
      } else {
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
      }
    }
    return m;
  }

  LaurentPoly shifted(const ExpVec& delta) const {
    LaurentPoly r(vars_);
    for (const auto& [e, c] : terms_) {
      ExpVec e2 = e;
      for (size_t i = 0; i < e2.size(); ++i) e2[i] += delta[i];
      r.terms_.emplace(std::move(e2), c);
    }
    return r;
  }

  std::string monomial_str(const ExpVec& e) const {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      os << (*vars_)[i];
      if (e[i] != 1) os << "^" << e[i];
      any = true;
    }
    return os.str();
  }

  void add_term(const ExpVec& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check_same_vars(const LaurentPoly& o) const {
    if (vars_ == o.vars_) return;
    if (*vars_ == *o.vars_) return;
    throw std::invalid_argument("LaurentPoly: mixed variable tables");
  }

  VarsPtr vars_;
  TermMap terms_;
};

// Minimal num/den pair over LaurentPoly for the few symbolic computations
// that genuinely need inverses (unipotent factorization pivots). Equality is
// cross-multiplied; simplification is opportunistic exact division only, so
// no polynomial gcd machinery is involved.
class LFrac {
 public:
  explicit LFrac(LaurentPoly num)
      : num_(std::move(num)), den_(LaurentPoly::constant(num_.vars(), Rational(1))) {}
  LFrac(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("LFrac: zero denominator");
    reduce();
  }

  static LFrac zero(const VarsPtr& vars) { return LFrac(LaurentPoly::zero(vars)); }
  static LFrac one(const VarsPtr& vars) {
    return LFrac(LaurentPoly::constant(vars, Rational(1)));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LFrac operator-() const { return LFrac(-num_, den_, 0); }

  friend LFrac operator+(const LFrac& a, const LFrac& b) {
    return LFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LFrac operator-(const LFrac& a, const LFrac& b) {
    return LFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend LFrac operator*(const LFrac& a, const LFrac& b) {
    return LFrac(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend LFrac operator/(const LFrac& a, const LFrac& b) {
    if (b.is_zero()) throw std::domain_error("LFrac: division by zero");
    return LFrac(a.num_ * b.den_, a.den_ * b.num_);
  }
  LFrac& operator+=(const LFrac& o) { return *this = *this + o; }
  LFrac& operator-=(const LFrac& o) { return *this = *this - o; }
  LFrac& operator*=(const LFrac& o) { return *this = *this * o; }
  LFrac& operator/=(const LFrac& o) { return *this = *this / o; }

  friend bool operator==(const LFrac& a, const LFrac& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const LFrac& a, const LFrac& b) { return !(a == b); }

 private:
  LFrac(LaurentPoly num, LaurentPoly den, int) : num_(std::move(num)), den_(std::move(den)) {}

  void reduce() {
    if (num_.is_zero()) {
      den_ = LaurentPoly::constant(num_.vars(), Rational(1));
      return;
    }
    if (auto q = num_.divexact(den_)) {
      num_ = *q;
      den_ = LaurentPoly::constant(num_.vars(), Rational(1));
    }
  }

  LaurentPoly num_, den_;
};

// Ring glue used by the templated matrix/group code. The "proto" argument
// carries context (variable table, jet width) that default construction
// cannot know.
inline Rational ring_zero(const Rational&) { return Rational(0); }
inline Rational ring_one(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline LaurentPoly ring_zero(const LaurentPoly& p) { return LaurentPoly::zero(p.vars()); }
inline LaurentPoly ring_one(const LaurentPoly& p) {
  return LaurentPoly::constant(p.vars(), Rational(1));
}
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

inline LFrac ring_zero(const LFrac& f) { return LFrac::zero(f.num().vars()); }
inline LFrac ring_one(const LFrac& f) { return LFrac::one(f.num().vars()); }
inline bool is_zero(const LFrac& f) { return f.is_zero(); }

}  // namespace grasmir

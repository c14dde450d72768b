#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grasmir/rational.hpp"

namespace grasmir {

// Power series in q truncated at a fixed order, exact coefficients.
class QSeries {
 public:
  explicit QSeries(size_t order) : coeffs_(order + 1, Rational(0)) {}

  size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](size_t d) const { return coeffs_.at(d); }
  Rational& operator[](size_t d) { return coeffs_.at(d); }

  friend QSeries operator+(QSeries a, const QSeries& b) {
    a.check(b);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    return a;
  }

  friend QSeries operator*(const QSeries& a, const QSeries& b) {
    a.check(b);
    QSeries r(a.order());
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; i + j < r.coeffs_.size(); ++j)
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
  }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

  // First order where the two series disagree, or -1 if equal up to the
  // common truncation.
  friend long first_mismatch(const QSeries& a, const QSeries& b) {
    size_t upto = std::min(a.coeffs_.size(), b.coeffs_.size());
    for (size_t i = 0; i < upto; ++i)
      if (a.coeffs_[i] != b.coeffs_[i]) return static_cast<long>(i);
    return -1;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t d = 0; d < coeffs_.size(); ++d) {
      if (coeffs_[d].is_zero() && !(d == 0 && coeffs_.size() == 1)) continue;
      if (!first) os << " + ";
      os << coeffs_[d].str();
      if (d == 1) os << "*q";
      if (d > 1) os << "*q^" << d;
      first = false;
    }
    if (first) os << "0";
    os << " + O(q^" << coeffs_.size() << ")";
    return os.str();
  }

 private:
  void check(const QSeries& o) const {
    if (coeffs_.size() != o.coeffs_.size())
      throw std::invalid_argument("QSeries: mixed truncation orders");
  }
  std::vector<Rational> coeffs_;
};

}  // namespace grasmir

#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "grasmir/jet.hpp"
#include "grasmir/laurent.hpp"
#include "grasmir/rational.hpp"

namespace grasmir {

// Dense row-major matrix over an exact scalar (Rational, LaurentPoly, Jet,
// LFrac). Scalars needing context (variable tables, jet width) are built
// from a prototype entry, so the matrix itself stays context-free.
template <class T>
class Matrix {
 public:
  Matrix(size_t rows, size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n, const T& proto) {
    Matrix m(n, n, ring_zero(proto));
    for (size_t i = 0; i < n; ++i) m.at(i, i) = ring_one(proto);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& at(size_t i, size_t j) { return data_.at(i * cols_ + j); }
  const T& at(size_t i, size_t j) const { return data_.at(i * cols_ + j); }

  Matrix submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    Matrix m(rs.size(), cs.size(), ring_zero(data_.at(0)));
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m.at(i, j) = at(rs[i], cs[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
    const T z = ring_zero(a.data_.at(0));
    Matrix r(a.rows_, b.cols_, z);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t l = 0; l < a.cols_; ++l) {
        const T& ail = a.at(i, l);
        if (is_zero(ail)) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          if (is_zero(b.at(l, j))) continue;
          r.at(i, j) += ail * b.at(l, j);
        }
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in +");
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("Matrix: shape mismatch in -");
    for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& c, Matrix a) {
    for (auto& x : a.data_) x = c * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool all_zero() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix m(cols_, rows_, data_.at(0));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

// Fraction-free Bareiss elimination. Divisions are exact by the Sylvester
// identity, which over Rational keeps intermediate heights far below naive
// Gaussian elimination.
inline Rational det_bareiss(Matrix<Rational> m) {
  const size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: non-square");
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (size_t p = 0; p + 1 < n; ++p) {
    if (m.at(p, p).is_zero()) {
      size_t swap = p + 1;
      while (swap < n && m.at(swap, p).is_zero()) ++swap;
      if (swap == n) return Rational(0);
      for (size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(swap, j));
      sign = -sign;
    }
    for (size_t i = p + 1; i < n; ++i)
      for (size_t j = p + 1; j < n; ++j)
        m.at(i, j) = (m.at(p, p) * m.at(i, j) - m.at(i, p) * m.at(p, j)) / prev;
    prev = m.at(p, p);
  }
  Rational d = m.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

// Division-free determinant: Laplace expansion along rows with sub-minors
// memoized on the column bitmask. O(2^n) subsets, fine for the n <= 16 this
// project ever sees, and the only safe route for polynomial entries.
template <class T>
T det_cofactor(const Matrix<T>& m) {
  const size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det: non-square");
  if (n == 0 || n > 16) throw std::invalid_argument("det_cofactor: unsupported size");
  const T one = ring_one(m.at(0, 0));
  std::unordered_map<uint32_t, T> memo;
  // D(mask) = det of rows [0, popcount(mask)) against column set mask,
  // expanded along its last row; sign of column j is parity of j's position
  // within mask plus the row index.
  std::function<T(uint32_t)> rec = [&](uint32_t mask) -> T {
    if (mask == 0) return one;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    size_t row = static_cast<size_t>(__builtin_popcount(mask)) - 1;
    T acc = ring_zero(one);
    size_t pos = 0;
    for (size_t j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      const T& entry = m.at(row, j);
      if (!is_zero(entry)) {
        T term = entry * rec(mask & ~(1u << j));
        if ((row + pos) % 2)
          acc -= term;
        else
          acc += term;
      }
      ++pos;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(n == 32 ? ~0u : ((1u << n) - 1u));
}

inline bool pivot_invertible(const Rational& x) { return !x.is_zero(); }
inline bool pivot_invertible(const Jet& x) { return !x.v.is_zero(); }
inline bool pivot_invertible(const LFrac& x) { return !x.is_zero(); }
inline bool pivot_invertible(const LaurentPoly& x) { return x.is_monomial(); }

// Determinant dispatch by scalar: Bareiss for Rational, memoized cofactor
// for polynomial entries, pivoted Gaussian elimination for jets/fractions
// (both are field-like for the pivots we accept).
template <class T>
T det(const Matrix<T>& m) {
  if constexpr (std::is_same_v<T, Rational>) {
    return det_bareiss(m);
  } else if constexpr (std::is_same_v<T, LaurentPoly>) {
    return det_cofactor(m);
  } else {
    Matrix<T> a = m;
    const size_t n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("det: non-square");
    if (n == 0) throw std::invalid_argument("det: empty");
    bool neg = false;
    for (size_t p = 0; p < n; ++p) {
      size_t piv = p;
      while (piv < n && !pivot_invertible(a.at(piv, p))) ++piv;
      if (piv == n) {
        // No invertible pivot (e.g. a jet whose value part vanishes): finish
        // with division-free expansion of the partially eliminated matrix;
        // the row operations so far preserved the determinant up to sign.
        T d = det_cofactor(a);
        return neg ? -d : d;
      }
      if (piv != p) {
        for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(piv, j));
        neg = !neg;
      }
      for (size_t i = p + 1; i < n; ++i) {
        if (is_zero(a.at(i, p))) continue;
        T f = a.at(i, p) / a.at(p, p);
        for (size_t j = p; j < n; ++j) a.at(i, j) -= f * a.at(p, j);
      }
    }
    T acc = a.at(0, 0);
    for (size_t p = 1; p < n; ++p) acc *= a.at(p, p);
    return neg ? -acc : acc;
  }
}

// Minor on explicit row/column index sets (0-based, strictly increasing).
template <class T>
T minor_det(const Matrix<T>& m, const std::vector<size_t>& rs, const std::vector<size_t>& cs) {
  if (rs.size() != cs.size()) throw std::invalid_argument("minor: non-square selection");
  return det(m.submatrix(rs, cs));
}

// n x n representative of the simple transposition s_i (1-based): identity
// with the 2x2 block [[0,1],[-1,0]] at rows/cols (i, i+1). Fourth root of
// the identity with determinant 1.
template <typename T>
Matrix<T> sdot_matrix(size_t n, int i, const T& proto) {
  Matrix<T> m = Matrix<T>::identity(n, proto);
  m.at(i - 1, i - 1) = ring_zero(proto);
  m.at(i, i) = ring_zero(proto);
  m.at(i - 1, i) = ring_one(proto);
  m.at(i, i - 1) = -ring_one(proto);
  return m;
}

// Identity plus a in slot (i, i+1), 1-based: the one-parameter subgroup of
// the i-th simple root.
template <typename T>
Matrix<T> x_matrix(size_t n, int i, const T& a) {
  Matrix<T> m = Matrix<T>::identity(n, a);
  m.at(i - 1, i) = a;
  return m;
}

inline Matrix<LFrac> to_lfrac(const Matrix<LaurentPoly>& m) {
  Matrix<LFrac> out(m.rows(), m.cols(), LFrac::zero(m.at(0, 0).vars()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = LFrac(m.at(i, j));
  return out;
}

}  // namespace grasmir

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "grasmir/combinat.hpp"
#include "grasmir/matrix.hpp"
#include "grasmir/rng.hpp"

namespace grasmir {

// Minor of the k x n matrix m on all rows and the 1-based column set j.
template <typename T>
T plucker(const Matrix<T>& m, const Subset& j) {
  std::vector<size_t> rows(m.rows()), cols;
  std::iota(rows.begin(), rows.end(), 0);
  cols.reserve(j.size());
  for (int c : j) cols.push_back(static_cast<size_t>(c - 1));
  return det(m.submatrix(rows, cols));
}

template <typename T>
T plucker(const Matrix<T>& m, const GrassContext& ctx, const Partition& lam) {
  return plucker(m, subset_of_partition(lam, ctx.k(), ctx.n()));
}

// True iff every cyclic-interval minor p_{mu_i} is nonzero, i.e. the row
// span avoids the anticanonical divisor.
bool in_check_X(const GrassContext& ctx, const Matrix<Rational>& m);

// Columns rotated left by one.
template <typename T>
Matrix<T> cyclic_shift_point(const Matrix<T>& m) {
  Matrix<T> out = m;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) out.at(r, c) = m.at(r, (c + 1) % m.cols());
  return out;
}

// Sum over i of p_{hat J_i}/p_{J_i}, the i = n-k term carrying the factor q.
// Throws when some interval minor vanishes, naming it.
template <typename T>
T eval_W(const GrassContext& ctx, const Matrix<T>& m, const T& q) {
  T acc = ring_zero(q);
  for (int i = 1; i <= ctx.n(); ++i) {
    T den = plucker(m, ctx.interval_subset(i));
    if (is_zero(den))
      throw std::domain_error("point lies on the divisor: p_" + ctx.interval_partition(i).str() +
                              " = 0");
    T term = plucker(m, ctx.hat_interval_subset(i)) / den;
    if (i == ctx.n() - ctx.k()) term = term * q;
    acc = acc + term;
  }
  return acc;
}

// Rational k x n matrix with entries in [-height, height] \ {0}, resampled
// until it avoids the divisor. Deterministic in rng.
Matrix<Rational> random_point(const GrassContext& ctx, Rng& rng, int height = 9,
                              int max_tries = 100);

}  // namespace grasmir

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grasmir/combinat.hpp"
#include "grasmir/laurent.hpp"
#include "grasmir/matrix.hpp"
#include "grasmir/qseries.hpp"

namespace grasmir {

// Variable table {d[1][1], ..., d[n-k][k], q}: the grid torus coordinates in
// row-major order with q last.
VarsPtr torus_vars(const GrassContext& ctx);
size_t torus_d_index(const GrassContext& ctx, int i, int j);
size_t torus_q_index(const GrassContext& ctx);

// Sum over the arrows of the (n-k) x k grid quiver of head/tail, with the
// extra source vertex fixed to 1 and the extra sink vertex to q. One Laurent
// monomial per arrow.
LaurentPoly ehx_potential(const GrassContext& ctx);

// Same with one arrow's ratio inverted; negative control for the pullback
// identity.
LaurentPoly ehx_potential_arrow_flipped(const GrassContext& ctx);

// Bottom k rows of w0dot * g, where g runs through the staircase word and
// decorates the letters lying over grid column j <= k: letter i there
// becomes a one-parameter factor with parameter ratio(i-k+1, j), standing
// for d[i-k+1][j]/d[i-k][j] with d[0][j] = 1; all other letters stay
// transposition representatives. The grid coordinates of the output's
// rectangle minors then reproduce the parameters (round-trip check).
template <typename T>
Matrix<T> quiver_reading(const GrassContext& ctx, const std::function<T(int, int)>& ratio,
                         const T& proto) {
  const size_t n = static_cast<size_t>(ctx.n());
  const int k = ctx.k();
  Matrix<T> acc = Matrix<T>::identity(n, proto);
  for (int letter : staircase_word(ctx.n())) acc = acc * sdot_matrix<T>(n, letter, proto);
  for (int c = 1; c <= ctx.n() - 1; ++c) {
    const int j = ctx.n() - c;
    for (int i = ctx.n() - c; i <= ctx.n() - 1; ++i) {
      if (j > k || i <= k - 1)
        acc = acc * sdot_matrix<T>(n, i, proto);
      else
        acc = acc * x_matrix<T>(n, i, ratio(i - k + 1, j));
    }
  }
  std::vector<size_t> rows, cols;
  for (size_t r = n - static_cast<size_t>(k); r < n; ++r) rows.push_back(r);
  for (size_t cidx = 0; cidx < n; ++cidx) cols.push_back(cidx);
  return acc.submatrix(rows, cols);
}

// Symbolic point of the torus image: entries are Laurent monomials in the
// torus variables (q unused).
Matrix<LaurentPoly> build_matrix_symbolic(const GrassContext& ctx);

// Same reading at a rational torus point d ((n-k) x k, all entries nonzero).
Matrix<Rational> build_matrix_from_torus(const GrassContext& ctx, const Matrix<Rational>& d);

// d[i][j] = p_{i x j} / p_{(i-1) x (j-1)} over rectangle column sets, with
// the empty rectangle read as the base minor p_(). Throws on a vanishing
// rectangle minor.
template <typename T>
Matrix<T> rect_ratios(const GrassContext& ctx, const Matrix<T>& point) {
  const int rows = ctx.n() - ctx.k(), cols = ctx.k();
  auto rect_minor = [&](int i, int j) -> T {
    Partition rect(std::vector<int>(static_cast<size_t>(i), j));
    Subset js = subset_of_partition(rect, ctx.k(), ctx.n());
    std::vector<size_t> rsel, csel;
    for (size_t r = 0; r < point.rows(); ++r) rsel.push_back(r);
    for (int c : js) csel.push_back(static_cast<size_t>(c - 1));
    return det(point.submatrix(rsel, csel));
  };
  Matrix<T> d(static_cast<size_t>(rows), static_cast<size_t>(cols), ring_zero(point.at(0, 0)));
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) {
      T den = (i == 1 || j == 1) ? rect_minor(0, 0) : rect_minor(i - 1, j - 1);
      if (is_zero(den))
        throw std::domain_error("rect_ratios: vanishing rectangle minor");
      d.at(i - 1, j - 1) = rect_minor(i, j) / den;
    }
  return d;
}

// rect_ratios(build_matrix_symbolic()) returns exactly the variables.
bool verify_roundtrip(const GrassContext& ctx);

// The superpotential of the Pluecker model pulled back along the torus
// reading equals the grid potential, as Laurent polynomials. flip_arrow
// tampers with one quiver arrow (negative control).
bool verify_pullback(const GrassContext& ctx, bool flip_arrow = false);

// Coefficient of q^m: (1/(m!)^n) * sum over monotone interior grid fillings
// bounded by m of the products of neighbor binomials.
QSeries aseries_closed(const GrassContext& ctx, size_t order);

// Coefficient of q^d: (1/(dn)!) * [q^d] constant_term(W^{dn}, d-variables),
// computed by incremental powers so the quantization invariant (the constant
// term vanishes unless n | m) is checked at every step. hook, if given, sees
// the term count after each multiplication.
QSeries aseries_constterm(const GrassContext& ctx, size_t order,
                          const LaurentPoly::PowHook& hook = nullptr);

}  // namespace grasmir

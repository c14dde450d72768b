#pragma once

#include <utility>
#include <vector>

#include "grasmir/combinat.hpp"
#include "grasmir/laurent.hpp"
#include "grasmir/matrix.hpp"
#include "grasmir/pluecker.hpp"
#include "grasmir/rng.hpp"

namespace grasmir {

// One-line form of the product of the letters, multiplying on the right.
std::vector<int> word_to_perm(const std::vector<int>& word, int n);

// Reduced <=> length equals the inversion count of the product.
bool is_reduced_word(const std::vector<int>& word, int n);

// Longest element of the parabolic subgroup generated by all s_i except
// s_{n-k}: concatenated staircases on {1..n-k} and {n-k+1..n}.
std::vector<int> wP_word(int k, int n);

// Product of transposition representatives over a reduced word. Throws on a
// non-reduced word, so accidental cancellations cannot hide.
template <typename T>
Matrix<T> weyl_matrix(int n, const std::vector<int>& word, const T& proto) {
  if (!is_reduced_word(word, n)) throw std::invalid_argument("weyl_matrix: word not reduced");
  Matrix<T> acc = Matrix<T>::identity(static_cast<size_t>(n), proto);
  for (int i : word) acc = acc * sdot_matrix<T>(static_cast<size_t>(n), i, proto);
  return acc;
}

// Superdiagonal entry u_{i,i+1}, 1-based.
template <typename T>
T e_star(const Matrix<T>& u, int i) {
  return u.at(static_cast<size_t>(i - 1), static_cast<size_t>(i));
}

// Factorization parameters live in a k x (n-k) matrix: row j in [1,k],
// column l in [k, n-1] at slot (j-1, l-k).
template <typename T>
Matrix<T> u2_from_params(const GrassContext& ctx, const Matrix<T>& m) {
  const size_t n = static_cast<size_t>(ctx.n());
  const int k = ctx.k();
  const T proto = ring_zero(m.at(0, 0));
  Matrix<T> acc = Matrix<T>::identity(n, proto);
  for (int j = 1; j <= k; ++j) {
    // u(j): the long-root factor id + m_{j,k} E_{j,k+1}, then the simple
    // factors x_{k+1}, ..., x_{n-1}.
    Matrix<T> uj = Matrix<T>::identity(n, proto);
    uj.at(static_cast<size_t>(j - 1), static_cast<size_t>(k)) = m.at(j - 1, 0);
    for (int l = k + 1; l <= ctx.n() - 1; ++l)
      uj = uj * x_matrix<T>(n, l, m.at(static_cast<size_t>(j - 1), static_cast<size_t>(l - k)));
    acc = acc * uj;
  }
  return acc;
}

// The unique upper-unitriangular u_{1,0} making u_{1,0} * (wPdot w0dot^{-1}
// u2) lower triangular, found by clearing columns right to left with the
// diagonal pivot; a zero pivot means the input left the generic locus.
// Returns (u_{1,0}, b) with b the lower-triangular product.
template <typename T>
std::pair<Matrix<T>, Matrix<T>> mu_tilde(const GrassContext& ctx, const Matrix<T>& u2) {
  const size_t n = static_cast<size_t>(ctx.n());
  const T proto = ring_zero(u2.at(0, 0));
  Matrix<T> wp = weyl_matrix<T>(ctx.n(), wP_word(ctx.k(), ctx.n()), proto);
  Matrix<T> w0inv = weyl_matrix<T>(ctx.n(), staircase_word(ctx.n()), proto).transposed();
  Matrix<T> a = wp * w0inv * u2;
  Matrix<T> u10 = Matrix<T>::identity(n, proto);
  for (size_t c = n; c-- > 1;) {
    if (is_zero(a.at(c, c)))
      throw std::domain_error("mu_tilde: zero pivot (point outside the generic locus)");
    for (size_t r = 0; r < c; ++r) {
      if (is_zero(a.at(r, c))) continue;
      T f = a.at(r, c) / a.at(c, c);
      for (size_t j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(c, j);
        u10.at(r, j) -= f * u10.at(c, j);
      }
    }
  }
  return {u10, a};
}

template <typename T>
Matrix<T> bottom_rows(const GrassContext& ctx, const Matrix<T>& b) {
  std::vector<size_t> rs, cs;
  for (size_t r = b.rows() - static_cast<size_t>(ctx.k()); r < b.rows(); ++r) rs.push_back(r);
  for (size_t c = 0; c < b.cols(); ++c) cs.push_back(c);
  return b.submatrix(rs, cs);
}

// Sum of all superdiagonal reads: every e_i*(u2), every e_i*(u_{1,0}) except
// i = n-k, and q times the i = n-k one.
template <typename T>
T F_eval(const GrassContext& ctx, const Matrix<T>& params, const T& q) {
  Matrix<T> u2 = u2_from_params(ctx, params);
  auto [u10, b] = mu_tilde(ctx, u2);
  T acc = ring_zero(q);
  for (int i = 1; i <= ctx.n() - 1; ++i) {
    acc += e_star(u2, i);
    if (i == ctx.n() - ctx.k())
      acc += q * e_star(u10, i);
    else
      acc += e_star(u10, i);
  }
  return acc;
}

// The two superdiagonal-versus-minor-ratio identity batteries on
// b = u_{1,0} wPdot w0dot^{-1} u2: entries of u_{1,0} below index n-k
// vanish and the rest are hat-interval over interval minors of the bottom k
// rows of b; same for u2 with the index shifted by k (index 0 read as n).
// perturb_b tampers with one entry of b first (negative control).
template <typename T>
bool verify_eistar(const GrassContext& ctx, const Matrix<T>& params, bool perturb_b = false) {
  const int n = ctx.n(), k = ctx.k();
  Matrix<T> u2 = u2_from_params(ctx, params);
  auto [u10, b] = mu_tilde(ctx, u2);
  if (perturb_b) b.at(b.rows() - 1, 0) += ring_one(b.at(0, 0));
  Matrix<T> m = bottom_rows(ctx, b);
  auto ratio = [&](int idx) {
    int i = ((idx - 1) % n + n) % n + 1;  // 0 reads as n
    return plucker(m, ctx.hat_interval_subset(i)) / plucker(m, ctx.interval_subset(i));
  };
  for (int i = 1; i <= n - 1; ++i) {
    T lhs = e_star(u10, i);
    if (i <= n - k - 1) {
      if (!is_zero(lhs)) return false;
    } else if (!(lhs == ratio(i))) {
      return false;
    }
    T lhs2 = e_star(u2, i);
    if (i <= k - 1) {
      if (!is_zero(lhs2)) return false;
    } else if (!(lhs2 == ratio(i - k))) {
      return false;
    }
  }
  return true;
}

// F on parameters against W on the bottom k rows of b.
template <typename T>
bool compare_F_W(const GrassContext& ctx, const Matrix<T>& params, const T& q) {
  Matrix<T> u2 = u2_from_params(ctx, params);
  auto [u10, b] = mu_tilde(ctx, u2);
  T f = ring_zero(q);
  for (int i = 1; i <= ctx.n() - 1; ++i) {
    f += e_star(u2, i);
    f += (i == ctx.n() - ctx.k()) ? q * e_star(u10, i) : e_star(u10, i);
  }
  return f == eval_W<T>(ctx, bottom_rows(ctx, b), q);
}

// Nonzero rational parameters of bounded height.
Matrix<Rational> random_fact_params(const GrassContext& ctx, Rng& rng, int bound = 9);

// Variable table {m[1][k], ..., m[k][n-1], q} and the matching symbolic
// parameter matrix / q value over it.
VarsPtr fact_vars(const GrassContext& ctx);
Matrix<LFrac> symbolic_fact_params(const GrassContext& ctx);
LFrac symbolic_fact_q(const GrassContext& ctx);

}  // namespace grasmir

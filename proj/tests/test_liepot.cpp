#include "doctest.h"

#include "grasmir/liepot.hpp"
#include "grasmir/pluecker.hpp"

using namespace grasmir;

TEST_CASE("reduced words and permutations") {
  for (int n : {3, 4, 5, 6}) {
    auto w0 = staircase_word(n);
    CHECK(is_reduced_word(w0, n));
    // the longest element reverses [1..n]
    auto p = word_to_perm(w0, n);
    for (int i = 0; i < n; ++i) CHECK(p[static_cast<size_t>(i)] == n - i);
  }
  // appending a repeated letter is never reduced
  auto w = staircase_word(4);
  w.push_back(w.back());
  CHECK_FALSE(is_reduced_word(w, 4));
  CHECK_FALSE(is_reduced_word({1, 2, 1, 2}, 3));  // braid-equivalent to 2,1,2,2
}

TEST_CASE("parabolic longest-element word") {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    auto w = wP_word(k, n);
    CHECK(is_reduced_word(w, n));
    // reverses {1..n-k} and {n-k+1..n} separately: no letter crosses n-k
    auto p = word_to_perm(w, n);
    int nk = n - k;
    for (int i = 1; i <= nk; ++i) CHECK(p[static_cast<size_t>(i - 1)] == nk + 1 - i);
    for (int i = nk + 1; i <= n; ++i) CHECK(p[static_cast<size_t>(i - 1)] == n + nk + 1 - i);
    for (int letter : w) CHECK(letter != nk);
  }
}

TEST_CASE("factorization: triangular shapes over random parameters") {
  GrassContext ctx(2, 5);
  Rng rng(14);
  for (int it = 0; it < 5; ++it) {
    Matrix<Rational> params = random_fact_params(ctx, rng);
    Matrix<Rational> u2 = u2_from_params(ctx, params);
    // u2 is upper unitriangular
    for (size_t r = 0; r < u2.rows(); ++r) {
      CHECK(u2.at(r, r) == Rational(1));
      for (size_t c = 0; c < r; ++c) CHECK(u2.at(r, c).is_zero());
    }
    auto [u10, b] = mu_tilde(ctx, u2);
    for (size_t r = 0; r < u10.rows(); ++r) {
      CHECK(u10.at(r, r) == Rational(1));
      for (size_t c = 0; c < r; ++c) CHECK(u10.at(r, c).is_zero());
    }
    for (size_t r = 0; r < b.rows(); ++r)
      for (size_t c = r + 1; c < b.cols(); ++c) CHECK(b.at(r, c).is_zero());
    // the bottom k rows reach the open locus
    CHECK(in_check_X(ctx, bottom_rows(ctx, b)));
  }
}

TEST_CASE("superdiagonal characters match minor ratios at random points") {
  Rng rng(40);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    GrassContext ctx(k, n);
    for (int it = 0; it < 25; ++it) {
      Rng child = rng.split(std::to_string(n * 100 + it));
      Matrix<Rational> params = random_fact_params(ctx, child);
      CHECK(verify_eistar(ctx, params));
      CHECK_FALSE(verify_eistar(ctx, params, true));  // tampered b
    }
  }
}

TEST_CASE("character sum equals the minor-ratio potential at random points") {
  Rng rng(41);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    GrassContext ctx(k, n);
    for (int it = 0; it < 25; ++it) {
      Rng child = rng.split(std::to_string(n * 100 + it));
      Matrix<Rational> params = random_fact_params(ctx, child);
      Rational q(child.nonzero_int(9));
      CHECK(compare_F_W(ctx, params, q));
      // F_eval is the left-hand side of that comparison
      Rational f = F_eval(ctx, params, q);
      auto [u10, b] = mu_tilde(ctx, u2_from_params(ctx, params));
      CHECK(f == eval_W<Rational>(ctx, bottom_rows(ctx, b), q));
    }
  }
}

TEST_CASE("character sum equals the potential as rational functions") {
  GrassContext ctx(1, 3);
  Matrix<LFrac> params = symbolic_fact_params(ctx);
  LFrac q = symbolic_fact_q(ctx);
  CHECK(verify_eistar(ctx, params));
  CHECK(compare_F_W(ctx, params, q));
}

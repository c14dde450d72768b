#include "grasmir/pluecker.hpp"

namespace grasmir {

bool in_check_X(const GrassContext& ctx, const Matrix<Rational>& m) {
  for (int i = 1; i <= ctx.n(); ++i)
    if (plucker(m, ctx.interval_subset(i)).is_zero()) return false;
  return true;
}

Matrix<Rational> random_point(const GrassContext& ctx, Rng& rng, int height, int max_tries) {
  for (int t = 0; t < max_tries; ++t) {
    Matrix<Rational> m(ctx.k(), ctx.n(), Rational(0));
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rng.nonzero_int(height));
    if (in_check_X(ctx, m)) return m;
  }
  throw std::runtime_error("random_point: no divisor-avoiding sample within retry bound");
}

}  // namespace grasmir

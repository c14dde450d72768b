#include "grasmir/liepot.hpp"

#include <numeric>

namespace grasmir {

std::vector<int> word_to_perm(const std::vector<int>& word, int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range");
    std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
  }
  return p;
}

bool is_reduced_word(const std::vector<int>& word, int n) {
  std::vector<int> p = word_to_perm(word, n);
  size_t inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv == word.size();
}

std::vector<int> wP_word(int k, int n) {
  std::vector<int> w = staircase_word(n - k);
  for (int i : staircase_word(k)) w.push_back(i + (n - k));
  return w;
}

Matrix<Rational> random_fact_params(const GrassContext& ctx, Rng& rng, int bound) {
  Matrix<Rational> m(static_cast<size_t>(ctx.k()), static_cast<size_t>(ctx.n() - ctx.k()),
                     Rational(0));
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rng.nonzero_int(bound));
  return m;
}

VarsPtr fact_vars(const GrassContext& ctx) {
  std::vector<std::string> names;
  for (int j = 1; j <= ctx.k(); ++j)
    for (int l = ctx.k(); l <= ctx.n() - 1; ++l)
      names.push_back("m[" + std::to_string(j) + "][" + std::to_string(l) + "]");
  names.push_back("q");
  return make_vars(std::move(names));
}

Matrix<LFrac> symbolic_fact_params(const GrassContext& ctx) {
  const VarsPtr vars = fact_vars(ctx);
  Matrix<LFrac> m(static_cast<size_t>(ctx.k()), static_cast<size_t>(ctx.n() - ctx.k()),
                  LFrac::zero(vars));
  size_t idx = 0;
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c) m.at(r, c) = LFrac(LaurentPoly::variable(vars, idx++));
  return m;
}

LFrac symbolic_fact_q(const GrassContext& ctx) {
  const VarsPtr vars = fact_vars(ctx);
  return LFrac(LaurentPoly::variable(vars, vars->size() - 1));
}

}  // namespace grasmir

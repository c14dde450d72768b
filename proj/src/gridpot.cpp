#include "grasmir/gridpot.hpp"

#include "grasmir/pluecker.hpp"

namespace grasmir {

VarsPtr torus_vars(const GrassContext& ctx) {
  std::vector<std::string> names;
  for (int i = 1; i <= ctx.n() - ctx.k(); ++i)
    for (int j = 1; j <= ctx.k(); ++j)
      names.push_back("d[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  names.push_back("q");
  return make_vars(std::move(names));
}

size_t torus_d_index(const GrassContext& ctx, int i, int j) {
  return static_cast<size_t>((i - 1) * ctx.k() + (j - 1));
}

size_t torus_q_index(const GrassContext& ctx) {
  return static_cast<size_t>((ctx.n() - ctx.k()) * ctx.k());
}

namespace {

// One monomial per arrow: source, horizontals row-major, verticals
// row-major, sink. flip < 0 leaves all as head/tail.
std::vector<LaurentPoly> arrow_terms(const GrassContext& ctx, int flip) {
  const VarsPtr vars = torus_vars(ctx);
  const int rows = ctx.n() - ctx.k(), cols = ctx.k();
  std::vector<LaurentPoly> terms;
  auto push = [&](int hi, int hj, int ti, int tj) {
    ExpVec e(vars->size(), 0);
    if (hi == 0) {
      e[torus_q_index(ctx)] += 1;  // sink carries q
    } else {
      e[torus_d_index(ctx, hi, hj)] += 1;
    }
    if (ti != 0) e[torus_d_index(ctx, ti, tj)] -= 1;
    if (static_cast<int>(terms.size()) == flip)
      for (auto& x : e) x = -x;
    terms.push_back(LaurentPoly::monomial(vars, e, Rational(1)));
  };
  push(1, 1, 0, 0);  // source arrow into (1,1)
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j < cols; ++j) push(i, j + 1, i, j);
  for (int i = 1; i < rows; ++i)
    for (int j = 1; j <= cols; ++j) push(i + 1, j, i, j);
  push(0, 0, rows, cols);  // sink arrow out of (rows, cols)
  return terms;
}

LaurentPoly sum_terms(const GrassContext& ctx, int flip) {
  LaurentPoly acc = LaurentPoly::zero(torus_vars(ctx));
  for (const auto& t : arrow_terms(ctx, flip)) acc += t;
  return acc;
}

}  // namespace

LaurentPoly ehx_potential(const GrassContext& ctx) { return sum_terms(ctx, -1); }

LaurentPoly ehx_potential_arrow_flipped(const GrassContext& ctx) {
  // First in-grid arrow when one exists, otherwise the sink arrow.
  const int rows = ctx.n() - ctx.k(), cols = ctx.k();
  int flip = (rows > 1 || cols > 1) ? 1 : 1 + rows * (cols - 1) + (rows - 1) * cols;
  return sum_terms(ctx, flip);
}

Matrix<LaurentPoly> build_matrix_symbolic(const GrassContext& ctx) {
  const VarsPtr vars = torus_vars(ctx);
  const LaurentPoly proto = LaurentPoly::zero(vars);
  std::function<LaurentPoly(int, int)> ratio = [&](int r, int j) {
    ExpVec e(vars->size(), 0);
    e[torus_d_index(ctx, r, j)] = 1;
    if (r >= 2) e[torus_d_index(ctx, r - 1, j)] = -1;
    return LaurentPoly::monomial(vars, e, Rational(1));
  };
  return quiver_reading<LaurentPoly>(ctx, ratio, proto);
}

Matrix<Rational> build_matrix_from_torus(const GrassContext& ctx, const Matrix<Rational>& d) {
  if (d.rows() != static_cast<size_t>(ctx.n() - ctx.k()) ||
      d.cols() != static_cast<size_t>(ctx.k()))
    throw std::invalid_argument("torus point has wrong shape");
  for (size_t i = 0; i < d.rows(); ++i)
    for (size_t j = 0; j < d.cols(); ++j)
      if (d.at(i, j).is_zero()) throw std::invalid_argument("torus point has zero coordinate");
  std::function<Rational(int, int)> ratio = [&](int r, int j) {
    Rational num = d.at(r - 1, j - 1);
    return r >= 2 ? num / d.at(r - 2, j - 1) : num;
  };
  return quiver_reading<Rational>(ctx, ratio, Rational(0));
}

bool verify_roundtrip(const GrassContext& ctx) {
  const VarsPtr vars = torus_vars(ctx);
  Matrix<LaurentPoly> m = build_matrix_symbolic(ctx);
  Matrix<LFrac> ratios = rect_ratios(ctx, to_lfrac(m));
  for (int i = 1; i <= ctx.n() - ctx.k(); ++i)
    for (int j = 1; j <= ctx.k(); ++j) {
      LFrac expect(LaurentPoly::variable(vars, torus_d_index(ctx, i, j)));
      if (!(ratios.at(i - 1, j - 1) == expect)) return false;
    }
  return true;
}

bool verify_pullback(const GrassContext& ctx, bool flip_arrow) {
  Matrix<LFrac> m = to_lfrac(build_matrix_symbolic(ctx));
  LFrac q(LaurentPoly::variable(torus_vars(ctx), torus_q_index(ctx)));
  LFrac pulled = eval_W<LFrac>(ctx, m, q);
  LaurentPoly grid = flip_arrow ? ehx_potential_arrow_flipped(ctx) : ehx_potential(ctx);
  return pulled == LFrac(grid);
}

QSeries aseries_closed(const GrassContext& ctx, size_t order) {
  const int rows = ctx.n() - ctx.k(), cols = ctx.k();
  QSeries out(order);
  for (size_t m = 0; m <= order; ++m) {
    // Interior cells in an order where the down and right neighbors are
    // already assigned.
    std::vector<std::pair<int, int>> cells;
    for (int i = rows - 1; i >= 1; --i)
      for (int j = cols - 1; j >= 1; --j) cells.emplace_back(i, j);
    std::vector<std::vector<long>> s(static_cast<size_t>(rows) + 1,
                                     std::vector<long>(static_cast<size_t>(cols) + 1, 0));
    auto value = [&](int i, int j) -> long {
      return (i == rows || j == cols) ? static_cast<long>(m) : s[i][j];
    };
    Rational total(0);
    std::function<void(size_t, const Rational&)> dfs = [&](size_t idx, const Rational& prod) {
      if (idx == cells.size()) {
        total += prod;
        return;
      }
      auto [i, j] = cells[idx];
      long bound = std::min(value(i + 1, j), value(i, j + 1));
      for (long v = 0; v <= bound; ++v) {
        s[i][j] = v;
        Integer down = binomial(static_cast<unsigned long>(value(i + 1, j)),
                                static_cast<unsigned long>(v));
        Integer right = binomial(static_cast<unsigned long>(value(i, j + 1)),
                                 static_cast<unsigned long>(v));
        dfs(idx + 1, prod * Rational(Integer(down * right)));
      }
    };
    dfs(0, Rational(1));
    Rational mfact(factorial(static_cast<unsigned long>(m)));
    out[m] = total / mfact.pow(ctx.n());
  }
  return out;
}

QSeries aseries_constterm(const GrassContext& ctx, size_t order,
                          const LaurentPoly::PowHook& hook) {
  const VarsPtr vars = torus_vars(ctx);
  const VarsPtr qonly = make_vars({"q"});
  std::vector<size_t> dvars;
  for (size_t i = 0; i < torus_q_index(ctx); ++i) dvars.push_back(i);
  const LaurentPoly w = ehx_potential(ctx);
  LaurentPoly power = LaurentPoly::constant(vars, Rational(1));
  QSeries out(order);
  out[0] = Rational(1);
  for (size_t m = 1; m <= order * static_cast<size_t>(ctx.n()); ++m) {
    power = power * w;
    if (hook) hook("W^" + std::to_string(m), power.term_count());
    LaurentPoly ct = power.constant_term(dvars, qonly);
    if (m % static_cast<size_t>(ctx.n()) != 0) {
      if (!ct.is_zero())
        throw std::logic_error("constant term of W^m nonzero though n does not divide m");
      continue;
    }
    size_t d = m / static_cast<size_t>(ctx.n());
    ExpVec qe{static_cast<int32_t>(d)};
    if (ct.term_count() != 1 || ct.coeff(qe).is_zero())
      throw std::logic_error("constant term of W^{dn} is not a single q^d monomial");
    out[d] = ct.coeff(qe) / Rational(factorial(static_cast<unsigned long>(m)));
  }
  return out;
}

}  // namespace grasmir

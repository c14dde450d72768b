#include "grasmir/fields.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "grasmir/jet.hpp"
#include "grasmir/pluecker.hpp"

namespace grasmir {

int boundary_coeff_closed(const GrassContext& ctx, const Partition& lam, int i) {
  int k = ctx.k(), n = ctx.n();
  Subset jl = subset_of_partition(lam, k, n);
  int c = 0;
  if (i <= n - k) {
    for (int x : jl)
      if (x <= i) ++c;
  } else {
    std::vector<char> in(static_cast<size_t>(n) + 1, 0);
    for (int x : jl) in[static_cast<size_t>(x)] = 1;
    for (int x = i + 1; x <= n; ++x)
      if (!in[static_cast<size_t>(x)]) ++c;
  }
  return c;
}

std::optional<std::string> boundary_lemma_violation(const GrassContext& ctx) {
  for (const auto& lam : ctx.basis()) {
    Subset jl = subset_of_partition(lam, ctx.k(), ctx.n());
    for (int i = 1; i <= ctx.n(); ++i) {
      int direct = c_coeff(jl, ctx.interval_subset(i));
      int closed = boundary_coeff_closed(ctx, lam, i);
      if (direct != closed)
        return "lam=" + lam.str() + " i=" + std::to_string(i) + ": definition " +
               std::to_string(direct) + " vs closed form " + std::to_string(closed);
    }
  }
  return std::nullopt;
}

int boundary_sum(const GrassContext& ctx, const Partition& lam) {
  int n = ctx.n();
  Subset jl = subset_of_partition(lam, ctx.k(), n);
  Subset je = subset_of_partition(Partition{}, ctx.k(), n);
  int s = 0;
  for (int m = 1; m <= n - 1; ++m) s += c_coeff(shift_subset(jl, m, n), shift_subset(je, m, n));
  return s;
}

std::optional<std::string> boundary_sum_violation(const GrassContext& ctx) {
  for (const auto& lam : ctx.basis()) {
    int s = boundary_sum(ctx, lam);
    if (s != lam.weight())
      return "lam=" + lam.str() + ": sum " + std::to_string(s) + " vs |lam| " +
             std::to_string(lam.weight());
  }
  return std::nullopt;
}

int cm_coeff(const GrassContext& ctx, const Partition& lam, const Subset& label, int m) {
  int n = ctx.n();
  Subset jl = shift_subset(subset_of_partition(lam, ctx.k(), n), m, n);
  Subset je = shift_subset(subset_of_partition(Partition{}, ctx.k(), n), m, n);
  return c_coeff(jl, shift_subset(label, m, n)) - c_coeff(jl, je);
}

LaurentPoly TorusChart::phat(const Subset& j) const {
  LaurentPoly p = plucker(M, j);
  auto q = p.divexact(p_empty);
  if (!q) throw std::logic_error("normalized minor p_" + subset_str(j) + " is not Laurent");
  return *q;
}

LaurentPoly TorusChart::phat(const Partition& lam) const {
  return phat(subset_of_partition(lam, ctx.k(), ctx.n()));
}

TorusChart make_torus_chart(const GrassContext& ctx) {
  TorusChart chart{ctx, build_matrix_symbolic(ctx), LaurentPoly::zero(torus_vars(ctx))};
  chart.p_empty = plucker(chart.M, subset_of_partition(Partition{}, ctx.k(), ctx.n()));
  if (!chart.p_empty.is_monomial())
    throw std::logic_error("empty-set minor of the grid chart is not a monomial");
  return chart;
}

namespace {

Partition rect(int i, int j) {
  if (i == 0 || j == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<size_t>(i), j));
}

// Success list of the one-box product: partitions with one box added, plus
// the rim-removal partner when it exists.
struct Successors {
  std::vector<Partition> add;
  std::optional<Partition> rim;
};

Successors successors(const GrassContext& ctx, const Partition& lam) {
  return Successors{ctx.monk_add(lam), ctx.monk_rim(lam)};
}

int twist_interval(const GrassContext& ctx, int m) {
  int n = ctx.n();
  return ((m - ctx.k() - 1) % n + n) % n + 1;
}

std::set<Subset> rectangle_labels(const GrassContext& ctx) {
  std::set<Subset> out;
  for (int i = 0; i <= ctx.n() - ctx.k(); ++i)
    for (int j = 0; j <= ctx.k(); ++j)
      out.insert(subset_of_partition(rect(i, j), ctx.k(), ctx.n()));
  return out;
}

// Exact Gaussian solve; nullopt when singular.
std::optional<std::vector<Rational>> solve_linear(Matrix<Rational> a, std::vector<Rational> b) {
  size_t n = a.rows();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a.at(piv, c).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      for (size_t t = 0; t < n; ++t) std::swap(a.at(piv, t), a.at(c, t));
      std::swap(b[piv], b[c]);
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == c || a.at(r, c).is_zero()) continue;
      Rational f = a.at(r, c) / a.at(c, c);
      for (size_t t = c; t < n; ++t) a.at(r, t) -= f * a.at(c, t);
      b[r] -= f * b[c];
    }
  }
  std::vector<Rational> x(n);
  for (size_t c = 0; c < n; ++c) x[c] = b[c] / a.at(c, c);
  return x;
}

}  // namespace

TorusField xfield_rectangles(const TorusChart& chart, const Partition& lam, int m) {
  const GrassContext& ctx = chart.ctx;
  LaurentPoly pl = chart.phat(lam);
  TorusField f;
  for (int i = 1; i <= ctx.n() - ctx.k(); ++i)
    for (int j = 1; j <= ctx.k(); ++j) {
      int diff = cm_coeff(ctx, lam, subset_of_partition(rect(i, j), ctx.k(), ctx.n()), m) -
                 cm_coeff(ctx, lam, subset_of_partition(rect(i - 1, j - 1), ctx.k(), ctx.n()), m);
      f.coeff.push_back(LaurentPoly::constant(pl.vars(), Rational(diff)) * pl);
    }
  return f;
}

SeedField xfield_on_seed(const TorusChart& chart, const Seed& seed, const Partition& lam, int m) {
  const GrassContext& ctx = chart.ctx;
  size_t dim = static_cast<size_t>(ctx.dim());
  Subset jlam = subset_of_partition(lam, ctx.k(), ctx.n());
  if (!seed.vertex_of(jlam))
    throw std::invalid_argument("seed does not contain the label of " + lam.str());
  Subset jempty = subset_of_partition(Partition{}, ctx.k(), ctx.n());

  std::vector<Subset> mus;
  for (const auto& j : seed.labels)
    if (j != jempty) mus.push_back(j);
  if (mus.size() != dim) throw std::logic_error("seed label count does not match the grid");

  LaurentPoly pl = chart.phat(lam);
  Matrix<LaurentPoly> a(dim, dim, LaurentPoly::zero(pl.vars()));
  std::vector<LaurentPoly> b;
  for (size_t r = 0; r < dim; ++r) {
    LaurentPoly pm = chart.phat(mus[r]);
    for (size_t c = 0; c < dim; ++c) a.at(r, c) = pm.logderiv(c);
    b.push_back(LaurentPoly::constant(pl.vars(), Rational(cm_coeff(ctx, lam, mus[r], m))) * pl *
                pm);
  }
  LaurentPoly d = det(a);
  if (d.is_zero()) throw std::logic_error("transport system is singular");
  SeedField f;
  for (size_t c = 0; c < dim; ++c) {
    Matrix<LaurentPoly> ac = a;
    for (size_t r = 0; r < dim; ++r) ac.at(r, c) = b[r];
    f.coeff.emplace_back(det(ac), d);
  }
  return f;
}

namespace {

// Both verify_*_symbolic routes compute the field as exact fractions; the
// rectangles seed short-circuits to the monomial change of variables.
std::vector<LFrac> field_fractions(const TorusChart& chart, const Seed& seed,
                                   const Partition& lam, int m) {
  std::set<Subset> got(seed.labels.begin(), seed.labels.end());
  if (got == rectangle_labels(chart.ctx)) {
    std::vector<LFrac> out;
    for (const auto& c : xfield_rectangles(chart, lam, m).coeff) out.emplace_back(c);
    return out;
  }
  return xfield_on_seed(chart, seed, lam, m).coeff;
}

LFrac action_rhs(const TorusChart& chart, const Partition& lam, int m) {
  const GrassContext& ctx = chart.ctx;
  const VarsPtr& vars = chart.M.at(0, 0).vars();
  LaurentPoly q = LaurentPoly::variable(vars, "q", 1);
  Successors s = successors(ctx, lam);
  LaurentPoly sum = LaurentPoly::zero(vars);
  for (const auto& mu : s.add) sum = sum + chart.phat(mu);
  if (s.rim) sum = sum + q * chart.phat(*s.rim);
  int i = twist_interval(ctx, m);
  LaurentPoly tnum = chart.phat(ctx.hat_interval_subset(i)) * chart.phat(lam);
  if (m == ctx.n()) tnum = q * tnum;
  return LFrac(sum) - LFrac(tnum, chart.phat(ctx.interval_subset(i)));
}

}  // namespace

ActionReport verify_action_symbolic(const TorusChart& chart, const Seed& seed,
                                    const Partition& lam, int m) {
  const GrassContext& ctx = chart.ctx;
  LaurentPoly w = ehx_potential(ctx);
  std::vector<LFrac> f = field_fractions(chart, seed, lam, m);
  LFrac lhs = LFrac::zero(w.vars());
  for (size_t c = 0; c < f.size(); ++c) lhs += f[c] * LFrac(w.logderiv(c));
  bool equal = lhs == action_rhs(chart, lam, m);
  return ActionReport{lam, m, equal,
                      "symbolic over " + std::to_string(ctx.dim()) + " grid variables"};
}

bool verify_sum_symbolic(const TorusChart& chart, const Seed& seed, const Partition& lam) {
  const GrassContext& ctx = chart.ctx;
  LaurentPoly w = ehx_potential(ctx);
  const VarsPtr& vars = w.vars();
  LFrac lhs = LFrac::zero(vars);
  for (int m = 1; m <= ctx.n(); ++m) {
    std::vector<LFrac> f = field_fractions(chart, seed, lam, m);
    for (size_t c = 0; c < f.size(); ++c) lhs += f[c] * LFrac(w.logderiv(c));
  }
  LaurentPoly q = LaurentPoly::variable(vars, "q", 1);
  Successors s = successors(ctx, lam);
  LaurentPoly sum = LaurentPoly::zero(vars);
  for (const auto& mu : s.add) sum = sum + chart.phat(mu);
  if (s.rim) sum = sum + q * chart.phat(*s.rim);
  LFrac rhs = LFrac(LaurentPoly::constant(vars, Rational(ctx.n())) * sum) -
              LFrac(w * chart.phat(lam));
  return lhs == rhs;
}

namespace {

// One exact sample of the grid chart: point, jets of every seed label's
// normalized minor, and the solved transport coefficients for each requested
// m. Retries until the chart, the superpotential denominators, and the
// transport system are all nonsingular.
struct PointData {
  std::vector<Rational> dvals;
  Rational qval;
  Jet w;                                  // value and d-derivatives of W at the point
  std::vector<std::vector<Rational>> f;   // per requested m
  std::vector<Rational> phat_at;          // per basis partition (indexed by ctx)
};

PointData sample_point(const GrassContext& ctx, const Seed& seed, const Partition& lam,
                       const std::vector<int>& ms, Rng& rng) {
  size_t dim = static_cast<size_t>(ctx.dim());
  Subset jempty = subset_of_partition(Partition{}, ctx.k(), ctx.n());
  std::vector<Subset> mus;
  for (const auto& j : seed.labels)
    if (j != jempty) mus.push_back(j);
  if (mus.size() != dim) throw std::logic_error("seed label count does not match the grid");
  if (!seed.vertex_of(subset_of_partition(lam, ctx.k(), ctx.n())))
    throw std::invalid_argument("seed does not contain the label of " + lam.str());

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Rational> dvals;
    for (size_t i = 0; i < dim; ++i) dvals.push_back(Rational(rng.nonzero_int(5)));
    auto dj = [&](int r, int j) {
      size_t idx = torus_d_index(ctx, r, j);
      return Jet::var(dvals[idx], idx, dim);
    };
    std::function<Jet(int, int)> ratio = [&](int r, int j) {
      return r >= 2 ? dj(r, j) / dj(r - 1, j) : dj(1, j);
    };
    Matrix<Jet> mj = quiver_reading<Jet>(ctx, ratio, Jet(Rational(0), dim));
    Jet pe = plucker(mj, jempty);
    if (pe.v.is_zero()) continue;

    bool bad = false;
    std::vector<Jet> ph;
    for (const auto& j : mus) {
      Jet p = plucker(mj, j) / pe;
      if (p.v.is_zero()) {
        bad = true;
        break;
      }
      ph.push_back(p);
    }
    if (bad) continue;

    Matrix<Rational> a(dim, dim, Rational(0));
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c) a.at(r, c) = dvals[c] * ph[r].d[c];

    Jet plam = plucker(mj, subset_of_partition(lam, ctx.k(), ctx.n())) / pe;
    PointData out;
    out.dvals = dvals;
    for (int m : ms) {
      std::vector<Rational> b;
      for (size_t r = 0; r < dim; ++r)
        b.push_back(plam.v * Rational(cm_coeff(ctx, lam, mus[r], m)) * ph[r].v);
      auto x = solve_linear(a, b);
      if (!x) {
        bad = true;
        break;
      }
      out.f.push_back(*x);
    }
    if (bad) continue;

    out.qval = Rational(rng.nonzero_int(5));
    bool divisor = false;
    for (int i = 1; i <= ctx.n(); ++i)
      if (plucker(mj, ctx.interval_subset(i)).v.is_zero()) divisor = true;
    if (divisor) continue;
    out.w = eval_W<Jet>(ctx, mj, Jet::constant(out.qval, dim));
    for (const auto& p : ctx.basis()) {
      Jet ph2 = plucker(mj, ctx, p) / pe;
      out.phat_at.push_back(ph2.v);
    }
    return out;
  }
  throw std::runtime_error("failed to sample a nonsingular grid point");
}

Rational action_rhs_at(const GrassContext& ctx, const PointData& pt, const Partition& lam,
                       int m) {
  Successors s = successors(ctx, lam);
  Rational sum(0);
  for (const auto& mu : s.add) sum += pt.phat_at[ctx.index_of(mu)];
  if (s.rim) sum += pt.qval * pt.phat_at[ctx.index_of(*s.rim)];
  int i = twist_interval(ctx, m);
  Rational twist = pt.phat_at[ctx.index_of(ctx.hat_interval_partition(i))] /
                   pt.phat_at[ctx.index_of(ctx.interval_partition(i))] *
                   pt.phat_at[ctx.index_of(lam)];
  if (m == ctx.n()) twist *= pt.qval;
  return sum - twist;
}

}  // namespace

ActionReport verify_action_at_point(const GrassContext& ctx, const Seed& seed,
                                    const Partition& lam, int m, Rng& rng) {
  PointData pt = sample_point(ctx, seed, lam, {m}, rng);
  Rational lhs(0);
  for (size_t c = 0; c < pt.f[0].size(); ++c) lhs += pt.f[0][c] * pt.dvals[c] * pt.w.d[c];
  bool equal = lhs == action_rhs_at(ctx, pt, lam, m);
  return ActionReport{lam, m, equal, "exact random point, entries of height <= 5"};
}

bool verify_sum_at_point(const GrassContext& ctx, const Seed& seed, const Partition& lam,
                         Rng& rng) {
  std::vector<int> ms;
  for (int m = 1; m <= ctx.n(); ++m) ms.push_back(m);
  PointData pt = sample_point(ctx, seed, lam, ms, rng);
  Rational lhs(0);
  for (size_t t = 0; t < ms.size(); ++t)
    for (size_t c = 0; c < pt.f[t].size(); ++c) lhs += pt.f[t][c] * pt.dvals[c] * pt.w.d[c];
  Successors s = successors(ctx, lam);
  Rational sum(0);
  for (const auto& mu : s.add) sum += pt.phat_at[ctx.index_of(mu)];
  if (s.rim) sum += pt.qval * pt.phat_at[ctx.index_of(*s.rim)];
  Rational rhs = Rational(ctx.n()) * sum - pt.w.v * pt.phat_at[ctx.index_of(lam)];
  return lhs == rhs;
}

GmConnection gm_connection_coeffs(const GrassContext& ctx) {
  if (auto v = boundary_lemma_violation(ctx))
    throw std::logic_error("boundary coefficient check failed: " + *v);
  if (auto v = boundary_sum_violation(ctx))
    throw std::logic_error("boundary sum check failed: " + *v);

  bool symbolic = ctx.dim() <= 4;
  std::optional<TorusChart> chart;
  if (symbolic) chart = make_torus_chart(ctx);
  Rng rng(1912);
  for (const auto& lam : ctx.basis()) {
    Seed seed = find_seed_containing(ctx, subset_of_partition(lam, ctx.k(), ctx.n()));
    for (int m = 1; m <= ctx.n(); ++m) {
      bool ok;
      if (symbolic) {
        ok = verify_action_symbolic(*chart, seed, lam, m).equal;
      } else {
        Rng child = rng.split("action/" + lam.str() + "/" + std::to_string(m));
        ok = verify_action_at_point(ctx, seed, lam, m, child).equal;
      }
      if (!ok)
        throw std::logic_error("action check failed at lam=" + lam.str() +
                               " m=" + std::to_string(m));
    }
    bool sum_ok;
    if (symbolic) {
      sum_ok = verify_sum_symbolic(*chart, seed, lam);
    } else {
      Rng child = rng.split("sum/" + lam.str());
      sum_ok = verify_sum_at_point(ctx, seed, lam, child);
    }
    if (!sum_ok) throw std::logic_error("sum check failed at lam=" + lam.str());
  }

  size_t nb = ctx.size();
  GmConnection out{Matrix<Rational>(nb, nb, Rational(0)), Matrix<Rational>(nb, nb, Rational(0)),
                   std::vector<int>(nb, 0)};
  for (size_t c = 0; c < nb; ++c) {
    const Partition& lam = ctx.partition_at(c);
    Successors s = successors(ctx, lam);
    for (const auto& mu : s.add) out.classical.at(ctx.index_of(mu), c) = Rational(1);
    if (s.rim) out.quantum.at(ctx.index_of(*s.rim), c) = Rational(1);
    out.grading[c] = boundary_sum(ctx, lam);
  }
  return out;
}

}  // namespace grasmir

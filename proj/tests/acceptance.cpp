// Acceptance gate: ten criteria, one PASS/FAIL line each, exit 0 only if
// every requested criterion holds. All comparisons are exact; there are no
// tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "grasmir/cluster.hpp"
#include "grasmir/connection.hpp"
#include "grasmir/fields.hpp"
#include "grasmir/gridpot.hpp"
#include "grasmir/liepot.hpp"
#include "grasmir/pluecker.hpp"

using namespace grasmir;

namespace {

bool criterion1() {
  // Quantum one-box products at k=3 n=5 match the three worked displays.
  GrassContext ctx(3, 5);
  ConnectionPencil p = monk_matrix(ctx);
  auto column = [&](const Partition& lam, const std::vector<Partition>& cl,
                    const std::vector<Partition>& qu) {
    size_t c = ctx.index_of(lam);
    for (size_t r = 0; r < ctx.size(); ++r) {
      bool in_cl = std::find(cl.begin(), cl.end(), ctx.partition_at(r)) != cl.end();
      bool in_qu = std::find(qu.begin(), qu.end(), ctx.partition_at(r)) != qu.end();
      if (p.classical.at(r, c) != Rational(in_cl ? 1 : 0)) return false;
      if (p.quantum.at(r, c) != Rational(in_qu ? 1 : 0)) return false;
    }
    return true;
  };
  return column(Partition({2, 1}), {Partition({2, 2}), Partition({3, 1})}, {}) &&
         column(Partition({3, 2}), {Partition({3, 3})}, {Partition({1})}) &&
         column(Partition({3, 3}), {}, {Partition({2})});
}

bool criterion2() {
  // Both connection directions applied to basis vectors give the six
  // worked displays at k=3 n=5.
  GrassContext ctx(3, 5);
  ConnectionPencil p = monk_matrix(ctx);
  auto nq = [&](const Partition& lam) {
    return coh_str(ctx, nabla_q(ctx, p, basis_section(ctx, ctx.index_of(lam))));
  };
  auto nz = [&](const Partition& lam) {
    return coh_str(ctx, nabla_z(ctx, p, basis_section(ctx, ctx.index_of(lam))));
  };
  return nq(Partition({2, 1})) == "z^-1*(2,2) + z^-1*(3,1)" &&
         nq(Partition({3, 2})) == "q*z^-1*(1) + z^-1*(3,3)" &&
         nq(Partition({3, 3})) == "q*z^-1*(2)" &&
         nz(Partition({2, 1})) == "3*(2,1) + (-5*z^-1)*(2,2) + (-5*z^-1)*(3,1)" &&
         nz(Partition({3, 2})) == "(-5*q*z^-1)*(1) + 5*(3,2) + (-5*z^-1)*(3,3)" &&
         nz(Partition({3, 3})) == "(-5*q*z^-1)*(2) + 6*(3,3)";
}

bool criterion3() {
  // The two connection directions commute for every k < n <= 6.
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      if (!flatness_check(GrassContext(k, n))) return false;
  return true;
}

bool criterion4() {
  // Pulling the minor-ratio potential back along the grid reading gives the
  // grid potential symbolically, and the grid coordinates round-trip.
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    GrassContext ctx(k, n);
    if (!verify_pullback(ctx)) return false;
    if (!verify_roundtrip(ctx)) return false;
  }
  return true;
}

bool criterion5() {
  // The closed-form series and the constant-term series agree; for k = n-1
  // (projective space) both equal 1/(d!)^n.
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    GrassContext ctx(k, n);
    if (aseries_closed(ctx, 2) != aseries_constterm(ctx, 2)) return false;
  }
  for (int n = 2; n <= 4; ++n) {
    GrassContext ctx(n - 1, n);
    QSeries a = aseries_closed(ctx, 3);
    if (a != aseries_constterm(ctx, 3)) return false;
    Rational fact(1);
    for (int d = 0; d <= 3; ++d) {
      if (d > 0) fact *= Rational(d);
      if (a[static_cast<size_t>(d)] != Rational(1) / fact.pow(n)) return false;
    }
  }
  return true;
}

bool criterion6() {
  // The character-sum potential of the factorization model equals the
  // minor-ratio potential: 100 exact random parameter points each at
  // k=2 n=4 and k=2 n=5, the superdiagonal identities at the same points,
  // and both symbolically at k=1 n=3.
  Rng root(2024);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    GrassContext ctx(k, n);
    for (int t = 0; t < 100; ++t) {
      Rng child = root.split(std::to_string(n) + "/" + std::to_string(t));
      Matrix<Rational> params = random_fact_params(ctx, child);
      Rational q(child.nonzero_int(9));
      if (!verify_eistar(ctx, params)) return false;
      if (!compare_F_W(ctx, params, q)) return false;
    }
  }
  GrassContext small(1, 3);
  return verify_eistar(small, symbolic_fact_params(small)) &&
         compare_F_W(small, symbolic_fact_params(small), symbolic_fact_q(small));
}

bool criterion7() {
  // 50-step random mutation walks preserve weak separation, and the
  // exchange identity holds at every mutated vertex on 5 random matrices.
  for (auto [k, n] : {std::pair{2, 5}, {3, 6}}) {
    GrassContext ctx(k, n);
    Rng root(501);
    Rng walk_rng = root.split("walk");
    Rng mat_root = root.split("mat");
    bool ok = true;
    random_walk(initial_seed(ctx), 50, walk_rng, [&](const Seed& s, int step, int vertex) {
      if (!seed_weakly_separated(s, n)) ok = false;
      if (step == 0 || !ok) return;
      for (int t = 0; t < 5; ++t) {
        Rng mr = mat_root.split(static_cast<uint64_t>(step * 16 + t));
        Matrix<Rational> pt(static_cast<size_t>(k), static_cast<size_t>(n), Rational(0));
        for (size_t r = 0; r < pt.rows(); ++r)
          for (size_t c = 0; c < pt.cols(); ++c) pt.at(r, c) = Rational(mr.nonzero_int(9));
        if (!exchange_check(s, vertex, pt)) ok = false;
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool criterion8() {
  // Along 20-step walks, the per-vertex balance of every shifted field
  // holds exactly for the labels resident in the seed and fails for every
  // absent label, for all labels and all shifts at every visited seed.
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    GrassContext ctx(k, n);
    Rng walk_rng = Rng(808).split("walk");
    bool ok = true;
    random_walk(initial_seed(ctx), 20, walk_rng, [&](const Seed& s, int, int) {
      if (!ok) return;
      for (const auto& lam : ctx.basis()) {
        bool resident = s.vertex_of(subset_of_partition(lam, k, n)).has_value();
        for (int m = 1; m <= n; ++m)
          if (additivity_violation(ctx, s, lam, m).has_value() == resident) {
            ok = false;
            return;
          }
      }
    });
    if (!ok) return false;
  }
  return true;
}

bool criterion9() {
  // Boundary coefficient closed forms and the shift-sum identity hold
  // exhaustively.
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    GrassContext ctx(k, n);
    if (boundary_lemma_violation(ctx)) return false;
    if (boundary_sum_violation(ctx)) return false;
  }
  return true;
}

bool criterion10() {
  // Field actions on the potential: symbolic for all labels and shifts at
  // k=2 n=4; 25 exact random points per case at k=2 n=5; and the assembled
  // connection coefficients equal the one-box pencil at three contexts.
  {
    GrassContext ctx(2, 4);
    TorusChart chart = make_torus_chart(ctx);
    for (const auto& lam : ctx.basis()) {
      Seed s = find_seed_containing(ctx, subset_of_partition(lam, 2, 4));
      for (int m = 1; m <= 4; ++m)
        if (!verify_action_symbolic(chart, s, lam, m).equal) return false;
      if (!verify_sum_symbolic(chart, s, lam)) return false;
    }
  }
  {
    GrassContext ctx(2, 5);
    Rng root(1010);
    for (const auto& lam : ctx.basis()) {
      Seed s = find_seed_containing(ctx, subset_of_partition(lam, 2, 5));
      for (int m = 1; m <= 5; ++m)
        for (int t = 0; t < 25; ++t) {
          Rng child = root.split(lam.str() + "/" + std::to_string(m) + "/" + std::to_string(t));
          if (!verify_action_at_point(ctx, s, lam, m, child).equal) return false;
        }
      for (int t = 0; t < 25; ++t) {
        Rng child = root.split(lam.str() + "/sum/" + std::to_string(t));
        if (!verify_sum_at_point(ctx, s, lam, child)) return false;
      }
    }
  }
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    GrassContext ctx(k, n);
    GmConnection g = gm_connection_coeffs(ctx);
    ConnectionPencil p = monk_matrix(ctx);
    if (g.classical != p.classical || g.quantum != p.quantum || g.grading != p.grading)
      return false;
  }
  return true;
}

struct Criterion {
  int id;
  const char* what;
  bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "one-box quantum product columns match the worked displays (k=3 n=5)", criterion1},
    {2, "both connection directions match the six worked displays (k=3 n=5)", criterion2},
    {3, "q- and z-direction operators commute for every k < n <= 6", criterion3},
    {4, "potential pullback and grid-coordinate round trip, symbolic", criterion4},
    {5, "series coefficients agree between methods; projective oracle 1/(d!)^n", criterion5},
    {6, "factorization potential equals minor-ratio potential (random + symbolic)", criterion6},
    {7, "50-step mutation walks: weak separation and exchange identity", criterion7},
    {8, "per-vertex field balance marks exactly the resident labels (20-step walks)",
     criterion8},
    {9, "boundary coefficient closed forms and shift-sum identity, exhaustive", criterion9},
    {10, "field actions reproduce the connection coefficients exactly", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : kCriteria) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("CRITERION %2d %s: %s (%.2fs)\n", c.id, ok ? "PASS" : "FAIL", c.what, secs);
    if (!ok) all_ok = false;
  }
  return all_ok ? 0 : 1;
}

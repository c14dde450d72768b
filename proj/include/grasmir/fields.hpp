#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grasmir/cluster.hpp"
#include "grasmir/combinat.hpp"
#include "grasmir/gridpot.hpp"
#include "grasmir/laurent.hpp"
#include "grasmir/matrix.hpp"
#include "grasmir/rational.hpp"
#include "grasmir/rng.hpp"

namespace grasmir {

// Closed form for the coefficient of lambda at the cyclic interval J_i:
// |J_lam ∩ [1,i]| when i <= n-k, else |J_lam^c ∩ [i+1,n]|.
int boundary_coeff_closed(const GrassContext& ctx, const Partition& lam, int i);

// First (lam, i) where the closed form disagrees with c_coeff on J_i.
std::optional<std::string> boundary_lemma_violation(const GrassContext& ctx);

// Sum over m in [1, n-1] of the coefficient of the m-shifted lambda at the
// m-shifted empty diagram; equals |lam|.
int boundary_sum(const GrassContext& ctx, const Partition& lam);
std::optional<std::string> boundary_sum_violation(const GrassContext& ctx);

// c^{(m)} coefficient of a k-subset label against lambda.
int cm_coeff(const GrassContext& ctx, const Partition& lam, const Subset& label, int m);

// The symbolic grid chart: quiver matrix over the torus variables, with
// every Pluecker coordinate normalized by the (monomial) empty-set minor.
// All normalized minors are Laurent polynomials in the d variables.
struct TorusChart {
  GrassContext ctx;
  Matrix<LaurentPoly> M;
  LaurentPoly p_empty;

  LaurentPoly phat(const Subset& j) const;
  LaurentPoly phat(const Partition& lam) const;
};

TorusChart make_torus_chart(const GrassContext& ctx);

// A vector field sum f_ij * d_ij d/d(d_ij) on the grid torus, one coefficient
// per grid coordinate in row-major order.
struct TorusField {
  std::vector<LaurentPoly> coeff;
};

// Transport of p_lam * sum_mu c^{(m)}(mu) p_mu d/dp_mu to the grid torus when
// the chart's own (rectangles) labels are used: the monomial change of
// variables d_ij = phat_{i x j}/phat_{(i-1)x(j-1)} turns the log-coefficient
// vector into successive differences.
TorusField xfield_rectangles(const TorusChart& chart, const Partition& lam, int m);

// Same field for an arbitrary seed containing J_lam: the coefficients solve
// the exact linear system X(phat_mu) = phat_lam c^{(m)}(mu) phat_mu over the
// seed's labels (Cramer, exact). Entries of the returned field are fractions
// cleared against the system determinant; use through the verify_* routines.
struct SeedField {
  std::vector<LFrac> coeff;
};
SeedField xfield_on_seed(const TorusChart& chart, const Seed& seed, const Partition& lam, int m);

struct ActionReport {
  Partition lam;
  int m = 0;
  bool equal = false;
  std::string detail;
};

// X^{(m)}_lam applied to the grid superpotential versus the sum over the
// box-addition and rim-removal successors of lam minus the twist term
// q^{[m=n]} (phat_{hat L_m}/phat_{L_m}) phat_lam, as exact Laurent fractions.
ActionReport verify_action_symbolic(const TorusChart& chart, const Seed& seed,
                                    const Partition& lam, int m);

// Sum over m of the fields against n*(successor sum) - W*phat_lam.
bool verify_sum_symbolic(const TorusChart& chart, const Seed& seed, const Partition& lam);

// Point-mode versions: evaluate the chart at a random rational grid point
// (jets carry the derivatives), solve the transport system numerically but
// exactly, and compare both sides as rationals.
ActionReport verify_action_at_point(const GrassContext& ctx, const Seed& seed,
                                    const Partition& lam, int m, Rng& rng);
bool verify_sum_at_point(const GrassContext& ctx, const Seed& seed, const Partition& lam,
                         Rng& rng);

// B-side connection data on the basis of classes p_lam * volume form:
// the q-direction matrix pencil (classical + q*quantum, to be scaled by 1/z)
// and the diagonal grading assembled from boundary sums.
struct GmConnection {
  Matrix<Rational> classical, quantum;
  std::vector<int> grading;
};

// Verifies the boundary lemmas plus the action and sum identities for this
// context (symbolically when the grid has at most 4 cells, else at sampled
// exact points), then assembles the matrices. Throws if any check fails.
GmConnection gm_connection_coeffs(const GrassContext& ctx);

}  // namespace grasmir

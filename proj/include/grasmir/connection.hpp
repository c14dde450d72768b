#pragma once

#include <string>
#include <vector>

#include "grasmir/combinat.hpp"
#include "grasmir/laurent.hpp"
#include "grasmir/matrix.hpp"

namespace grasmir {

// Multiplication by the single-box class, as a pencil in q: the classical
// part adds one box, the quantum part removes an (n-1)-box rim. Columns are
// inputs, rows outputs, in ctx basis order. Entries are 0 or 1.
struct ConnectionPencil {
  Matrix<Rational> classical;
  Matrix<Rational> quantum;
  std::vector<int> grading;  // weight(lambda) per basis slot
};

ConnectionPencil monk_matrix(const GrassContext& ctx);

// Shared variable set {q, z} for everything connection-valued.
VarsPtr qz_vars();

// Section of the trivialized cohomology bundle: one Laurent coefficient in
// {q, z} per basis partition.
using CohVector = std::vector<LaurentPoly>;

CohVector basis_section(const GrassContext& ctx, size_t idx);

// A + qB over {q, z}.
Matrix<LaurentPoly> pencil_matrix(const GrassContext& ctx, const ConnectionPencil& p);

// q d/dq s + (1/z) (A + qB) s
CohVector nabla_q(const GrassContext& ctx, const ConnectionPencil& p, const CohVector& s);

// z d/dz s + Gr s - (n/z) (A + qB) s
CohVector nabla_z(const GrassContext& ctx, const ConnectionPencil& p, const CohVector& s);

// Matrix of the connection in direction 'q' or 'z' (the part acting on
// constant sections): (1/z)(A+qB), resp. Gr - (n/z)(A+qB).
Matrix<LaurentPoly> nabla_matrix(const GrassContext& ctx, const ConnectionPencil& p, char dir);

// z^N * sum_lambda s_lambda t_{dual(lambda)}. The flat pairing; the
// transcendental unit (2 pi i)^N is dropped throughout.
LaurentPoly pairing_SA(const GrassContext& ctx, const CohVector& s, const CohVector& t);

// True iff the q- and z-direction operators commute, checked two ways: the
// operator commutator on sections vanishes, and the equivalent matrix
// identity [Gr, A + qB] = A + (1-n) qB holds. rim_scale multiplies the
// quantum part inside the commutator only; any value other than 1 breaks
// the identity (negative control), so only the scale-1 run asserts the
// operator-level commutator too.
bool flatness_check(const GrassContext& ctx, const Rational& rim_scale = Rational(1));

// "(3,1) + q*(1)" style rendering in basis order; "0" when empty.
std::string coh_str(const GrassContext& ctx, const CohVector& s);

}  // namespace grasmir

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grasmir/combinat.hpp"
#include "grasmir/matrix.hpp"
#include "grasmir/rational.hpp"
#include "grasmir/rng.hpp"

namespace grasmir {

// A seed: every vertex carries a k-subset label, arrows form a multiset, and
// frozen vertices keep their labels forever.  Arrows between two frozen
// vertices are never stored.
struct Seed {
  std::vector<Subset> labels;
  std::vector<char> frozen;
  std::map<std::pair<int, int>, int> arrows;  // (from, to) -> multiplicity

  size_t size() const { return labels.size(); }
  int in_degree(int v) const;   // with multiplicity
  int out_degree(int v) const;  // with multiplicity
  std::optional<int> vertex_of(const Subset& j) const;
  std::vector<int> mutable_vertices() const;  // non-frozen with 2 in / 2 out
};

// Two k-subsets are weakly separated when, reading [1, n] cyclically, the
// elements of I \ J and J \ I form at most two maximal blocks.
bool weakly_separated(const Subset& i, const Subset& j, int n);
bool seed_weakly_separated(const Seed& s, int n);

// The label produced by mutating at v.  Derived independently from the
// in-neighborhood and from the out-neighborhood (the exchange relation is
// multihomogeneous in the matrix columns, so label(v) and the new label use
// each column index as often, combined, as either side's product does);
// throws if the two derivations disagree or do not give a plain k-subset.
Subset mutated_label(const Seed& s, int v);

// Quiver mutation at a non-frozen vertex with 2 in / 2 out arrows: compose
// paths through v, reverse arrows at v, cancel two-cycles, relabel v.
Seed mutate(const Seed& s, int v);

// p_{label(v)} * p_{mutated label} == prod_in p + prod_out p at a concrete
// point, with arrow multiplicities as exponents.  `replacement` overrides the
// mutated label (used to confirm that wrong labels fail).
bool exchange_check(const Seed& s, int v, const Matrix<Rational>& point,
                    const std::optional<Subset>& replacement = std::nullopt);

// Seed whose labels are the rectangle partitions, arrows oriented along the
// grid with one diagonal per unit square.  Every mutable vertex is checked
// against `gate_points` random matrices before the seed is returned.
Seed initial_seed(const GrassContext& ctx, int gate_points = 3, uint64_t gate_seed = 1);

// Breadth-first search through mutations for a seed containing label j.
// Expands at most `budget` seeds; on exhaustion throws with the frontier size.
Seed find_seed_containing(const GrassContext& ctx, const Subset& j, size_t budget = 20000);

// For each non-frozen vertex with label != J_lam, the c^(m) coefficients of
// the in-neighbor labels and of the out-neighbor labels must have equal sums
// (with arrow multiplicity).  Returns the first violating vertex, if any.
std::optional<int> additivity_violation(const GrassContext& ctx, const Seed& s,
                                        const Partition& lam, int m);

// A random walk of quadrilateral mutations; `visit` sees every seed reached,
// including the start (with vertex -1), then each mutated seed along with the
// vertex just mutated.  Steps that would immediately undo the previous one
// are avoided when another move exists.
void random_walk(const Seed& start, int steps, Rng& rng,
                 const std::function<void(const Seed&, int step, int vertex)>& visit);

std::string seed_str(const Seed& s);

}  // namespace grasmir

#include "doctest.h"

#include <algorithm>
#include <set>

#include "grasmir/combinat.hpp"

using namespace grasmir;

TEST_CASE("partition validation") {
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
  CHECK(Partition({2, 0}) == Partition({2}));  // trailing zeros stripped
  CHECK(Partition({3, 1}).weight() == 4);
  CHECK(Partition({3, 1}).part(1) == 3);
  CHECK(Partition({3, 1}).part(5) == 0);
  CHECK(Partition{}.str() == "()");
}

TEST_CASE("basis size and membership") {
  GrassContext ctx(2, 5);
  CHECK(ctx.size() == 10);  // C(5,2)
  CHECK(ctx.dim() == 6);
  CHECK(ctx.fits(Partition({2, 2, 1})));  // parts bounded by k, rows by n-k
  CHECK_FALSE(ctx.fits(Partition({3})));
  CHECK_FALSE(ctx.fits(Partition({1, 1, 1, 1})));
  for (size_t i = 0; i < ctx.size(); ++i) {
    CHECK(ctx.index_of(ctx.partition_at(i)) == i);
    CHECK(ctx.index_of_subset(ctx.subset_at(i)) == i);
  }
}

TEST_CASE("column subsets walk the lattice path") {
  // Walking from the top-right corner: row r contributes its horizontal
  // steps, then one vertical step.
  CHECK(subset_of_partition(Partition{}, 2, 4) == Subset{1, 2});
  CHECK(subset_of_partition(Partition({2, 2}), 2, 4) == Subset{3, 4});
  CHECK(subset_of_partition(Partition({2, 1}), 2, 4) == Subset{2, 4});
  CHECK(subset_of_partition(Partition({1}), 2, 5) == Subset{1, 3});
  GrassContext big(3, 7);
  for (const auto& lam : big.basis())
    CHECK(partition_of_subset(subset_of_partition(lam, 3, 7), 3, 7) == lam);
}

TEST_CASE("cyclic shift: composition, identity, intervals stay intervals") {
  GrassContext ctx(3, 6);
  auto is_cyclic_interval = [&](const Subset& j) {
    // some rotation of j is a contiguous run
    for (int s = 0; s < ctx.n(); ++s) {
      Subset t = shift_subset(j, s, ctx.n());
      if (t.back() - t.front() == static_cast<int>(t.size()) - 1) return true;
    }
    return false;
  };
  for (const auto& lam : ctx.basis()) {
    for (int m = 1; m <= ctx.n(); ++m) {
      Partition s = ctx.shifted(lam, m);
      CHECK(ctx.fits(s));
      CHECK(ctx.shifted(s, ctx.n() - m) == lam);
    }
  }
  for (int i = 1; i <= ctx.n(); ++i) {
    CHECK(is_cyclic_interval(ctx.interval_subset(i)));
    for (int m = 1; m <= ctx.n(); ++m)
      CHECK(is_cyclic_interval(shift_subset(ctx.interval_subset(i), m, ctx.n())));
  }
}

TEST_CASE("poincare duality is a weight-complementing involution") {
  GrassContext ctx(3, 6);
  for (const auto& lam : ctx.basis()) {
    Partition d = ctx.poincare_dual(lam);
    CHECK(ctx.fits(d));
    CHECK(d.weight() == ctx.dim() - lam.weight());
    CHECK(ctx.poincare_dual(d) == lam);
  }
  CHECK(ctx.poincare_dual(Partition{}) == Partition({3, 3, 3}));
}

TEST_CASE("one-box products at k=3 n=5 match the worked examples") {
  GrassContext ctx(3, 5);
  auto sorted = [](std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto add = sorted(ctx.monk_add(Partition({2, 1})));
  CHECK(add == std::vector<Partition>{Partition({2, 2}), Partition({3, 1})});
  CHECK_FALSE(ctx.monk_rim(Partition({2, 1})).has_value());

  add = ctx.monk_add(Partition({3, 2}));
  CHECK(add == std::vector<Partition>{Partition({3, 3})});
  auto rim = ctx.monk_rim(Partition({3, 2}));
  REQUIRE(rim.has_value());
  CHECK(*rim == Partition({1}));

  CHECK(ctx.monk_add(Partition({3, 3})).empty());
  rim = ctx.monk_rim(Partition({3, 3}));
  REQUIRE(rim.has_value());
  CHECK(*rim == Partition({2}));
}

TEST_CASE("rim removal requires a full first row and no empty row") {
  GrassContext ctx(2, 5);
  CHECK_FALSE(ctx.monk_rim(Partition({1, 1, 1})).has_value());  // first row short
  CHECK_FALSE(ctx.monk_rim(Partition({2, 1})).has_value());     // third row empty
  auto rim = ctx.monk_rim(Partition({2, 1, 1}));
  REQUIRE(rim.has_value());
  CHECK(*rim == Partition{});  // removes 4 boxes
  // weight bookkeeping: |rim(lam)| = |lam| - (n-1)
  for (const auto& lam : ctx.basis())
    if (auto r = ctx.monk_rim(lam)) CHECK(r->weight() == lam.weight() - (ctx.n() - 1));
}

TEST_CASE("interval subsets and their bumped variants") {
  GrassContext ctx(2, 5);
  CHECK(ctx.interval_subset(1) == Subset{2, 3});
  CHECK(ctx.interval_subset(4) == Subset{1, 5});  // wraps
  CHECK(ctx.interval_subset(5) == Subset{1, 2});
  // bumping the top element by one, mod n
  CHECK(ctx.hat_interval_subset(1) == Subset{2, 4});
  CHECK(ctx.hat_interval_subset(3) == Subset{1, 4});  // 5+1 wraps to 1
  for (int i = 1; i <= 5; ++i) {
    Subset a = ctx.interval_subset(i), b = ctx.hat_interval_subset(i);
    std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
    std::vector<int> diff;
    std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                  std::back_inserter(diff));
    CHECK(diff.size() == 2);  // exactly one element moved
  }
}

TEST_CASE("pairing coefficients: base cases and small values") {
  GrassContext ctx(2, 4);
  Subset je = subset_of_partition(Partition{}, 2, 4);
  for (const auto& lam : ctx.basis()) {
    Subset jl = subset_of_partition(lam, 2, 4);
    CHECK(c_coeff(jl, jl) == 0);
    CHECK(c_coeff(jl, je) == 0);  // the base path is never overtaken
  }
  // {1,3} vs {2,4}: differences {2,4} vs {1,3}, both positions overtake
  CHECK(c_coeff(Subset{1, 3}, Subset{2, 4}) == 2);
  CHECK(c_coeff(Subset{2, 4}, Subset{1, 3}) == 0);
  CHECK(c_coeff(Subset{1, 4}, Subset{2, 3}) == 1);
}

TEST_CASE("shifted coefficients normalize the base point") {
  GrassContext ctx(2, 5);
  for (const auto& lam : ctx.basis()) {
    // m = n is the unshifted coefficient
    for (const auto& mu : ctx.basis()) {
      Subset jl = subset_of_partition(lam, 2, 5);
      Subset jm = subset_of_partition(mu, 2, 5);
      CHECK(c_shifted(ctx, lam, mu, 5) == c_coeff(jl, jm));
    }
    // the shifted base point always gets coefficient zero
    for (int m = 1; m <= 5; ++m) CHECK(c_shifted(ctx, lam, Partition{}, m) == 0);
  }
}

TEST_CASE("staircase word is reduced and sorts the longest permutation") {
  for (int n : {2, 3, 4, 5}) {
    auto w = staircase_word(n);
    CHECK(static_cast<int>(w.size()) == n * (n - 1) / 2);
    for (int letter : w) {
      CHECK(letter >= 1);
      CHECK(letter < n);
    }
  }
}

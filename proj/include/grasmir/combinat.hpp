#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace grasmir {

// Partition with weakly decreasing positive parts; the empty partition has
// no parts. Instances living in a GrassContext fit the (n-k) x k rectangle.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int weight() const;  // number of boxes
  int rows() const { return static_cast<int>(parts.size()); }
  int part(int r) const {  // 1-based, 0 beyond the last row
    return (r >= 1 && r <= rows()) ? parts[r - 1] : 0;
  }
  bool is_empty() const { return parts.empty(); }

  // "(3,1)", "()" for the empty partition.
  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// Sorted 1-based k-element subset of [n]: the positions of the k horizontal
// steps on the lattice path cut out by the partition (walked from the top
// right corner of the bounding rectangle down to the bottom left).
using Subset = std::vector<int>;

Subset subset_of_partition(const Partition& lam, int k, int n);
Partition partition_of_subset(const Subset& j, int k, int n);

// Reduced word for the longest permutation of S_n: blocks c = 1..n-1 of
// letters (n-c, ..., n-1).
std::vector<int> staircase_word(int n);

// J - m reduced into [1, n], re-sorted.
Subset shift_subset(const Subset& j, int m, int n);

std::string subset_str(const Subset& j);

// With J_mu \ J_lam = {m_1 < m_2 < ...} and J_lam \ J_mu = {l_1 < l_2 < ...}
// (equal sizes), the number of positions with m_t > l_t.
int c_coeff(const Subset& jlam, const Subset& jmu);

// Basis bookkeeping for one Grassmannian of k-planes in C^n. Basis order is
// lexicographic on the column subsets.
class GrassContext {
 public:
  GrassContext(int k, int n);

  int k() const { return k_; }
  int n() const { return n_; }
  int dim() const { return k_ * (n_ - k_); }   // boxes in the full rectangle
  size_t size() const { return basis_.size(); }  // rank C(n, k)

  const Partition& partition_at(size_t i) const { return basis_.at(i); }
  const Subset& subset_at(size_t i) const { return subsets_.at(i); }
  size_t index_of(const Partition& lam) const;
  size_t index_of_subset(const Subset& j) const;
  bool fits(const Partition& lam) const;

  Partition shifted(const Partition& lam, int m) const {
    return partition_of_subset(shift_subset(subset_of_partition(lam, k_, n_), m, n_), k_, n_);
  }

  // Rotated complement; weight(dual) = dim() - weight(lam).
  Partition poincare_dual(const Partition& lam) const;

  // Single-box additions inside the rectangle.
  std::vector<Partition> monk_add(const Partition& lam) const;

  // Removal of an (n-1)-box rim touching every row: defined exactly when
  // lam has a full first row and no empty row, giving
  // (lam_2 - 1, ..., lam_{n-k} - 1).
  std::optional<Partition> monk_rim(const Partition& lam) const;

  // Cyclic interval {i+1, ..., i+k} mod n for i in [1, n] and the variant
  // with its largest element bumped by one.
  Subset interval_subset(int i) const;
  Subset hat_interval_subset(int i) const;
  Partition interval_partition(int i) const { return partition_of_subset(interval_subset(i), k_, n_); }
  Partition hat_interval_partition(int i) const {
    return partition_of_subset(hat_interval_subset(i), k_, n_);
  }

  const std::vector<Partition>& basis() const { return basis_; }

 private:
  int k_, n_;
  std::vector<Partition> basis_;
  std::vector<Subset> subsets_;
  std::map<Subset, size_t> subset_index_;
  std::map<std::vector<int>, size_t> partition_index_;
};

// c_{lam^(m)}(mu^(m)) - c_{lam^(m)}(empty^(m)), all three computed on the
// m-shifted index sets.
int c_shifted(const GrassContext& ctx, const Partition& lam, const Partition& mu, int m);

}  // namespace grasmir

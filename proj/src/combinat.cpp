#include "grasmir/combinat.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <stdexcept>

namespace grasmir {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0 || (i > 0 && parts[i] > parts[i - 1]))
      throw std::invalid_argument("partition parts must be weakly decreasing and positive");
  }
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Subset subset_of_partition(const Partition& lam, int k, int n) {
  // Horizontal step positions, walking row by row from column k toward 0.
  Subset j;
  j.reserve(k);
  int col = k, step = 1;
  for (int r = 1; r <= n - k; ++r) {
    for (; col > lam.part(r); --col) j.push_back(step++);
    ++step;  // vertical step ending row r
  }
  for (; col > 0; --col) j.push_back(step++);
  return j;
}

Partition partition_of_subset(const Subset& j, int k, int n) {
  std::vector<bool> in(n + 1, false);
  for (int x : j) {
    if (x < 1 || x > n || in[x]) throw std::invalid_argument("bad column subset");
    in[x] = true;
  }
  if (static_cast<int>(j.size()) != k) throw std::invalid_argument("column subset has wrong size");
  std::vector<int> parts;
  int r = 0;
  for (int v = 1; v <= n; ++v) {
    if (!in[v]) {
      ++r;  // v is the position of the r-th vertical step
      parts.push_back(k - v + r);
    }
  }
  return Partition(parts);
}

std::vector<int> staircase_word(int n) {
  std::vector<int> w;
  for (int c = 1; c <= n - 1; ++c)
    for (int i = n - c; i <= n - 1; ++i) w.push_back(i);
  return w;
}

Subset shift_subset(const Subset& j, int m, int n) {
  Subset out;
  out.reserve(j.size());
  for (int x : j) {
    int v = (x - m - 1) % n;
    out.push_back((v + n) % n + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string subset_str(const Subset& j) {
  std::string s = "{";
  for (size_t i = 0; i < j.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(j[i]);
  }
  return s + "}";
}

int c_coeff(const Subset& jlam, const Subset& jmu) {
  std::vector<int> ms, ls;
  std::set_difference(jmu.begin(), jmu.end(), jlam.begin(), jlam.end(), std::back_inserter(ms));
  std::set_difference(jlam.begin(), jlam.end(), jmu.begin(), jmu.end(), std::back_inserter(ls));
  int c = 0;
  for (size_t t = 0; t < ms.size(); ++t)
    if (ms[t] > ls[t]) ++c;
  return c;
}

int c_shifted(const GrassContext& ctx, const Partition& lam, const Partition& mu, int m) {
  int n = ctx.n();
  Subset jl = shift_subset(subset_of_partition(lam, ctx.k(), n), m, n);
  Subset jm = shift_subset(subset_of_partition(mu, ctx.k(), n), m, n);
  Subset je = shift_subset(subset_of_partition(Partition{}, ctx.k(), n), m, n);
  return c_coeff(jl, jm) - c_coeff(jl, je);
}

GrassContext::GrassContext(int k, int n) : k_(k), n_(n) {
  if (k < 1 || n <= k) throw std::invalid_argument("need 1 <= k < n");
  // All k-subsets of [1, n] in lexicographic order.
  Subset j(k);
  std::iota(j.begin(), j.end(), 1);
  while (true) {
    subsets_.push_back(j);
    basis_.push_back(partition_of_subset(j, k, n));
    int i = k - 1;
    while (i >= 0 && j[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++j[i];
    for (int t = i + 1; t < k; ++t) j[t] = j[t - 1] + 1;
  }
  for (size_t i = 0; i < subsets_.size(); ++i) {
    subset_index_[subsets_[i]] = i;
    partition_index_[basis_[i].parts] = i;
  }
}

size_t GrassContext::index_of(const Partition& lam) const {
  auto it = partition_index_.find(lam.parts);
  if (it == partition_index_.end()) throw std::out_of_range("partition outside rectangle: " + lam.str());
  return it->second;
}

size_t GrassContext::index_of_subset(const Subset& j) const {
  auto it = subset_index_.find(j);
  if (it == subset_index_.end()) throw std::out_of_range("not a column subset: " + subset_str(j));
  return it->second;
}

bool GrassContext::fits(const Partition& lam) const {
  return lam.rows() <= n_ - k_ && lam.part(1) <= k_;
}

Partition GrassContext::poincare_dual(const Partition& lam) const {
  Subset j = subset_of_partition(lam, k_, n_);
  Subset dual;
  dual.reserve(j.size());
  for (int x : j) dual.push_back(n_ + 1 - x);
  std::sort(dual.begin(), dual.end());
  return partition_of_subset(dual, k_, n_);
}

std::vector<Partition> GrassContext::monk_add(const Partition& lam) const {
  std::vector<Partition> out;
  for (int r = 1; r <= n_ - k_; ++r) {
    if (lam.part(r) + 1 <= k_ && (r == 1 || lam.part(r - 1) >= lam.part(r) + 1)) {
      std::vector<int> p = lam.parts;
      p.resize(std::max<size_t>(p.size(), r), 0);
      ++p[r - 1];
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

std::optional<Partition> GrassContext::monk_rim(const Partition& lam) const {
  if (lam.part(1) != k_ || lam.part(n_ - k_) < 1) return std::nullopt;
  std::vector<int> p;
  for (int r = 2; r <= n_ - k_; ++r) p.push_back(lam.part(r) - 1);
  return Partition(p);
}

Subset GrassContext::interval_subset(int i) const {
  Subset j;
  for (int t = 1; t <= k_; ++t) j.push_back((i + t - 1) % n_ + 1);
  std::sort(j.begin(), j.end());
  return j;
}

Subset GrassContext::hat_interval_subset(int i) const {
  Subset j;
  for (int t = 1; t < k_; ++t) j.push_back((i + t - 1) % n_ + 1);
  j.push_back((i + k_) % n_ + 1);
  std::sort(j.begin(), j.end());
  return j;
}

}  // namespace grasmir

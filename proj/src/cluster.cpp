#include "grasmir/cluster.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "grasmir/pluecker.hpp"

namespace grasmir {

int Seed::in_degree(int v) const {
  int d = 0;
  for (const auto& [a, m] : arrows)
    if (a.second == v) d += m;
  return d;
}

int Seed::out_degree(int v) const {
  int d = 0;
  for (const auto& [a, m] : arrows)
    if (a.first == v) d += m;
  return d;
}

std::optional<int> Seed::vertex_of(const Subset& j) const {
  for (size_t v = 0; v < labels.size(); ++v)
    if (labels[v] == j) return static_cast<int>(v);
  return std::nullopt;
}

std::vector<int> Seed::mutable_vertices() const {
  std::vector<int> out;
  for (size_t v = 0; v < labels.size(); ++v)
    if (!frozen[v] && in_degree(static_cast<int>(v)) == 2 && out_degree(static_cast<int>(v)) == 2)
      out.push_back(static_cast<int>(v));
  return out;
}

bool weakly_separated(const Subset& i, const Subset& j, int n) {
  // Mark positions lying in exactly one of the two sets, then count maximal
  // constant blocks around the circle [1, n].
  std::vector<char> mark(static_cast<size_t>(n) + 1, 0);
  for (int x : i) mark[static_cast<size_t>(x)] = 1;
  for (int x : j) mark[static_cast<size_t>(x)] = static_cast<char>(mark[static_cast<size_t>(x)] ? 0 : 2);
  std::vector<char> seq;
  for (int x = 1; x <= n; ++x)
    if (mark[static_cast<size_t>(x)]) seq.push_back(mark[static_cast<size_t>(x)]);
  if (seq.empty()) return true;
  int blocks = 0;
  for (size_t t = 0; t < seq.size(); ++t)
    if (seq[t] != seq[(t + 1) % seq.size()]) ++blocks;
  return blocks <= 2;
}

bool seed_weakly_separated(const Seed& s, int n) {
  for (size_t a = 0; a < s.labels.size(); ++a)
    for (size_t b = a + 1; b < s.labels.size(); ++b)
      if (!weakly_separated(s.labels[a], s.labels[b], n)) return false;
  return true;
}

namespace {

// Column multiset of one side's exchange monomial minus the current label;
// the leftover must be a plain k-subset.
std::optional<Subset> side_label(const Seed& s, int v, bool incoming) {
  size_t k = s.labels[static_cast<size_t>(v)].size();
  std::map<int, int> cnt;
  for (const auto& [a, m] : s.arrows) {
    int nb = incoming ? (a.second == v ? a.first : -1) : (a.first == v ? a.second : -1);
    if (nb < 0) continue;
    for (int x : s.labels[static_cast<size_t>(nb)]) cnt[x] += m;
  }
  for (int x : s.labels[static_cast<size_t>(v)]) cnt[x] -= 1;
  Subset out;
  for (const auto& [x, c] : cnt) {
    if (c < 0 || c > 1) return std::nullopt;
    if (c == 1) out.push_back(x);
  }
  if (out.size() != k) return std::nullopt;
  return out;
}

}  // namespace

Subset mutated_label(const Seed& s, int v) {
  if (s.frozen[static_cast<size_t>(v)]) throw std::invalid_argument("cannot mutate a frozen vertex");
  if (s.in_degree(v) != 2 || s.out_degree(v) != 2)
    throw std::invalid_argument("vertex " + subset_str(s.labels[static_cast<size_t>(v)]) +
                                " is not quadrilateral (2 in / 2 out)");
  auto from_in = side_label(s, v, true);
  auto from_out = side_label(s, v, false);
  if (!from_in || !from_out || *from_in != *from_out)
    throw std::logic_error("exchange at " + subset_str(s.labels[static_cast<size_t>(v)]) +
                           ": in- and out-neighborhoods do not determine a common label");
  return *from_in;
}

namespace {

// Remove opposite arrow pairs; each direction keeps its surplus.
std::map<std::pair<int, int>, int> cancel_two_cycles(const std::map<std::pair<int, int>, int>& in) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [a, m] : in) {
    if (a.first == a.second) throw std::logic_error("quiver acquired a loop");
    auto rev = in.find({a.second, a.first});
    int back = rev == in.end() ? 0 : rev->second;
    if (m > back) out[a] = m - back;
  }
  return out;
}

}  // namespace

Seed mutate(const Seed& s, int v) {
  Seed out = s;
  out.labels[static_cast<size_t>(v)] = mutated_label(s, v);

  std::map<std::pair<int, int>, int> next;
  std::vector<std::pair<int, int>> in, outn;  // (neighbor, multiplicity)
  for (const auto& [a, m] : s.arrows) {
    if (a.second == v)
      in.emplace_back(a.first, m);
    else if (a.first == v)
      outn.emplace_back(a.second, m);
    else
      next[a] += m;
  }
  for (const auto& [u, mu] : in)
    for (const auto& [w, mw] : outn) next[{u, w}] += mu * mw;
  for (const auto& [u, mu] : in) next[{v, u}] += mu;
  for (const auto& [w, mw] : outn) next[{w, v}] += mw;

  out.arrows.clear();
  for (const auto& [a, m] : cancel_two_cycles(next))
    if (!(s.frozen[static_cast<size_t>(a.first)] && s.frozen[static_cast<size_t>(a.second)]))
      out.arrows[a] = m;
  return out;
}

namespace {

Rational rat_pow(const Rational& b, int e) {
  Rational r(1);
  for (int t = 0; t < e; ++t) r = r * b;
  return r;
}

}  // namespace

bool exchange_check(const Seed& s, int v, const Matrix<Rational>& point,
                    const std::optional<Subset>& replacement) {
  Subset next = replacement ? *replacement : mutated_label(s, v);
  Rational lhs = plucker(point, s.labels[static_cast<size_t>(v)]) * plucker(point, next);
  Rational pin(1), pout(1);
  for (const auto& [a, m] : s.arrows) {
    if (a.second == v) pin = pin * rat_pow(plucker(point, s.labels[static_cast<size_t>(a.first)]), m);
    if (a.first == v) pout = pout * rat_pow(plucker(point, s.labels[static_cast<size_t>(a.second)]), m);
  }
  return lhs == pin + pout;
}

Seed initial_seed(const GrassContext& ctx, int gate_points, uint64_t gate_seed) {
  int k = ctx.k(), n = ctx.n();
  Seed s;
  s.labels.push_back(subset_of_partition(Partition{}, k, n));
  s.frozen.push_back(1);
  for (int i = 1; i <= n - k; ++i)
    for (int j = 1; j <= k; ++j) {
      s.labels.push_back(
          subset_of_partition(Partition(std::vector<int>(static_cast<size_t>(i), j)), k, n));
      s.frozen.push_back(static_cast<char>(i == n - k || j == k));
    }
  auto idx = [k](int i, int j) { return i == 0 || j == 0 ? 0 : 1 + (i - 1) * k + (j - 1); };
  std::map<std::pair<int, int>, int> raw;
  auto add = [&](int a, int b) {
    if (a == b) return;  // both endpoints collapsed onto the empty rectangle
    if (s.frozen[static_cast<size_t>(a)] && s.frozen[static_cast<size_t>(b)]) return;
    raw[{a, b}] += 1;
  };
  for (int i = 1; i <= n - k; ++i)
    for (int j = 0; j <= k - 1; ++j) add(idx(i, j), idx(i, j + 1));
  for (int i = 0; i <= n - k - 1; ++i)
    for (int j = 1; j <= k; ++j) add(idx(i, j), idx(i + 1, j));
  for (int i = 0; i <= n - k - 1; ++i)
    for (int j = 0; j <= k - 1; ++j) add(idx(i + 1, j + 1), idx(i, j));
  s.arrows = cancel_two_cycles(raw);

  Rng rng(gate_seed);
  for (int v : s.mutable_vertices())
    for (int t = 0; t < gate_points; ++t) {
      Rng child = rng.split(static_cast<uint64_t>(v) * 1000 + static_cast<uint64_t>(t));
      Matrix<Rational> p(static_cast<size_t>(k), static_cast<size_t>(n), Rational(0));
      for (size_t r = 0; r < p.rows(); ++r)
        for (size_t c = 0; c < p.cols(); ++c) p.at(r, c) = Rational(child.nonzero_int());
      if (!exchange_check(s, v, p))
        throw std::logic_error("initial seed fails its exchange relation at vertex " +
                               subset_str(s.labels[static_cast<size_t>(v)]));
    }
  return s;
}

namespace {

std::string seed_key(const Seed& s) {
  std::vector<std::string> lab;
  lab.reserve(s.labels.size());
  for (const auto& j : s.labels) lab.push_back(subset_str(j));
  std::vector<std::string> arr;
  for (const auto& [a, m] : s.arrows)
    arr.push_back(lab[static_cast<size_t>(a.first)] + ">" + lab[static_cast<size_t>(a.second)] +
                  "x" + std::to_string(m));
  std::sort(lab.begin(), lab.end());
  std::sort(arr.begin(), arr.end());
  std::string key;
  for (const auto& t : lab) key += t;
  key += "|";
  for (const auto& t : arr) key += t + ";";
  return key;
}

}  // namespace

Seed find_seed_containing(const GrassContext& ctx, const Subset& j, size_t budget) {
  ctx.index_of_subset(j);  // validates that j is a k-subset of [1, n]
  Seed start = initial_seed(ctx);
  if (start.vertex_of(j)) return start;
  std::deque<Seed> queue{start};
  std::set<std::string> seen{seed_key(start)};
  size_t expanded = 0;
  while (!queue.empty()) {
    if (++expanded > budget)
      throw std::runtime_error("seed search budget of " + std::to_string(budget) +
                               " exhausted with " + std::to_string(queue.size()) +
                               " seeds still on the frontier");
    Seed cur = std::move(queue.front());
    queue.pop_front();
    for (int v : cur.mutable_vertices()) {
      Seed next = mutate(cur, v);
      if (next.vertex_of(j)) return next;
      if (seen.insert(seed_key(next)).second) queue.push_back(next);
    }
  }
  throw std::runtime_error("label " + subset_str(j) +
                           " unreachable by quadrilateral mutations from the rectangles seed");
}

std::optional<int> additivity_violation(const GrassContext& ctx, const Seed& s,
                                        const Partition& lam, int m) {
  int n = ctx.n();
  Subset jl = shift_subset(subset_of_partition(lam, ctx.k(), n), m, n);
  Subset je = shift_subset(subset_of_partition(Partition{}, ctx.k(), n), m, n);
  int base = c_coeff(jl, je);
  auto coeff = [&](int v) {
    return c_coeff(jl, shift_subset(s.labels[static_cast<size_t>(v)], m, n)) - base;
  };
  Subset jlam = subset_of_partition(lam, ctx.k(), n);
  for (size_t v = 0; v < s.labels.size(); ++v) {
    if (s.frozen[v] || s.labels[v] == jlam) continue;
    int in = 0, out = 0;
    for (const auto& [a, mult] : s.arrows) {
      if (a.second == static_cast<int>(v)) in += mult * coeff(a.first);
      if (a.first == static_cast<int>(v)) out += mult * coeff(a.second);
    }
    if (in != out) return static_cast<int>(v);
  }
  return std::nullopt;
}

void random_walk(const Seed& start, int steps, Rng& rng,
                 const std::function<void(const Seed&, int step, int vertex)>& visit) {
  Seed cur = start;
  visit(cur, 0, -1);
  int last = -1;
  for (int t = 1; t <= steps; ++t) {
    std::vector<int> opts = cur.mutable_vertices();
    if (opts.empty()) throw std::runtime_error("walk stuck: no quadrilateral vertex");
    if (opts.size() > 1) {
      std::vector<int> fresh;
      for (int v : opts)
        if (v != last) fresh.push_back(v);
      if (!fresh.empty()) opts = fresh;
    }
    int v = opts[static_cast<size_t>(rng.next_below(opts.size()))];
    cur = mutate(cur, v);
    last = v;
    visit(cur, t, v);
  }
}

std::string seed_str(const Seed& s) {
  std::ostringstream os;
  os << "labels:";
  for (size_t v = 0; v < s.labels.size(); ++v)
    os << " " << subset_str(s.labels[v]) << (s.frozen[v] ? "*" : "");
  os << " arrows:";
  for (const auto& [a, m] : s.arrows) {
    os << " " << subset_str(s.labels[static_cast<size_t>(a.first)]) << ">"
       << subset_str(s.labels[static_cast<size_t>(a.second)]);
    if (m > 1) os << "x" << m;
  }
  return os.str();
}

}  // namespace grasmir

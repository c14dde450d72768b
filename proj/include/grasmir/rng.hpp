#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasmir {

// Deterministic splittable PRNG built on the splitmix64 mixer.
// Every randomized routine takes an explicit Rng; sub-tasks derive their own
// independent stream via split(), so results do not depend on call order and
// identical seeds give identical output on every platform (no std::
// distributions, which are implementation defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound) by 128-bit multiply; bound > 0. The tiny modulo
  // bias (< 2^-64 * bound) is irrelevant for sampling test points.
  uint64_t next_below(uint64_t bound) {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  // Uniform on [lo, hi], inclusive.
  int64_t uniform_int(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Uniform on [-bound, bound] \ {0}; the default bound 9 keeps entry heights
  // small so exact arithmetic stays fast.
  int64_t nonzero_int(int64_t bound = 9) {
    int64_t v = uniform_int(1, bound);
    return (next_u64() & 1) ? v : -v;
  }

  // Child stream; deterministic function of (current state, label), parent
  // state is not consumed.
  Rng split(uint64_t label) const {
    Rng child(state_ ^ (0x9e3779b97f4a7c15ULL * (label + 0x632be59bd9b4e019ULL)));
    child.next_u64();
    return child;
  }

  Rng split(const std::string& label) const {
    uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (unsigned char c : label) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return split(h);
  }

 private:
  uint64_t state_;
};

}  // namespace grasmir

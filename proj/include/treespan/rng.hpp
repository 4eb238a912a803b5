#pragma once

#include <cstdint>

namespace treespan {

// splitmix64; output is identical on every platform for a given seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound must be positive.
  uint64_t below(uint64_t bound) { return next() % bound; }

  bool coin() { return next() & 1u; }

 private:
  uint64_t state_;
};

}  // namespace treespan

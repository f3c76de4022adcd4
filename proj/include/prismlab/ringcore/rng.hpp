#pragma once

#include "numbers.hpp"

#include <cstdint>

namespace prismlab {

// Counter-based generator: the k-th draw of stream s under seed is a pure
// function of (seed, s, k), so reports do not depend on evaluation order.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next() { return mix(seed_ ^ mix(stream_ + 0x9e3779b97f4a7c15ull) ^ mix(~ctr_++)); }

  // Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  Z big(const Z& bound) {  // uniform-ish in [0, bound)
    Z r = 0;
    Z b = bound;
    while (b > 0) {
      r = (r << 64) + Z(next());
      b >>= 64;
    }
    return r % bound;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_, stream_, ctr_ = 0;
};

}  // namespace prismlab

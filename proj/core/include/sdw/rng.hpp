#pragma once

#include <cstdint>
#include <vector>

#include "sdw/error.hpp"

namespace sdw {

/// Deterministic 64-bit PRNG (splitmix64). Used instead of <random>
/// distributions so that randomized suites produce identical streams on
/// every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw InputError("Rng::below: empty range");
    std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    return xs[below(xs.size())];
  }

 private:
  std::uint64_t state_;
};

}  // namespace sdw

#pragma once

#include <cstdint>

#include "tarski/rational.hpp"

namespace tarski {

/// Deterministic 64-bit generator (splitmix64). The engine derives one
/// independent stream per trial from (seed, trial index), so reports do not
/// depend on the order trials run in.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n > 0. Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % n;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % n;
  }

  /// Uniform in [lo, hi], inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool chance(unsigned num, unsigned den) { return below(den) < num; }
};

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 0x632be59bd9b4e019ULL)));
  return g.next();
}

/// num in [-bound, bound], den in [1, bound].
inline Rational random_rational(SplitMix64& g, long bound) {
  if (bound < 1) bound = 1;
  Rational q(g.range(-bound, bound), g.range(1, bound));
  q.canonicalize();
  return q;
}

/// Strictly inside (0, 1).
inline Rational random_ratio_open(SplitMix64& g, long bound) {
  if (bound < 2) bound = 2;
  long den = g.range(2, bound);
  Rational q(g.range(1, den - 1), den);
  q.canonicalize();
  return q;
}

/// Inside [0, 1], endpoints included.
inline Rational random_ratio_closed(SplitMix64& g, long bound) {
  if (bound < 1) bound = 1;
  long den = g.range(1, bound);
  Rational q(g.range(0, den), den);
  q.canonicalize();
  return q;
}

}  // namespace tarski

#pragma once

#include <cstdint>
#include <random>

#include "tsirelson/vector.hpp"

namespace tsirelson {

/// Deterministic random vectors for sweeps. Uses only mt19937_64 output and
/// integer arithmetic, so streams agree across platforms.
class VectorSampler {
 public:
  explicit VectorSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }

  /// Support size uniform in [1, max_support]; first position in
  /// [1, first_max], gaps in [1, max_gap]; entries p/q with q in [1, 8] and
  /// |p/q| <= 4, nonzero.
  FinVec vector(std::size_t max_support, Pos first_max = 3, Pos max_gap = 2) {
    const std::size_t size = 1 + below(max_support);
    FinVec x;
    Pos p = 1 + static_cast<Pos>(below(static_cast<std::uint64_t>(first_max)));
    for (std::size_t i = 0; i < size; ++i) {
      if (i > 0) p += 1 + static_cast<Pos>(below(static_cast<std::uint64_t>(max_gap)));
      x.set(p, entry());
    }
    return x;
  }

  Scalar entry() {
    const long den = 1 + static_cast<long>(below(8));
    long num = 0;
    while (num == 0) num = static_cast<long>(below(static_cast<std::uint64_t>(8 * den + 1))) - 4 * den;
    Scalar v(num, den);
    v.canonicalize();
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tsirelson

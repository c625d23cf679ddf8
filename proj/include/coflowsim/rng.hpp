#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace coflowsim {

// Name of the generator, recorded in output metadata so runs can be
// reproduced outside this codebase.
inline constexpr const char* kRngName = "splitmix64";

// splitmix64: tiny 64-bit counter-based generator. We avoid <random>
// distributions on purpose — their outputs are implementation-defined, and
// seeded runs must be bit-identical across platforms. Every derived draw
// (uniform, normal, Pareto) is pinned below.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1): top 53 bits scaled by 2^-53.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform in (0, 1]; used where log() or division forbids zero.
  double uniform01_open0() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Integer in [lo, hi], both inclusive. floor(u * span) keeps the draw a
  // pure function of the bit stream (a hair of bias is fine here; portability
  // is not negotiable).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const double span = static_cast<double>(hi - lo + 1);
    auto offset = static_cast<std::int64_t>(uniform01() * span);
    if (offset > hi - lo) offset = hi - lo;  // guard the u≈1 edge
    return lo + offset;
  }

  // Box–Muller, cosine branch only (one normal per two draws; no cached
  // second sample, so the stream position stays easy to reason about).
  double normal(double mean, double stddev) {
    const double u1 = uniform01_open0();
    const double u2 = uniform01();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * mag * std::cos(2.0 * std::numbers::pi * u2);
  }

  // Pareto via inverse CDF: scale * u^(-1/shape), u in (0, 1].
  double pareto(double shape, double scale) {
    return scale * std::pow(uniform01_open0(), -1.0 / shape);
  }

  // Index i with probability weights[i] / sum(weights). Weights must be
  // positive; the last index absorbs any floating-point crumbs.
  int pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    const double u = uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  std::uint64_t state_;
};

// Stable derivation of purpose-specific seeds from one user seed, so the
// demand stream, the weight stream, and the random-assignment stream never
// alias. stream ids: 1 = demands, 2 = weights, 3 = random assignment.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * stream));
  return g.next();
}

}  // namespace coflowsim

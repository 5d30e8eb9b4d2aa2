#pragma once

#include <cstdint>
#include <random>

namespace dagscope {

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of substream `stream` under master seed `seed`:
/// splitmix64(seed + (stream + 1) * 0x9E3779B97F4A7C15).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

/// Portable random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; conversions to floating point are done
/// here rather than through <random> distributions, which are
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(substream_seed(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double low, double high) { return low + (high - low) * uniform01(); }
  /// Standard normal via Box-Muller; consumes two draws per call.
  double normal();
  /// Uniform integer in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace dagscope

#pragma once

#include <cmath>
#include <cstdint>

namespace dfrlab {

// Deterministic 64-bit random stream (splitmix64 core).
//
// Substreams are derived by hashing (seed, index), so replication i sees the
// same draws no matter which worker executes it. All samplers in the library
// consume one of these streams explicitly; there is no hidden global state.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

  // Stream for replication `index` of the experiment keyed by `seed`.
  static RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1)) ^ index);
  }

  // Fresh seed for an independent sub-experiment (labelled by a small domain id).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t domain) {
    return mix64(mix64(seed ^ 0xD6E8FEB86659FD93ULL) + domain);
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0,1); never returns 0 or 1, so logs and
  // reciprocals of draws are always finite.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double exponential(double rate) { return -std::log(uniform01()) / rate; }

  double weibull(double shape, double scale) {
    return scale * std::pow(-std::log(uniform01()), 1.0 / shape);
  }

  // Index in [0, n) without modulo bias worth caring about at n << 2^64.
  std::uint64_t index(std::uint64_t n) { return next_u64() % n; }

 private:
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace dfrlab

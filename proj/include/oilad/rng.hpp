#pragma once

#include <cstdint>
#include <random>

namespace oilad {

// Deterministic random source. All distributions are derived from the raw
// mt19937_64 stream by hand so that identical seeds give identical values
// on every platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform double in [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). Rejection sampling, no modulo bias.
  int uniform_int(int n);

  // Standard normal via Box-Muller; one draw cached.
  double normal();

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Independent child stream. Streams derived with distinct tags from the
  // same parent never share state.
  Rng derive(std::uint64_t tag) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 gen_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

// splitmix64 finalizer, used for seed derivation and light hashing.
std::uint64_t mix64(std::uint64_t x);

}  // namespace oilad

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace arbopack {

/// Seeded random source for the instance generator and the test corpora.
/// std::mt19937_64 output is fully specified by the standard, but the
/// std::uniform_* distributions are not; the draws below must produce the
/// same values on every platform, so the mapping is done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

  /// Uniform double in [0, 1).
  double uniform_real();

  /// `count` distinct values from {0, ..., n-1}, ascending.
  std::vector<int> sample_distinct(int n, int count);

  /// Random subset of {0, ..., n-1}: each element kept with probability p.
  std::vector<int> random_subset(int n, double p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace arbopack

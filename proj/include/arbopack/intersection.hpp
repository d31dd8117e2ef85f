#pragma once

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "arbopack/matroid.hpp"

namespace arbopack {

struct IntersectionOptions {
  /// Absolute tolerance for weight comparisons; 0 gives exact comparisons
  /// (use with integral weights).
  double weight_tolerance = 1e-9;

  /// Called with the common independent set after every augmentation.
  std::function<void(std::span<const int>)> on_augment;
};

struct IntersectionResult {
  std::vector<int> common_set;         // sorted
  int size = 0;
  std::vector<int> dual_certificate;   // Z with r1(Z) + r2(S-Z) == size
};

struct WeightedIntersectionResult {
  std::vector<int> common_set;  // sorted, exactly the requested size
  double total_weight = 0.0;
};

struct IntersectionInfeasible {
  std::vector<int> dual_certificate;  // Z with r1(Z) + r2(S-Z) < requested size
  int achievable_size = 0;            // the certificate sums to this value
};

/// Maximum-cardinality common independent set with a rank certificate of
/// optimality. Augments along shortest paths in the exchange graph; the
/// certificate is the set of elements unreachable from the M1-addable
/// elements once augmentation fails, re-verified via rank_via_oracle.
IntersectionResult max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2,
                                          const IntersectionOptions& options = {});

/// Minimum-weight common independent set of the exact requested size, when
/// one exists. Augments along paths minimising (reduced weight, hop count,
/// element sequence) lexicographically, so every intermediate set is a
/// minimum-weight common independent set of its size and ties resolve the
/// same way on every platform.
std::variant<WeightedIntersectionResult, IntersectionInfeasible>
min_weight_common_independent_of_size(const MatroidOracle& m1, const MatroidOracle& m2,
                                      std::span<const double> weights, int target_size,
                                      const IntersectionOptions& options = {});

}  // namespace arbopack

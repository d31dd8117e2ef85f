#pragma once

#include <span>
#include <vector>

#include "arbopack/hypergraph.hpp"

namespace arbopack {

/// Independence oracle over a ground set {0, ..., ground_size()-1}.
/// Implementations must satisfy the matroid axioms; the solvers assume them
/// and the test suites enforce them exhaustively at small sizes.
class MatroidOracle {
 public:
  virtual ~MatroidOracle() = default;

  virtual int ground_size() const = 0;

  /// `elements` need not be sorted; duplicates are not allowed.
  virtual bool is_independent(std::span<const int> elements) const = 0;
};

/// Greedy rank: size of the maximal independent subset found by scanning
/// `subset` in the given order. Order-invariant for genuine matroids.
int rank_via_oracle(const MatroidOracle& m, std::span<const int> subset);

/// Matroid over a partitioned ground set with per-class lower/upper
/// counters and a global size target:
///   independent:  z_i <= upper_i for all i and sum_i max(lower_i, z_i) <= target
///   base:         lower_i <= z_i <= upper_i for all i and |Z| = target
///   rank(Z):      min( sum_i min(upper_i, z_i),
///                      target - sum_i max(lower_i - z_i, 0) )
/// where z_i = |Z ∩ class_i|. Lower counters may be negative. Existence
/// requires, for every class, max(lower_i, 0) <= min(upper_i, |class_i|),
/// and sum_i max(lower_i, 0) <= target <= sum_i min(upper_i, |class_i|);
/// construction fails otherwise.
class GeneralizedPartitionMatroid final : public MatroidOracle {
 public:
  GeneralizedPartitionMatroid(const std::vector<std::vector<int>>& classes,
                              std::vector<int> lower, std::vector<int> upper, int target);

  int ground_size() const override { return ground_size_; }
  bool is_independent(std::span<const int> elements) const override;

  bool is_base(std::span<const int> elements) const;
  int rank(std::span<const int> elements) const;

  int num_classes() const { return static_cast<int>(lower_.size()); }
  int class_of(int element) const { return class_of_[element]; }
  int class_size(int i) const { return class_size_[i]; }
  int lower(int i) const { return lower_[i]; }
  int upper(int i) const { return upper_[i]; }
  int target() const { return target_; }

 private:
  std::vector<int> counts_per_class(std::span<const int> elements) const;

  int ground_size_ = 0;
  std::vector<int> class_of_;
  std::vector<int> class_size_;
  std::vector<int> lower_;
  std::vector<int> upper_;
  int target_ = 0;
};

/// The root-bound matroid on the arcs of a directed extension: one class
/// per vertex (arcs entering it, empty classes retained), lower counter
/// k - max_roots(v), upper counter k - min_roots(v), target k(|V|-1).
/// Raises Gpc1Violated / Gpc2Violated when the instance admits no such
/// matroid, which certifies infeasibility upstream.
GeneralizedPartitionMatroid build_root_bound_matroid(const DirectedExtension& d,
                                                     const RootBounds& b);

}  // namespace arbopack

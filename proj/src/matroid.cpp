#include "arbopack/matroid.hpp"

#include <algorithm>
#include <string>

namespace arbopack {

int rank_via_oracle(const MatroidOracle& m, std::span<const int> subset) {
  std::vector<int> kept;
  kept.reserve(subset.size());
  for (int x : subset) {
    kept.push_back(x);
    if (!m.is_independent(kept)) kept.pop_back();
  }
  return static_cast<int>(kept.size());
}

GeneralizedPartitionMatroid::GeneralizedPartitionMatroid(
    const std::vector<std::vector<int>>& classes, std::vector<int> lower,
    std::vector<int> upper, int target)
    : lower_(std::move(lower)), upper_(std::move(upper)), target_(target) {
  const int n = static_cast<int>(classes.size());
  if (static_cast<int>(lower_.size()) != n || static_cast<int>(upper_.size()) != n) {
    raise(Errc::InvalidArgument, "class/counter size mismatch");
  }

  class_size_.resize(n);
  for (int i = 0; i < n; ++i) {
    class_size_[i] = static_cast<int>(classes[i].size());
    ground_size_ += class_size_[i];
  }
  class_of_.assign(ground_size_, -1);
  for (int i = 0; i < n; ++i) {
    for (int x : classes[i]) {
      if (x < 0 || x >= ground_size_ || class_of_[x] != -1) {
        raise(Errc::InvalidArgument, "classes do not partition the ground set");
      }
      class_of_[x] = i;
    }
  }

  long long lower_sum = 0;
  long long upper_sum = 0;
  for (int i = 0; i < n; ++i) {
    int lo = std::max(lower_[i], 0);
    int hi = std::min(upper_[i], class_size_[i]);
    if (lo > hi) {
      raise(Errc::GpmConditionViolated,
            "class " + std::to_string(i) + ": max(lower,0)=" + std::to_string(lo) +
                " exceeds min(upper,size)=" + std::to_string(hi),
            std::to_string(i));
    }
    lower_sum += lo;
    upper_sum += hi;
  }
  if (lower_sum > target_ || target_ > upper_sum) {
    raise(Errc::GpmMuOutOfRange,
          "target " + std::to_string(target_) + " outside [" + std::to_string(lower_sum) +
              ", " + std::to_string(upper_sum) + "]");
  }
}

std::vector<int> GeneralizedPartitionMatroid::counts_per_class(
    std::span<const int> elements) const {
  std::vector<int> counts(num_classes(), 0);
  for (int x : elements) {
    if (x < 0 || x >= ground_size_) {
      raise(Errc::InvalidArgument, "element " + std::to_string(x) + " outside ground set");
    }
    ++counts[class_of_[x]];
  }
  return counts;
}

bool GeneralizedPartitionMatroid::is_independent(std::span<const int> elements) const {
  std::vector<int> z = counts_per_class(elements);
  long long guarded = 0;
  for (int i = 0; i < num_classes(); ++i) {
    if (z[i] > upper_[i]) return false;
    guarded += std::max(lower_[i], z[i]);
  }
  return guarded <= target_;
}

bool GeneralizedPartitionMatroid::is_base(std::span<const int> elements) const {
  if (static_cast<int>(elements.size()) != target_) return false;
  std::vector<int> z = counts_per_class(elements);
  for (int i = 0; i < num_classes(); ++i) {
    if (z[i] < lower_[i] || z[i] > upper_[i]) return false;
  }
  return true;
}

int GeneralizedPartitionMatroid::rank(std::span<const int> elements) const {
  std::vector<int> z = counts_per_class(elements);
  long long capped = 0;
  long long shortfall = 0;
  for (int i = 0; i < num_classes(); ++i) {
    capped += std::min(upper_[i], z[i]);
    shortfall += std::max(lower_[i] - z[i], 0);
  }
  return static_cast<int>(std::min(capped, target_ - shortfall));
}

GeneralizedPartitionMatroid build_root_bound_matroid(const DirectedExtension& d,
                                                     const RootBounds& b) {
  const int n = d.num_vertices;
  std::vector<std::vector<int>> classes(n);
  for (int arc = 0; arc < static_cast<int>(d.arcs.size()); ++arc) {
    classes[d.arcs[arc].head].push_back(arc);
  }

  const long long target = static_cast<long long>(b.k) * (n - 1);
  std::vector<int> lower(n);
  std::vector<int> upper(n);
  long long lower_sum = 0;
  long long upper_sum = 0;
  for (int v = 0; v < n; ++v) {
    lower[v] = b.k - b.max_roots[v];
    upper[v] = b.k - b.min_roots[v];
    lower_sum += std::max(lower[v], 0);
    upper_sum += std::min<long long>(upper[v], classes[v].size());
  }

  // The aggregate lower bound is inspected before the per-vertex condition,
  // then the aggregate upper bound.
  if (lower_sum > target) {
    raise(Errc::Gpc2Violated, "sum of guaranteed in-degrees " + std::to_string(lower_sum) +
                                  " exceeds k(|V|-1) = " + std::to_string(target));
  }
  for (int v = 0; v < n; ++v) {
    int lo = std::max(lower[v], 0);
    long long hi = std::min<long long>(upper[v], classes[v].size());
    if (lo > hi) {
      raise(Errc::Gpc1Violated,
            "vertex " + std::to_string(v) + ": max(k-max_roots,0)=" + std::to_string(lo) +
                " exceeds min(k-min_roots, in-degree)=" + std::to_string(hi),
            std::to_string(v));
    }
  }
  if (target > upper_sum) {
    raise(Errc::Gpc2Violated, "k(|V|-1) = " + std::to_string(target) +
                                  " exceeds sum of in-degree capacities " +
                                  std::to_string(upper_sum));
  }

  return GeneralizedPartitionMatroid(classes, std::move(lower), std::move(upper),
                                     static_cast<int>(target));
}

}  // namespace arbopack

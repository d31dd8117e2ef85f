#include "arbopack/intersection.hpp"

#include <algorithm>
#include <string>

namespace arbopack {

namespace {

struct PathLabel {
  bool valid = false;
  double cost = 0.0;
  int hops = 0;
  std::vector<int> seq;
};

// Lexicographic (cost, hops, sequence) comparison with tolerance on cost.
bool label_better(const PathLabel& a, const PathLabel& b, double eps) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.cost < b.cost - eps) return true;
  if (b.cost < a.cost - eps) return false;
  if (a.hops != b.hops) return a.hops < b.hops;
  return a.seq < b.seq;
}

struct CoreOutcome {
  std::vector<int> common;       // sorted
  std::vector<int> certificate;  // meaningful iff !reached_target
  bool reached_target = false;
};

std::vector<int> with_element(const std::vector<int>& base, int added) {
  std::vector<int> out = base;
  out.push_back(added);
  return out;
}

std::vector<int> with_swap(const std::vector<int>& base, int removed, int added) {
  std::vector<int> out;
  out.reserve(base.size());
  for (int e : base) {
    if (e != removed) out.push_back(e);
  }
  out.push_back(added);
  return out;
}

// Augments the common independent set one element at a time until the
// target size is reached or no augmenting path exists; `target < 0` means
// grow to maximum cardinality. On failure the rank certificate
// Z = {elements unreachable from the M1-addable ones} is extracted from the
// final exchange graph and checked against both rank oracles.
CoreOutcome run_augmentation(const MatroidOracle& m1, const MatroidOracle& m2,
                             std::span<const double> weights, int target,
                             const IntersectionOptions& options) {
  const int n = m1.ground_size();
  if (m2.ground_size() != n) {
    raise(Errc::InvalidArgument, "matroids must share one ground set");
  }
  if (!weights.empty() && static_cast<int>(weights.size()) != n) {
    raise(Errc::InvalidArgument, "weight vector does not match the ground set");
  }
  auto weight_of = [&](int x) { return weights.empty() ? 0.0 : weights[x]; };
  const double eps = options.weight_tolerance;

  std::vector<int> current;  // sorted
  std::vector<bool> in_set(n, false);

  while (target < 0 || static_cast<int>(current.size()) < target) {
    // Exchange graph for the current set.
    std::vector<PathLabel> label(n);
    std::vector<std::vector<int>> out_arcs(n);
    std::vector<char> sink(n, false);
    bool any_source = false;
    for (int x = 0; x < n; ++x) {
      if (in_set[x]) continue;
      if (m1.is_independent(with_element(current, x))) {
        label[x] = PathLabel{true, weight_of(x), 1, {x}};
        any_source = true;
      }
      if (m2.is_independent(with_element(current, x))) sink[x] = true;
    }
    for (int y : current) {
      for (int x = 0; x < n; ++x) {
        if (in_set[x]) continue;
        if (m1.is_independent(with_swap(current, y, x))) out_arcs[y].push_back(x);
        if (m2.is_independent(with_swap(current, y, x))) out_arcs[x].push_back(y);
      }
    }
    for (auto& arcs : out_arcs) std::sort(arcs.begin(), arcs.end());

    // Node costs are +w outside the set and -w inside; Bellman-Ford style
    // relaxation because reduced costs may be negative. Optimal labels are
    // simple paths, so n rounds reach the fixpoint unless the oracles lie.
    if (any_source) {
      bool changed = true;
      for (int round = 0; round <= n + 1 && changed; ++round) {
        changed = false;
        for (int u = 0; u < n; ++u) {
          if (!label[u].valid) continue;
          for (int v : out_arcs[u]) {
            PathLabel cand{true, label[u].cost + (in_set[v] ? -weight_of(v) : weight_of(v)),
                           label[u].hops + 1, label[u].seq};
            cand.seq.push_back(v);
            if (label_better(cand, label[v], eps)) {
              label[v] = std::move(cand);
              changed = true;
            }
          }
        }
        if (round == n + 1 && changed) {
          raise(Errc::OracleInconsistent, "augmenting-path costs keep decreasing");
        }
      }
    }

    int best_sink = -1;
    for (int x = 0; x < n; ++x) {
      if (!sink[x] || !label[x].valid) continue;
      if (best_sink < 0 || label_better(label[x], label[best_sink], eps)) best_sink = x;
    }

    if (best_sink < 0) {
      CoreOutcome outcome;
      outcome.common = current;
      outcome.reached_target = false;
      std::vector<int> complement;
      for (int x = 0; x < n; ++x) {
        (label[x].valid ? complement : outcome.certificate).push_back(x);
      }
      int certified = rank_via_oracle(m1, outcome.certificate) +
                      rank_via_oracle(m2, complement);
      if (certified != static_cast<int>(current.size())) {
        raise(Errc::OracleInconsistent,
              "rank certificate sums to " + std::to_string(certified) + ", expected " +
                  std::to_string(current.size()));
      }
      return outcome;
    }

    for (int x : label[best_sink].seq) {
      in_set[x] = !in_set[x];
    }
    current.clear();
    for (int x = 0; x < n; ++x) {
      if (in_set[x]) current.push_back(x);
    }
    if (!m1.is_independent(current) || !m2.is_independent(current)) {
      raise(Errc::OracleInconsistent, "augmented set rejected by an oracle");
    }
    if (options.on_augment) options.on_augment(current);
  }

  CoreOutcome outcome;
  outcome.common = current;
  outcome.reached_target = true;
  return outcome;
}

}  // namespace

IntersectionResult max_common_independent(const MatroidOracle& m1, const MatroidOracle& m2,
                                          const IntersectionOptions& options) {
  CoreOutcome outcome = run_augmentation(m1, m2, {}, -1, options);
  IntersectionResult result;
  result.common_set = std::move(outcome.common);
  result.size = static_cast<int>(result.common_set.size());
  result.dual_certificate = std::move(outcome.certificate);
  return result;
}

std::variant<WeightedIntersectionResult, IntersectionInfeasible>
min_weight_common_independent_of_size(const MatroidOracle& m1, const MatroidOracle& m2,
                                      std::span<const double> weights, int target_size,
                                      const IntersectionOptions& options) {
  if (target_size < 0) raise(Errc::InvalidArgument, "negative target size");
  CoreOutcome outcome = run_augmentation(m1, m2, weights, target_size, options);
  if (!outcome.reached_target) {
    return IntersectionInfeasible{std::move(outcome.certificate),
                                  static_cast<int>(outcome.common.size())};
  }
  WeightedIntersectionResult result;
  result.common_set = std::move(outcome.common);
  for (int x : result.common_set) {
    result.total_weight += weights.empty() ? 0.0 : weights[x];
  }
  return result;
}

}  // namespace arbopack

#include "arbopack/rng.hpp"

#include "arbopack/errors.hpp"

namespace arbopack {

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) raise(Errc::InvalidArgument, "uniform_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<int>(next_u64() % span);
}

double Rng::uniform_real() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<int> Rng::sample_distinct(int n, int count) {
  if (count > n) raise(Errc::InvalidArgument, "sample_distinct: count exceeds population");
  // Fisher-Yates over a scratch index vector, then sort the prefix.
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < count; ++i) {
    int j = uniform_int(i, n - 1);
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + count);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Rng::random_subset(int n, double p) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (uniform_real() < p) out.push_back(i);
  }
  return out;
}

}  // namespace arbopack

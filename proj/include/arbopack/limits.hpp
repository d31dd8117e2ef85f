#pragma once

namespace arbopack {

/// Enumeration ceilings for the brute-force subroutines. Subpartition and
/// partition enumeration grows with the Bell numbers, subset enumeration
/// with 2^|V|, so both are capped and the caps are part of each operation's
/// contract (exceeding them raises Errc::TooLarge).
struct Limits {
  int max_subpartition_vertices = 10;
  int max_subset_vertices = 20;

  /// Reads overrides from the ARBOPACK_LIMITS environment variable,
  /// e.g. ARBOPACK_LIMITS="subpartitions=12,subsets=24".
  static Limits from_env();
};

}  // namespace arbopack

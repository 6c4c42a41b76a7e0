#pragma once

// Exhaustive generation of 321-avoiding permutations and the
// 321-hexagon-avoiding counts per rank.

#include <cstdint>
#include <functional>
#include <vector>

#include "klheap/perm.hpp"

namespace klheap {

struct EnumRow {
  int n = 0;
  std::uint64_t count_321 = 0;
  std::uint64_t count_321_hexagon = 0;
  friend bool operator==(const EnumRow&, const EnumRow&) = default;
};

/// Ranks above this need an explicit override in the CLI.
inline constexpr int kEnumRankLimit = 13;

std::uint64_t catalan(int n);

/// Calls `visit` on every 321-avoiding permutation of rank n, in
/// lexicographic order, restricted to those whose first entry is in
/// `first_values` (all when empty).
void for_each_321_avoiding(int n, const std::function<void(const Permutation&)>& visit,
                           const std::vector<int>& first_values = {});

std::vector<Permutation> all_321_avoiding(int n);

/// Counts for one rank; the first entry of the one-line notation is dealt
/// round-robin to `jobs` workers.
EnumRow enumerate_rank(int n, unsigned jobs = 1);

}  // namespace klheap

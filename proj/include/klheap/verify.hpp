#pragma once

// The equivalence battery run by `klheap verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "klheap/perm.hpp"

namespace klheap {

struct VerifyOptions {
  int n = 4;
  /// Check this many permutations drawn without replacement instead of all of S_n.
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
};

struct CheckTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// One-line notations of the first few failures.
  std::vector<std::string> examples;
};

/// Per-permutation verdicts of the equivalent conditions.
struct EquivalenceRow {
  Permutation w;
  bool hexagon_avoiding = false;
  bool tight = false;
  bool poincare_binomial = false;  ///< poincare_ih(w) = (1+q)^{l(w)}
  bool deodhar_matches_kl = false;
  bool degree_bound = false;
  bool consistent() const noexcept {
    return tight == hexagon_avoiding && poincare_binomial == hexagon_avoiding &&
           deodhar_matches_kl == hexagon_avoiding && degree_bound == hexagon_avoiding;
  }
};

EquivalenceRow equivalence_row(const Permutation& w);

struct VerifyReport {
  int n = 0;
  std::size_t elements = 0;
  std::size_t hexagon_avoiding = 0;
  std::vector<CheckTally> checks;
  /// Permutations whose equivalence verdicts disagree with each other.
  std::vector<EquivalenceRow> inconsistent;
  /// Elements that are not 321-hexagon-avoiding and, consistently, neither
  /// tight nor computed correctly by the full mask sum.
  std::vector<Permutation> flagged;
  bool ok() const noexcept;
};

/// Runs, for each selected w: the equivalence of the conditions above;
/// lateral convexity against 321-avoidance; the zero-count criterion for
/// the sign of Δ on every mask; the forest property of every defect graph
/// when w is 321-hexagon-avoiding; and the last-letter recursion.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace klheap

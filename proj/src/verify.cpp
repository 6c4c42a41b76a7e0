#include "klheap/verify.hpp"

#include <algorithm>
#include <random>

#include "klheap/deodhar.hpp"
#include "klheap/error.hpp"
#include "klheap/heap.hpp"
#include "klheap/hecke.hpp"

namespace klheap {

namespace {

constexpr std::size_t kExamplesKept = 5;
constexpr int kExhaustiveRankLimit = 6;
constexpr int kSampleRankLimit = 9;

void tally(CheckTally& check, bool passed, const Permutation& w) {
  if (passed) {
    ++check.passed;
    return;
  }
  ++check.failed;
  if (check.examples.size() < kExamplesKept) check.examples.push_back(w.to_string());
}

bool zero_count_criterion_holds(const Word& word, const Permutation& w) {
  const std::uint64_t count = std::uint64_t{1} << word.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const Mask mask = Mask::from_integer(bits, word.size());
    const DefectRecord rec = defect_set(word, mask);
    if (rec.product == w) continue;
    const bool by_delta = !delta(word, mask).is_negative();
    const bool by_zeros = mask.zero_count() >= 2 * rec.zero_defects.size() + 1;
    if (by_delta != by_zeros) return false;
  }
  return true;
}

bool defect_graphs_are_forests(const Word& word) {
  const HeapEmbedding heap = build_heap(word);
  const std::uint64_t count = std::uint64_t{1} << word.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    if (!is_forest(defect_graph(heap, Mask::from_integer(bits, word.size())))) return false;
  }
  return true;
}

}  // namespace

EquivalenceRow equivalence_row(const Permutation& w) {
  const Word word = canonical_reduced_word(w);
  const DeodharTable masks = deodhar_table(word);
  const auto kl = default_kl_store().table(w);
  EquivalenceRow row;
  row.w = w;
  row.hexagon_avoiding = is_321_hexagon_avoiding(w);
  row.tight = is_tight(w);
  row.poincare_binomial = poincare_ih(w) == QPoly::one_plus_q_power(length(w));
  row.deodhar_matches_kl = masks == kl->entries;
  row.degree_bound = degree_bound_holds(word, masks);
  return row;
}

bool VerifyReport::ok() const noexcept {
  return inconsistent.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckTally& c) { return c.failed == 0; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  const int n = options.n;
  if (n < 1) throw DomainError("verify needs n >= 1");
  std::vector<Permutation> targets;
  if (options.sample) {
    if (n > kSampleRankLimit) {
      throw ResourceError("sampled verification is limited to n <= " + std::to_string(kSampleRankLimit));
    }
    targets = all_permutations(n);
    std::mt19937_64 rng(options.seed);
    std::shuffle(targets.begin(), targets.end(), rng);
    targets.resize(std::min(targets.size(), *options.sample));
    std::sort(targets.begin(), targets.end(), ShortLex{});
  } else {
    if (n > kExhaustiveRankLimit) {
      throw ResourceError("exhaustive verification is limited to n <= " + std::to_string(kExhaustiveRankLimit) +
                          "; pass --sample");
    }
    targets = all_permutations(n);
    std::sort(targets.begin(), targets.end(), ShortLex{});
  }

  VerifyReport report;
  report.n = n;
  report.elements = targets.size();
  CheckTally equivalence{"equivalence", 0, 0, {}};
  CheckTally lateral{"lateral-convexity", 0, 0, {}};
  CheckTally zero_count{"zero-count", 0, 0, {}};
  CheckTally forest{"forest", 0, 0, {}};
  CheckTally recursion{"recursion", 0, 0, {}};

  for (const Permutation& w : targets) {
    const Word word = canonical_reduced_word(w);
    const EquivalenceRow row = equivalence_row(w);
    tally(equivalence, row.consistent(), w);
    if (!row.consistent()) report.inconsistent.push_back(row);
    if (row.hexagon_avoiding) ++report.hexagon_avoiding;
    if (row.consistent() && !row.hexagon_avoiding) report.flagged.push_back(w);

    tally(lateral, lateral_convexity_check(word) == is_321_avoiding(w), w);
    tally(zero_count, zero_count_criterion_holds(word, w), w);
    if (row.hexagon_avoiding) tally(forest, defect_graphs_are_forests(word), w);
    if (!word.empty()) tally(recursion, recursion_check(word), w);
  }
  report.checks = {equivalence, lateral, zero_count, forest, recursion};
  return report;
}

}  // namespace klheap

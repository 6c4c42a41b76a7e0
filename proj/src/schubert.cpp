#include "klheap/schubert.hpp"

#include <algorithm>
#include <set>

#include "klheap/error.hpp"
#include "klheap/heap.hpp"
#include "klheap/hecke.hpp"
#include "klheap/mask.hpp"

namespace klheap {

namespace {

void require_hexagon_avoiding(const Word& word) {
  if (!is_reduced(word)) throw DomainError("word " + word.to_string() + " is not reduced");
  const Permutation w = apply_word(word);
  if (!is_321_hexagon_avoiding(w)) {
    throw DomainError(w.to_string() + " is not 321-hexagon-avoiding; use the KL oracle");
  }
}

}  // namespace

std::vector<SingularTriple> singular_triples(const Word& word) {
  require_hexagon_avoiding(word);
  const HeapEmbedding heap = build_heap(word);
  const std::size_t r = heap.size();
  std::vector<SingularTriple> out;
  for (std::size_t k = 1; k <= r; ++k) {
    const HeapPoint top = heap.point(k);
    const std::size_t piece = heap.component_of(k);
    for (std::size_t j = 1; j <= r; ++j) {
      const HeapPoint lp = heap.point(j);
      const int alpha = top.column - lp.column;
      if (alpha <= 0 || top.level - lp.level != alpha || heap.component_of(j) != piece) continue;
      for (std::size_t l = 1; l <= r; ++l) {
        const HeapPoint rp = heap.point(l);
        const int beta = rp.column - top.column;
        if (beta <= 0 || top.level - rp.level != beta || heap.component_of(l) != piece) continue;
        // The two lower cones intersect in the lower cone of the bottom vertex.
        const HeapPoint bottom{top.column - alpha + beta, top.level - alpha - beta};
        bool hit = false;
        for (std::size_t m = 1; m <= r && !hit; ++m) {
          hit = heap.component_of(m) == piece && in_cone(bottom, ConeDirection::Lower, heap.point(m));
        }
        if (hit) out.push_back({j, k, l});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> max_singular_locus(const Permutation& w) {
  const Word word = canonical_reduced_word(w);
  std::set<Permutation, ShortLex> points;
  for (const SingularTriple& t : singular_triples(word)) {
    const Mask mask = Mask::all_ones(word.size()).with(t.left, false).with(t.top, false).with(t.right, false);
    Permutation x = Permutation::identity(word.rank());
    for (std::size_t p = 1; p <= word.size(); ++p) {
      if (mask.at(p)) x = x.times_generator(word.at(p));
    }
    points.insert(std::move(x));
  }
  return {points.begin(), points.end()};
}

std::vector<Permutation> max_singular_locus_oracle(const Permutation& w) {
  const auto table = default_kl_store().table(w);
  std::vector<Permutation> singular;
  for (const auto& [x, p] : table->entries) {
    if (p != QPoly(1)) singular.push_back(x);
  }
  std::vector<Permutation> out;
  for (const Permutation& x : singular) {
    const bool dominated = std::any_of(singular.begin(), singular.end(), [&](const Permutation& y) {
      return y != x && bruhat_leq(x, y);
    });
    if (!dominated) out.push_back(x);
  }
  return out;  // entries are already in ShortLex order
}

bool is_smooth(const Permutation& w) {
  if (w.size() < 4) return true;
  static const Permutation square = Permutation({3, 4, 1, 2});
  static const Permutation cross = Permutation({4, 2, 3, 1});
  return !contains_pattern(w, square) && !contains_pattern(w, cross);
}

bool codim_check(const Permutation& w) {
  const int lw = length(w);
  const auto locus = max_singular_locus(w);
  return std::all_of(locus.begin(), locus.end(), [&](const Permutation& y) { return lw - length(y) == 3; });
}

}  // namespace klheap

#pragma once

// Maximal singular loci of Schubert varieties X_w.

#include <compare>
#include <cstddef>
#include <vector>

#include "klheap/perm.hpp"

namespace klheap {

/// Word positions of a heap diamond: `top` with `left` diagonally below-left
/// and `right` diagonally below-right.
struct SingularTriple {
  std::size_t left = 0;
  std::size_t top = 0;
  std::size_t right = 0;
  friend auto operator<=>(const SingularTriple&, const SingularTriple&) = default;
};

/// Every diamond of the heap whose two lower vertices have lower cones
/// meeting the heap. Throws DomainError unless apply_word(word) is
/// 321-hexagon-avoiding and the word is reduced.
std::vector<SingularTriple> singular_triples(const Word& word);

/// Products of the masks that zero exactly one triple each, deduplicated and
/// sorted by ShortLex. Same preconditions as singular_triples.
std::vector<Permutation> max_singular_locus(const Permutation& w);

/// Bruhat-maximal x <= w with P_{x,w} != 1, from the KL oracle. Any w.
std::vector<Permutation> max_singular_locus_oracle(const Permutation& w);

/// Avoids [3,4,1,2] and [4,2,3,1].
bool is_smooth(const Permutation& w);

/// Every maximal singular point sits at codimension 3.
bool codim_check(const Permutation& w);

}  // namespace klheap

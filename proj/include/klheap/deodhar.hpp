#pragma once

// Masks over a reduced word and the defect statistic.
//
// For a word a = s_{i_1}···s_{i_r} and a mask σ, position j is a defect when
// right-multiplying the masked prefix product π(σ[j-1]) by s_{i_j} lowers
// its length. Summing q^{#defects} over the masks whose product is x gives
// P_x(a); for 321-hexagon-avoiding w this is the Kazhdan-Lusztig polynomial
// P_{x,w}.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klheap/heap.hpp"
#include "klheap/mask.hpp"
#include "klheap/perm.hpp"
#include "klheap/qpoly.hpp"

namespace klheap {

/// Words longer than this are rejected before enumerating 2^r masks.
inline constexpr std::size_t kMaxMaskWordLength = 40;

struct DefectRecord {
  std::vector<std::size_t> defects;       ///< D(σ), ascending
  std::vector<std::size_t> zero_defects;  ///< D⁰(σ): defects with σ_j = 0
  std::vector<std::size_t> one_defects;   ///< D¹(σ): defects with σ_j = 1
  Permutation product;                    ///< π(w^σ)
};

DefectRecord defect_set(const Word& word, const Mask& mask);

using DeodharTable = std::map<Permutation, QPoly, ShortLex>;

enum class MaskWalk {
  GrayCode,  ///< incremental prefix products, amortized O(1) per mask
  Naive,     ///< recompute every mask from scratch
};

struct EnumerationOptions {
  unsigned jobs = 1;
  MaskWalk walk = MaskWalk::GrayCode;
};

/// P_x(a) for every x reached by some mask. Throws ResourceError above
/// kMaxMaskWordLength letters.
DeodharTable deodhar_table(const Word& word, const EnumerationOptions& options = {});
QPoly deodhar_poly(const Word& word, const Permutation& x);

/// Pointwise sum; used to combine partial tables from disjoint mask ranges.
void merge_into(DeodharTable& into, const DeodharTable& from);

/// True iff deg P_x(a) <= (l(w) - l(x) - 1)/2 for every x != w in the table.
bool degree_bound_holds(const Word& word, const DeodharTable& table);

/// An exact multiple of 1/2.
struct HalfInteger {
  long twice = 0;
  bool is_negative() const noexcept { return twice < 0; }
  std::string to_string() const;
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

/// Δ_σ = (l(w) - l(π(w^σ)) - 1)/2 - |D(σ)|. Throws DomainError when the mask
/// evaluates to w itself.
HalfInteger delta(const Word& word, const Mask& mask);

/// Left, right and middle critical zeros of a D⁰ defect, as word positions.
struct CriticalZeros {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t middle = 0;
  friend bool operator==(const CriticalZeros&, const CriticalZeros&) = default;
};

CriticalZeros critical_zeros(const HeapEmbedding& heap, const Mask& mask, std::size_t defect);
CriticalZeros critical_zeros(const Word& word, const Mask& mask, std::size_t defect);

/// One vertex per D⁰ defect; an edge joins two defects whose critical-zero
/// triples intersect.
struct DefectGraph {
  std::vector<std::size_t> vertices;  ///< defect positions
  std::vector<CriticalZeros> zeros;   ///< parallel to vertices
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< indices into vertices
};

DefectGraph defect_graph(const HeapEmbedding& heap, const Mask& mask);
DefectGraph defect_graph(const Word& word, const Mask& mask);
bool is_forest(const DefectGraph& graph);

/// Checks P_x(a) = q^{c} P_x(a/s) + q^{1-c} P_{xs}(a/s) for every x, where
/// s is the last letter of a and c = 1 iff xs < x.
bool recursion_check(const Word& word);

}  // namespace klheap

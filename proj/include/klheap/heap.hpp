#pragma once

// Planar heap embedding of a reduced, 321-avoiding word.
//
// Each word position j becomes the lattice point (i_j, level_j). Two
// positions in adjacent columns are always comparable in the heap order,
// and in the embedding every covering pair sits at level difference
// exactly 1, so each connected piece of the heap is laid out without gaps.
// Pieces that share no adjacent columns are independent; each is anchored
// with its lowest point on level 0.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "klheap/mask.hpp"
#include "klheap/perm.hpp"

namespace klheap {

struct HeapPoint {
  int column = 0;
  int level = 0;
  friend auto operator<=>(const HeapPoint&, const HeapPoint&) = default;
};

enum class ConeDirection { Lower, Upper };

class HeapEmbedding {
 public:
  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return points_.size(); }
  /// pt(j) for 1 <= j <= r.
  HeapPoint point(std::size_t position) const { return points_[position - 1]; }
  std::span<const HeapPoint> points() const noexcept { return points_; }

  /// Connected pieces, as sorted lists of 1-based positions.
  const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }
  std::size_t component_of(std::size_t position) const { return component_id_[position - 1]; }

  std::optional<std::size_t> position_at(HeapPoint p) const;
  bool contains(HeapPoint p) const { return position_at(p).has_value(); }

 private:
  friend HeapEmbedding build_heap(const Word& word);

  Word word_;
  std::vector<HeapPoint> points_;
  std::vector<std::vector<std::size_t>> components_;
  std::vector<std::size_t> component_id_;
  std::unordered_map<long long, std::size_t> by_point_;
};

/// The initial level function: 0 when every earlier letter commutes with
/// i_j, otherwise one more than the level of the last earlier letter that
/// does not commute with it. Throws DomainError if the word is not reduced
/// and 321-avoiding.
std::vector<int> level_raw(const Word& word);

/// Throws DomainError if the word is not reduced and 321-avoiding.
HeapEmbedding build_heap(const Word& word);

bool in_cone(HeapPoint apex, ConeDirection direction, HeapPoint p);
bool on_cone_boundary(HeapPoint apex, ConeDirection direction, HeapPoint p);

struct ConeMembers {
  std::vector<std::size_t> positions;  ///< every heap position in the cone
  std::vector<std::size_t> boundary;   ///< the subset with |α| = β
};

ConeMembers cone_points(const HeapEmbedding& heap, std::size_t position, ConeDirection direction);

/// Lattice points of Cone∧(top) ∩ Cone∨(bottom).
std::vector<HeapPoint> lattice_diamond(HeapPoint bottom, HeapPoint top);

/// Monospace drawing, highest level on the first line, two characters per
/// column. Without a mask every point is '*'. With a mask: 'x' kept letter,
/// 'o' dropped letter, 'X' / 'O' the same at a defect position.
std::string render_ascii(const HeapEmbedding& heap, const Mask* mask = nullptr);

}  // namespace klheap

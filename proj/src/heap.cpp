#include "klheap/heap.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <limits>

#include "klheap/deodhar.hpp"
#include "klheap/error.hpp"

namespace klheap {

namespace {

long long point_key(HeapPoint p) {
  return (static_cast<long long>(p.column) << 32) ^ static_cast<long long>(static_cast<unsigned>(p.level));
}

void require_fully_commutative(const Word& word) {
  if (!is_reduced(word)) throw DomainError("heap undefined: word " + word.to_string() + " is not reduced");
  if (!lateral_convexity_check(word)) {
    throw DomainError("heap undefined: word " + word.to_string() + " is not 321-avoiding");
  }
}

}  // namespace

std::optional<std::size_t> HeapEmbedding::position_at(HeapPoint p) const {
  auto it = by_point_.find(point_key(p));
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> level_raw(const Word& word) {
  require_fully_commutative(word);
  auto letters = word.letters();
  std::vector<int> level(letters.size(), 0);
  for (std::size_t j = 0; j < letters.size(); ++j) {
    for (std::size_t k = j; k-- > 0;) {
      if (std::abs(letters[k] - letters[j]) == 1) {
        level[j] = level[k] + 1;
        break;
      }
    }
  }
  return level;
}

HeapEmbedding build_heap(const Word& word) {
  require_fully_commutative(word);
  auto letters = word.letters();
  const std::size_t r = letters.size();

  // Covering pairs: position k covers the last occurrence of each adjacent
  // column before it, unless an earlier copy of column i_k intervenes.
  std::vector<std::vector<std::pair<std::size_t, int>>> adjacent(r);  // (other, level step)
  std::vector<long> last_seen(static_cast<std::size_t>(word.rank()) + 2, -1);
  for (std::size_t k = 0; k < r; ++k) {
    const int col = letters[k];
    const long same = last_seen[static_cast<std::size_t>(col)];
    for (int c : {col - 1, col + 1}) {
      const long j = last_seen[static_cast<std::size_t>(c)];
      if (j >= 0 && j > same) {
        adjacent[k].emplace_back(static_cast<std::size_t>(j), -1);
        adjacent[static_cast<std::size_t>(j)].emplace_back(k, +1);
      }
    }
    last_seen[static_cast<std::size_t>(col)] = static_cast<long>(k);
  }

  HeapEmbedding heap;
  heap.word_ = word;
  heap.points_.resize(r);
  heap.component_id_.assign(r, std::numeric_limits<std::size_t>::max());
  std::vector<int> level(r, 0);

  for (std::size_t root = 0; root < r; ++root) {
    if (heap.component_id_[root] != std::numeric_limits<std::size_t>::max()) continue;
    const std::size_t id = heap.components_.size();
    std::vector<std::size_t> members{root};
    std::deque<std::size_t> queue{root};
    heap.component_id_[root] = id;
    level[root] = 0;
    while (!queue.empty()) {
      const std::size_t at = queue.front();
      queue.pop_front();
      for (auto [other, step] : adjacent[at]) {
        const int want = level[at] + step;
        if (heap.component_id_[other] == id) {
          if (level[other] != want) {
            throw InternalError("heap layout is inconsistent for word " + word.to_string());
          }
          continue;
        }
        heap.component_id_[other] = id;
        level[other] = want;
        members.push_back(other);
        queue.push_back(other);
      }
    }
    int lowest = std::numeric_limits<int>::max();
    for (std::size_t m : members) lowest = std::min(lowest, level[m]);
    std::vector<std::size_t> positions;
    for (std::size_t m : members) {
      level[m] -= lowest;
      positions.push_back(m + 1);
    }
    std::sort(positions.begin(), positions.end());
    heap.components_.push_back(std::move(positions));
  }

  for (std::size_t k = 0; k < r; ++k) {
    heap.points_[k] = HeapPoint{letters[k], level[k]};
    if (!heap.by_point_.emplace(point_key(heap.points_[k]), k + 1).second) {
      throw InternalError("two heap positions share a lattice point in " + word.to_string());
    }
  }
  return heap;
}

bool in_cone(HeapPoint apex, ConeDirection direction, HeapPoint p) {
  const int beta = direction == ConeDirection::Lower ? apex.level - p.level : p.level - apex.level;
  return std::abs(p.column - apex.column) <= beta;
}

bool on_cone_boundary(HeapPoint apex, ConeDirection direction, HeapPoint p) {
  const int beta = direction == ConeDirection::Lower ? apex.level - p.level : p.level - apex.level;
  return beta >= 0 && std::abs(p.column - apex.column) == beta;
}

ConeMembers cone_points(const HeapEmbedding& heap, std::size_t position, ConeDirection direction) {
  if (position < 1 || position > heap.size()) throw DomainError("heap position out of range");
  const HeapPoint apex = heap.point(position);
  ConeMembers out;
  for (std::size_t k = 1; k <= heap.size(); ++k) {
    const HeapPoint p = heap.point(k);
    if (!in_cone(apex, direction, p)) continue;
    out.positions.push_back(k);
    if (on_cone_boundary(apex, direction, p)) out.boundary.push_back(k);
  }
  return out;
}

std::vector<HeapPoint> lattice_diamond(HeapPoint bottom, HeapPoint top) {
  std::vector<HeapPoint> out;
  const int span = top.level - bottom.level;
  const int lo = std::min(bottom.column, top.column) - span;
  const int hi = std::max(bottom.column, top.column) + span;
  for (int lvl = bottom.level; lvl <= top.level; ++lvl) {
    for (int col = lo; col <= hi; ++col) {
      HeapPoint p{col, lvl};
      if (in_cone(top, ConeDirection::Lower, p) && in_cone(bottom, ConeDirection::Upper, p)) {
        out.push_back(p);
      }
    }
  }
  return out;
}

std::string render_ascii(const HeapEmbedding& heap, const Mask* mask) {
  if (heap.size() == 0) return {};
  if (mask && mask->size() != heap.size()) throw DomainError("mask length does not match the word");
  std::vector<bool> defect(heap.size() + 1, false);
  if (mask) {
    for (std::size_t j : defect_set(heap.word(), *mask).defects) defect[j] = true;
  }
  int min_col = std::numeric_limits<int>::max(), max_col = std::numeric_limits<int>::min();
  int min_lvl = std::numeric_limits<int>::max(), max_lvl = std::numeric_limits<int>::min();
  for (HeapPoint p : heap.points()) {
    min_col = std::min(min_col, p.column);
    max_col = std::max(max_col, p.column);
    min_lvl = std::min(min_lvl, p.level);
    max_lvl = std::max(max_lvl, p.level);
  }
  const auto width = static_cast<std::size_t>(2 * (max_col - min_col) + 1);
  std::vector<std::string> rows(static_cast<std::size_t>(max_lvl - min_lvl + 1), std::string(width, ' '));
  for (std::size_t j = 1; j <= heap.size(); ++j) {
    const HeapPoint p = heap.point(j);
    char mark = '*';
    if (mask) {
      const bool kept = mask->at(j);
      mark = defect[j] ? (kept ? 'X' : 'O') : (kept ? 'x' : 'o');
    }
    rows[static_cast<std::size_t>(max_lvl - p.level)][static_cast<std::size_t>(2 * (p.column - min_col))] = mark;
  }
  std::string out;
  for (std::string& row : rows) {
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

}  // namespace klheap

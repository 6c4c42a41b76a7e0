#include <doctest.h>

#include <set>

#include "klheap/enumerate.hpp"
#include "klheap/error.hpp"
#include "klheap/heap.hpp"
#include "oracles.hpp"

using namespace klheap;

namespace {

std::vector<std::pair<int, int>> coords(const HeapEmbedding& h) {
  std::vector<std::pair<int, int>> out;
  for (HeapPoint p : h.points()) out.emplace_back(p.column, p.level);
  return out;
}

// Non-commuting letters keep their order; comparable neighbours in the
// heap order sit exactly one level apart.
void check_heap_shape(const HeapEmbedding& h) {
  const Word& word = h.word();
  for (std::size_t j = 1; j <= word.size(); ++j) {
    for (std::size_t k = j + 1; k <= word.size(); ++k) {
      if (std::abs(word.at(j) - word.at(k)) <= 1) CHECK(h.point(j).level < h.point(k).level);
    }
  }
  std::set<std::pair<int, int>> seen;
  for (auto c : coords(h)) CHECK(seen.insert(c).second);
  for (std::size_t k = 1; k <= word.size(); ++k) {
    for (int c : {word.at(k) - 1, word.at(k) + 1}) {
      // The last occurrence of an adjacent column before k, if no copy of
      // column i_k intervenes, is covered by k.
      std::size_t below = 0, same = 0;
      for (std::size_t j = 1; j < k; ++j) {
        if (word.at(j) == c) below = j;
        if (word.at(j) == word.at(k)) same = j;
      }
      if (below > same && below != 0) CHECK(h.point(k).level - h.point(below).level == 1);
    }
  }
}

}  // namespace

TEST_CASE("heap of the hexagon word") {
  const HeapEmbedding h = build_heap(Word::parse("3 2 1 5 4 3 2 6 5 4 3 7 6 5"));
  const std::vector<std::pair<int, int>> expected = {{3, 0}, {2, 1}, {1, 2}, {5, 0}, {4, 1}, {3, 2}, {2, 3},
                                                     {6, 1}, {5, 2}, {4, 3}, {3, 4}, {7, 2}, {6, 3}, {5, 4}};
  CHECK(coords(h) == expected);
  CHECK(h.components().size() == 1);
  CHECK(h.position_at({4, 3}) == std::optional<std::size_t>(10));
  CHECK_FALSE(h.contains({4, 4}));
  check_heap_shape(h);
  CHECK(render_ascii(h) ==
        "    *   *\n"
        "  *   *   *\n"
        "*   *   *   *\n"
        "  *   *   *\n"
        "    *   *\n");
}

TEST_CASE("the raw level function can break covers; the embedding does not") {
  const Word word = Word::parse("1 2 3 5 4");
  CHECK(level_raw(word) == std::vector<int>{0, 1, 2, 0, 1});
  const HeapEmbedding h = build_heap(word);
  CHECK(coords(h) == std::vector<std::pair<int, int>>{{1, 0}, {2, 1}, {3, 2}, {5, 2}, {4, 3}});
  check_heap_shape(h);
}

TEST_CASE("independent pieces are anchored separately") {
  const HeapEmbedding h = build_heap(Word({4, 5, 1, 2}, 6));
  CHECK(h.components().size() == 2);
  CHECK(h.point(1).level == 0);
  CHECK(h.point(3).level == 0);
  CHECK(h.component_of(1) != h.component_of(3));
}

TEST_CASE("heaps reject words that are not reduced or not 321-avoiding") {
  CHECK_THROWS_AS(build_heap(Word::parse("1 2 1")), DomainError);
  CHECK_THROWS_AS(build_heap(Word::parse("1 1")), DomainError);
  CHECK_THROWS_AS(level_raw(Word::parse("2 1 2")), DomainError);
  CHECK(build_heap(Word()).size() == 0);
  CHECK(render_ascii(build_heap(Word())).empty());
}

TEST_CASE("heaps are well defined across all reduced words") {
  for (int n = 1; n <= 6; ++n) {
    for (const Permutation& w : all_321_avoiding(n)) {
      const auto words = oracle::reduced_words(w);
      std::multiset<std::pair<int, int>> reference;
      bool first = true;
      for (const auto& letters : words) {
        const HeapEmbedding h = build_heap(Word(letters, n));
        check_heap_shape(h);
        auto c = coords(h);
        std::multiset<std::pair<int, int>> shape(c.begin(), c.end());
        if (first) reference = shape;
        CHECK(shape == reference);
        first = false;
      }
    }
  }
}

TEST_CASE("heap embedding is consistent for every 321-avoiding element up to rank 8") {
  for (int n = 7; n <= 8; ++n) {
    std::size_t count = 0;
    for_each_321_avoiding(n, [&](const Permutation& w) {
      const HeapEmbedding h = build_heap(canonical_reduced_word(w));
      check_heap_shape(h);
      ++count;
    });
    CHECK(count == catalan(n));
  }
}

TEST_CASE("cones and diamonds") {
  const HeapPoint apex{3, 4};
  CHECK(in_cone(apex, ConeDirection::Lower, {3, 4}));
  CHECK(in_cone(apex, ConeDirection::Lower, {1, 2}));
  CHECK_FALSE(in_cone(apex, ConeDirection::Lower, {1, 3}));
  CHECK(in_cone(apex, ConeDirection::Upper, {6, 7}));
  CHECK(on_cone_boundary(apex, ConeDirection::Lower, {5, 2}));
  CHECK_FALSE(on_cone_boundary(apex, ConeDirection::Lower, {3, 2}));

  const HeapEmbedding h = build_heap(Word::parse("3 2 1 5 4 3 2 6 5 4 3 7 6 5"));
  const ConeMembers below = cone_points(h, 11, ConeDirection::Lower);  // apex (3,4)
  CHECK(below.positions == std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(below.boundary == std::vector<std::size_t>{3, 7, 8, 9, 10, 11});
  CHECK_THROWS_AS(cone_points(h, 15, ConeDirection::Lower), DomainError);

  const auto diamond = lattice_diamond({3, 0}, {3, 4});
  CHECK(diamond.size() == 13);
  CHECK(std::count(diamond.begin(), diamond.end(), HeapPoint{1, 2}) == 1);
  CHECK(lattice_diamond({2, 1}, {3, 2}).size() == 2);
}

TEST_CASE("rendering with a mask marks kept, dropped and defect positions") {
  const Word word = Word::parse("2 1 3 2");
  const HeapEmbedding h = build_heap(word);
  CHECK(render_ascii(h) == "  *\n*   *\n  *\n");
  const Mask m = Mask::parse("(1,0,0,1)");
  CHECK(render_ascii(h, &m) == "  X\no   o\n  x\n");
  const Mask wrong = Mask::parse("(1,0)");
  CHECK_THROWS_AS(render_ascii(h, &wrong), DomainError);
}

#include <doctest.h>

#include <random>

#include "klheap/deodhar.hpp"
#include "klheap/enumerate.hpp"
#include "klheap/error.hpp"
#include "oracles.hpp"

using namespace klheap;

namespace {

std::map<std::vector<int>, std::vector<std::int64_t>> as_oracle_form(const DeodharTable& t) {
  std::map<std::vector<int>, std::vector<std::int64_t>> out;
  for (const auto& [x, p] : t) out[oracle::images(x)] = {p.coeffs().begin(), p.coeffs().end()};
  return out;
}

Coeff total_at_one(const DeodharTable& t) {
  Coeff sum = 0;
  for (const auto& [x, p] : t) sum += p.evaluate(1);
  return sum;
}

}  // namespace

TEST_CASE("defect sets of the worked examples") {
  const Word a = Word::parse("3 2 1 4 3 2 5 4 3");
  const DefectRecord rec = defect_set(a, Mask::parse("(1,1,0,1,0,1,0,1,0)"));
  CHECK(rec.defects == std::vector<std::size_t>{6, 8, 9});
  CHECK(rec.product == Permutation::generator(6, 3));
  CHECK(rec.one_defects == std::vector<std::size_t>{6, 8});
  CHECK(rec.zero_defects == std::vector<std::size_t>{9});
  CHECK(defect_set(a, Mask::parse("(1,0,1,0,0,0,1,0,0)")).defects == std::vector<std::size_t>{5, 9});
  CHECK(defect_set(a, Mask::all_ones(9)).defects.empty());
  CHECK_THROWS_AS(defect_set(a, Mask::all_ones(8)), DomainError);
}

TEST_CASE("defect membership ignores later mask bits") {
  std::mt19937_64 rng(7);
  const Word a = Word::parse("2 1 3 2 4 3 5 4 6 5");
  for (int trial = 0; trial < 200; ++trial) {
    const Mask m = Mask::from_integer(rng() & ((1u << a.size()) - 1), a.size());
    const auto base = defect_set(a, m).defects;
    const std::size_t j = 1 + rng() % a.size();
    for (std::size_t k = j + 1; k <= a.size(); ++k) {
      const auto toggled = defect_set(a, m.with(k, !m.at(k))).defects;
      CHECK(std::binary_search(base.begin(), base.end(), j) ==
            std::binary_search(toggled.begin(), toggled.end(), j));
    }
  }
}

TEST_CASE("single polynomials") {
  CHECK(deodhar_poly(Word::parse("2 1 3 2 4 3"), Permutation::identity(5)) == QPoly({1, 2}));
  CHECK(deodhar_poly(Word::parse("1 2 1"), Permutation::generator(3, 1)) == QPoly({1, 1}));
  const Word a = Word::parse("2 1 3 2 4 3");
  CHECK(deodhar_poly(a, apply_word(a)) == QPoly(1));
  CHECK(deodhar_poly(Word::parse("1 2"), Permutation({2, 1, 3})) == QPoly(1));
  CHECK(deodhar_poly(Word::parse("1", 3), Permutation::generator(3, 2)).is_zero());
  CHECK_THROWS_AS(deodhar_poly(Word::parse("1"), Permutation::generator(3, 2)), DomainError);
  CHECK(deodhar_poly(Word::parse("1 2"), Permutation({1})) == QPoly(1));
}

TEST_CASE("tables match the inversion-count oracle") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const Word word = canonical_reduced_word(w);
      std::vector<int> letters(word.letters().begin(), word.letters().end());
      const DeodharTable t = deodhar_table(word);
      CHECK(as_oracle_form(t) == oracle::mask_table(letters, n));
      CHECK(total_at_one(t) == (Coeff{1} << word.size()));
    }
  }
  CHECK(deodhar_table(Word()) == DeodharTable{{Permutation(), QPoly(1)}});
}

TEST_CASE("Gray-code, naive and parallel enumeration agree") {
  const std::vector<std::string> words = {"2 1 3 2 4 3", "3 2 1 5 4 3 2 6 5 4 3 7 6 5", "1 2 1", "2 1 3 2 4 3 5 4 6 5 7 6 8 7",
                                          "1 3 5 7", ""};
  for (const auto& text : words) {
    const Word word = Word::parse(text, 9);
    const DeodharTable gray = deodhar_table(word, {1, MaskWalk::GrayCode});
    CHECK(deodhar_table(word, {1, MaskWalk::Naive}) == gray);
    for (unsigned jobs : {2u, 3u, 8u}) {
      CHECK(deodhar_table(word, {jobs, MaskWalk::GrayCode}) == gray);
      CHECK(deodhar_table(word, {jobs, MaskWalk::Naive}) == gray);
    }
    CHECK(total_at_one(gray) == (Coeff{1} << word.size()));
  }
}

TEST_CASE("all-distinct letters give the all-ones table") {
  for (const char* text : {"1 2 3 4", "4 3 2 1", "2 4 1 3", "3 1 2"}) {
    for (const auto& [x, p] : deodhar_table(Word::parse(text, 5))) CHECK(p == QPoly(1));
  }
}

TEST_CASE("merging partial tables adds pointwise") {
  DeodharTable a{{Permutation::identity(2), QPoly(1)}};
  const DeodharTable b{{Permutation::identity(2), QPoly({0, 1})}, {Permutation::generator(2, 1), QPoly(1)}};
  merge_into(a, b);
  CHECK(a.at(Permutation::identity(2)) == QPoly({1, 1}));
  CHECK(a.size() == 2);
}

TEST_CASE("the enumeration guard") {
  std::vector<int> letters;
  for (int k = 0; k < 41; ++k) letters.push_back(1 + k % 2);
  CHECK_THROWS_AS(deodhar_table(Word(letters, 3)), ResourceError);
}

TEST_CASE("delta and the zero-count criterion") {
  const Word braid = Word::parse("1 2 1");
  const Mask m = Mask::parse("(1,0,0)");
  CHECK(defect_set(braid, m).zero_defects == std::vector<std::size_t>{3});
  CHECK(delta(braid, m).is_negative());
  CHECK(delta(braid, m).to_string() == "-1/2");
  CHECK_THROWS_AS(delta(braid, Mask::all_ones(3)), DomainError);
  CHECK(delta(Word::parse("1 2"), Mask::parse("(0,0)")).to_string() == "1/2");
  CHECK(delta(Word::parse("1 2 3"), Mask::parse("(0,0,0)")).to_string() == "1");

  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      const Word word = canonical_reduced_word(w);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << word.size()); ++bits) {
        const Mask mask = Mask::from_integer(bits, word.size());
        const DefectRecord rec = defect_set(word, mask);
        if (rec.product == w) continue;
        const bool by_delta = !delta(word, mask).is_negative();
        CHECK(by_delta == (mask.zero_count() >= 2 * rec.zero_defects.size() + 1));
      }
    }
  }
}

TEST_CASE("critical zeros of a minimal diamond") {
  const Word word = Word::parse("2 1 3 2");
  const Mask m = Mask::parse("(1,0,0,0)");
  CHECK(critical_zeros(word, m, 4) == CriticalZeros{2, 3, 4});
  CHECK_THROWS_AS(critical_zeros(word, m, 3), DomainError);
  const DefectGraph g = defect_graph(word, m);
  CHECK(g.vertices == std::vector<std::size_t>{4});
  CHECK(g.edges.empty());
  CHECK(is_forest(g));
  CHECK(defect_graph(word, Mask::all_ones(4)).vertices.empty());
}

TEST_CASE("critical zeros on larger heaps") {
  const Word fig5 = Word::parse("4 3 2 1 5 4 3 2 6 5 4 7 6 5");
  const Mask m5 = Mask::parse("(1,0,1,0,1,1,0,1,0,0,0,1,0,0)");
  const HeapEmbedding h5 = build_heap(fig5);
  const DefectRecord rec5 = defect_set(fig5, m5);
  CHECK_FALSE(rec5.zero_defects.empty());
  for (std::size_t j : rec5.zero_defects) {
    const CriticalZeros z = critical_zeros(h5, m5, j);
    CHECK(z.middle == j);
    CHECK_FALSE(m5.at(z.left));
    CHECK_FALSE(m5.at(z.right));
    CHECK(h5.point(j).level - h5.point(z.left).level == h5.point(j).column - h5.point(z.left).column);
    CHECK(h5.point(j).level - h5.point(z.right).level == h5.point(z.right).column - h5.point(j).column);
  }
  CHECK(is_forest(defect_graph(h5, m5)));

  const Word fig6 = canonical_reduced_word(Permutation({6, 7, 8, 1, 9, 2, 3, 4, 5}));
  REQUIRE(fig6.size() == 19);
  const Mask m6 = Mask::parse("(1,0,1,1,0,1,1,0,1,0,1,1,1,0,0,0,0,0,0)");
  const DefectGraph g6 = defect_graph(fig6, m6);
  CHECK(g6.vertices.size() == g6.zeros.size());
  CHECK_FALSE(g6.vertices.empty());
  CHECK(is_forest(g6));
}

TEST_CASE("forest detection") {
  DefectGraph triangle;
  triangle.vertices = {1, 2, 3};
  triangle.zeros.resize(3);
  triangle.edges = {{0, 1}, {1, 2}, {0, 2}};
  CHECK_FALSE(is_forest(triangle));
  triangle.edges.pop_back();
  CHECK(is_forest(triangle));
  CHECK(is_forest(DefectGraph{}));
}

TEST_CASE("last-letter recursion") {
  CHECK(recursion_check(Word::parse("1")));
  CHECK(recursion_check(Word::parse("1 2 1")));
  CHECK(recursion_check(Word::parse("2 1 3 2 4 3")));
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& w : all_permutations(n)) {
      if (!w.is_identity()) CHECK(recursion_check(canonical_reduced_word(w)));
    }
  }
  CHECK_THROWS_AS(recursion_check(Word()), DomainError);
}

TEST_CASE("the degree bound separates hexagon-avoiding words") {
  const Word good = Word::parse("2 1 3 2 4 3");
  CHECK(degree_bound_holds(good, deodhar_table(good)));
  const Word braid = Word::parse("1 2 1");
  CHECK_FALSE(degree_bound_holds(braid, deodhar_table(braid)));
}

#include <doctest.h>

#include "klheap/enumerate.hpp"
#include "klheap/error.hpp"
#include "klheap/io.hpp"
#include "oracles.hpp"

using namespace klheap;

TEST_CASE("Catalan numbers") {
  const std::vector<std::uint64_t> expected = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786};
  for (std::size_t n = 0; n < expected.size(); ++n) CHECK(catalan(static_cast<int>(n)) == expected[n]);
  CHECK(catalan(13) == 742900);
}

TEST_CASE("321-avoiding generation matches filtering all permutations") {
  for (int n = 1; n <= 7; ++n) {
    std::vector<Permutation> filtered;
    for (const Permutation& p : all_permutations(n)) {
      if (!oracle::contains_pattern(oracle::images(p), {3, 2, 1})) filtered.push_back(p);
    }
    CHECK(all_321_avoiding(n) == filtered);
  }
  CHECK_THROWS_AS(all_321_avoiding(0), DomainError);
}

TEST_CASE("small rows and job independence") {
  CHECK(enumerate_rank(6) == EnumRow{6, 132, 132});
  CHECK(enumerate_rank(8) == EnumRow{8, 1430, 1426});
  for (unsigned jobs : {2u, 3u, 5u, 20u}) CHECK(enumerate_rank(8, jobs) == enumerate_rank(8, 1));
}

TEST_CASE("serialization helpers") {
  CHECK(parse_format("json") == Format::Json);
  CHECK_THROWS_AS(parse_format("xml"), ParseError);
  CHECK(csv_field("abc") == "abc");
  CHECK(csv_field("1,2") == "\"1,2\"");
  CHECK(csv_field("say \"hi\", ok") == "\"say \"\"hi\"\", ok\"");
  CHECK(coeff_list(QPoly({1, 2})) == "1 2");

  const PolyTable t = {{Permutation({1, 2}), QPoly({1, 1})}, {Permutation({2, 1}), QPoly(1)}};
  CHECK(format_poly_table(t, Format::Text) == "1,2\t1+q\n2,1\t1\n");
  CHECK(format_poly_table(t, Format::Csv) == "x,coeffs\n\"1,2\",1 1\n\"2,1\",1\n");
  CHECK(half_laurent_json(HalfLaurent::monomial(1, -3) + HalfLaurent::monomial(2, 1)) ==
        "{\"v_exps\":{\"-3\":1,\"1\":2}}");
  CHECK(half_laurent_json(HalfLaurent()) == "{\"v_exps\":{}}");
  CHECK(format_poly_table(t, Format::Json) ==
        "[{\"x\":\"1,2\",\"poly\":{\"coeffs\":[1,1]}},{\"x\":\"2,1\",\"poly\":{\"coeffs\":[1]}}]\n");
}

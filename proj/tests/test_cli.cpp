#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "klheap/hecke.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = klheap::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check") {
  const Result r = run({"check", "3,4,5,1,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("321-avoiding: yes\nhexagon-avoiding: yes\n") != std::string::npos);
  CHECK(run({"--format", "json", "check", "3,2,1"}).out ==
        "{\"permutation\":\"3,2,1\",\"length\":\"3\",\"reduced word\":\"1 2 1\",\"321-avoiding\":\"no\","
        "\"hexagon-avoiding\":\"yes\",\"321-hexagon-avoiding\":\"no\",\"smooth\":\"yes\"}\n");
  CHECK(run({"check", "e", "--n", "3"}).code == 0);
}

TEST_CASE("kl") {
  CHECK(run({"kl", "--word", "2 1 3 2 4 3", "--x", "e"}).out == "1+2q\n");
  CHECK(run({"kl", "--word", "2 1 3 2 4 3"}).out == "1+2q\n");
  CHECK(run({"kl", "--perm", "3,4,5,1,2", "--x", "1,3,2,4,5", "--jobs", "3"}).out == "1+2q\n");
  CHECK(run({"kl", "--perm", "3,4,1,2", "--oracle"}).out == "1+q\n");
  const Result refused = run({"kl", "--perm", "3,2,1"});
  CHECK(refused.code == 2);
  CHECK(refused.err.find("--oracle") != std::string::npos);
  CHECK(run({"kl", "--perm", "3,2,1", "--oracle"}).out == "1\n");
  CHECK(run({"--format", "csv", "kl", "--word", "2 1 3 2 4 3"}).out == "w,x,coeffs\n\"3,4,5,1,2\",\"1,2,3,4,5\",1 2\n");
  CHECK(run({"kl", "--word", "1 1"}).code == 2);
  CHECK(run({"kl", "--word", "1 x"}).code == 2);
  CHECK(run({"kl", "--word", "1", "--perm", "2,1"}).code == 2);
}

TEST_CASE("masks reproduce the defect listing") {
  const Result r = run({"masks", "--word", "3 2 1 4 3 2 5 4 3", "--x", "2,1,4,3,6,5"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "(0,0,1,0,0,0,1,0,1)\t2,1,4,3,6,5\t{}\n"
        "(0,0,1,0,1,0,1,0,0)\t2,1,4,3,6,5\t{9}\n"
        "(1,0,1,0,0,0,1,0,0)\t2,1,4,3,6,5\t{5,9}\n"
        "(1,0,1,0,1,0,1,0,1)\t2,1,4,3,6,5\t{5}\n");
  const Result defective = run({"masks", "--word", "2 1 3 2 4 3", "--defective"});
  CHECK(std::count(defective.out.begin(), defective.out.end(), '\n') == 18);
}

TEST_CASE("table output is independent of --jobs") {
  const Result one = run({"--format", "json", "table", "--word", "2 1 3 2 4 3 5 4"});
  const Result four = run({"--format", "json", "--jobs", "4", "table", "--word", "2 1 3 2 4 3 5 4"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(run({"table", "--perm", "3,4,5,1,2", "--oracle"}).out == run({"table", "--perm", "3,4,5,1,2"}).out);
}

TEST_CASE("poincare, tight and singular") {
  CHECK(run({"poincare", "3,2,1"}).out == "1+2q+2q^2+q^3\n");
  CHECK(run({"tight", "3,4,5,1,2"}).out == "permutation: 3,4,5,1,2\ntight: yes\n");
  CHECK(run({"tight", "3,2,1"}).out == "permutation: 3,2,1\ntight: no\n");
  const Result s = run({"singular", "3,6,7,1,2,4,5"});
  CHECK(s.code == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 8);
  CHECK(s.out == run({"singular", "3,6,7,1,2,4,5", "--oracle"}).out);
  CHECK(run({"--format", "csv", "singular", "3,4,1,2"}).out == "y,codim\n\"1,3,2,4\",3\n");
}

TEST_CASE("heap") {
  CHECK(run({"heap", "--word", "2 1 3 2"}).out == "  *\n*   *\n  *\n");
  CHECK(run({"heap", "--word", "2 1 3 2", "--mask", "(1,0,0,1)"}).out == "  X\no   o\n  x\n");
  CHECK(run({"--format", "csv", "heap", "--word", "1 2"}).out == "position,column,level\n1,1,0\n2,2,1\n");
  CHECK(run({"--format", "json", "heap", "--word", "2 1 3 2"}).out ==
        "{\"word\":[2,1,3,2],\"points\":[[2,0],[1,1],[3,1],[2,2]],\"components\":[[1,2,3,4]]}\n");
  CHECK(run({"--format", "json", "heap", "--word", "2 1 3 2", "--mask", "(1,0,0,0)"}).out ==
        "{\"word\":[2,1,3,2],\"points\":[[2,0],[1,1],[3,1],[2,2]],\"components\":[[1,2,3,4]],"
        "\"mask\":\"(1,0,0,0)\",\"defects\":[4]}\n");
  CHECK(run({"heap", "--word", "1 2 1"}).code == 2);
  CHECK(run({"heap", "--word", "1 2", "--mask", "(1,2)"}).code == 2);
}

TEST_CASE("enum and its guard") {
  CHECK(run({"enum", "--n-max", "8", "--n-min", "7"}).out == "n\t321-avoiding\t321-hexagon-avoiding\n7\t429\t429\n8\t1430\t1426\n");
  CHECK(run({"enum", "--n-max", "14"}).code == 3);
  CHECK(run({"enum", "--n-max", "3", "--n-min", "4"}).code == 2);
}

TEST_CASE("verify") {
  const Result r = run({"verify", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("result: PASS") != std::string::npos);
  CHECK(run({"verify", "--n", "3"}).out.find("non-tight, mask sum differs from KL: 3,2,1\n") != std::string::npos);
  CHECK(run({"verify", "--n", "7"}).code == 3);
  CHECK(run({"verify", "--n", "5", "--sample", "10", "--seed", "3"}).code == 0);
}

TEST_CASE("resource guard on long words") {
  // The longest element of S_10 has 45 letters.
  CHECK(run({"masks", "--perm", "10,9,8,7,6,5,4,3,2,1"}).code == 3);
  std::string word;
  for (int k = 0; k < 21; ++k) word += "1 3 ";
  CHECK(run({"masks", "--word", word}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--format", "xml", "check", "2,1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("the cache file is written and reused") {
  const auto path = std::filesystem::temp_directory_path() / "klheap_cli_cache_test.jsonl";
  std::filesystem::remove(path);
  const Result first = run({"--cache", path.string(), "kl", "--perm", "3,4,1,2", "--oracle"});
  CHECK(first.code == 0);
  REQUIRE(std::filesystem::exists(path));
  std::ifstream in(path);
  std::stringstream saved;
  saved << in.rdbuf();
  CHECK(saved.str().find("{\"w\":\"3,4,1,2\",\"entries\":[") != std::string::npos);
  klheap::default_kl_store().clear();
  const Result second = run({"--cache", path.string(), "kl", "--perm", "3,4,1,2", "--oracle"});
  CHECK(second.out == first.out);
  std::filesystem::remove(path);
}

#include "klheap/enumerate.hpp"

#include <algorithm>
#include <thread>

#include "klheap/error.hpp"

namespace klheap {

std::uint64_t catalan(int n) {
  if (n < 0) throw DomainError("catalan of a negative number");
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    // C_{k+1} = C_k * 2(2k+1) / (k+2)
    c = c * static_cast<std::uint64_t>(2 * (2 * k + 1)) / static_cast<std::uint64_t>(k + 2);
  }
  return c;
}

namespace {

// A permutation avoids 321 iff its entries that are not left-to-right
// maxima increase. Such an entry must therefore be the smallest value not
// yet used; any other placement is a new maximum.
struct Generator {
  int n;
  const std::function<void(const Permutation&)>& visit;
  std::vector<int> line;
  std::vector<bool> used;

  void place(int value, int max_so_far) {
    line.push_back(value);
    used[static_cast<std::size_t>(value)] = true;
    extend(std::max(value, max_so_far));
    used[static_cast<std::size_t>(value)] = false;
    line.pop_back();
  }

  void extend(int max_so_far) {
    if (static_cast<int>(line.size()) == n) {
      visit(Permutation(line));
      return;
    }
    int smallest = 1;
    while (used[static_cast<std::size_t>(smallest)]) ++smallest;
    if (smallest < max_so_far) place(smallest, max_so_far);
    for (int v = max_so_far + 1; v <= n; ++v) place(v, max_so_far);
  }
};

}  // namespace

void for_each_321_avoiding(int n, const std::function<void(const Permutation&)>& visit,
                           const std::vector<int>& first_values) {
  if (n < 1) throw DomainError("rank must be at least 1");
  Generator gen{n, visit, {}, std::vector<bool>(static_cast<std::size_t>(n) + 1, false)};
  gen.line.reserve(static_cast<std::size_t>(n));
  if (first_values.empty()) {
    gen.extend(0);
    return;
  }
  for (int v : first_values) {
    if (v < 1 || v > n) throw DomainError("first value out of range");
    gen.place(v, 0);
  }
}

std::vector<Permutation> all_321_avoiding(int n) {
  std::vector<Permutation> out;
  for_each_321_avoiding(n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

EnumRow enumerate_rank(int n, unsigned jobs) {
  jobs = std::max(1u, std::min(jobs, static_cast<unsigned>(n)));
  std::vector<EnumRow> partial(jobs, EnumRow{n, 0, 0});
  auto work = [&](unsigned t) {
    std::vector<int> firsts;
    for (int v = 1 + static_cast<int>(t); v <= n; v += static_cast<int>(jobs)) firsts.push_back(v);
    for_each_321_avoiding(
        n,
        [&](const Permutation& p) {
          ++partial[t].count_321;
          if (is_hexagon_avoiding(p)) ++partial[t].count_321_hexagon;
        },
        firsts);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(work, t);
    for (auto& w : workers) w.join();
  }
  EnumRow total{n, 0, 0};
  for (const EnumRow& row : partial) {
    total.count_321 += row.count_321;
    total.count_321_hexagon += row.count_321_hexagon;
  }
  return total;
}

}  // namespace klheap

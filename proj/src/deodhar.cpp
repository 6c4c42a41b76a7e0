#include "klheap/deodhar.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "klheap/error.hpp"

namespace klheap {

namespace {

// Enumeration keys permutations by their one-line notation packed into
// bytes; each entry maps to a histogram indexed by defect count.
using PartialTable = std::unordered_map<std::string, std::vector<std::uint64_t>>;

void record(PartialTable& table, const std::string& key, std::size_t defects) {
  auto& hist = table[key];
  if (hist.size() <= defects) hist.resize(defects + 1, 0);
  ++hist[defects];
}

std::string identity_key(int n) {
  std::string key(static_cast<std::size_t>(n), '\0');
  for (int i = 0; i < n; ++i) key[static_cast<std::size_t>(i)] = static_cast<char>(i + 1);
  return key;
}

// Applies position `p` (0-based) of the word to a prefix state.
inline void step(std::string& perm, std::size_t& defects, int letter, bool keep) {
  auto& lo = perm[static_cast<std::size_t>(letter - 1)];
  auto& hi = perm[static_cast<std::size_t>(letter)];
  if (static_cast<unsigned char>(lo) > static_cast<unsigned char>(hi)) ++defects;
  if (keep) std::swap(lo, hi);
}

// Enumerates every mask whose first `fixed` bits equal `prefix`.
void walk_naive(const Word& word, std::size_t fixed, std::uint64_t prefix, PartialTable& out) {
  auto letters = word.letters();
  const std::size_t r = letters.size();
  std::string base = identity_key(word.rank());
  std::size_t base_defects = 0;
  for (std::size_t p = 0; p < fixed; ++p) step(base, base_defects, letters[p], (prefix >> p) & 1u);
  const std::uint64_t count = std::uint64_t{1} << (r - fixed);
  for (std::uint64_t m = 0; m < count; ++m) {
    std::string perm = base;
    std::size_t defects = base_defects;
    for (std::size_t p = fixed; p < r; ++p) step(perm, defects, letters[p], (m >> (p - fixed)) & 1u);
    record(out, perm, defects);
  }
}

// Gray-code walk over the free bits. Free bit g drives word position
// r-1-g, so the most frequently flipped bit touches only the last letter.
// states[p] holds the product and defect count before position p; flipping
// position p invalidates states[p+1..r] only.
void walk_gray(const Word& word, std::size_t fixed, std::uint64_t prefix, PartialTable& out) {
  auto letters = word.letters();
  const std::size_t r = letters.size();
  std::vector<std::string> perms(r + 1);
  std::vector<std::size_t> defects(r + 1, 0);
  std::vector<std::uint8_t> bits(r, 0);
  for (std::size_t p = 0; p < fixed; ++p) bits[p] = static_cast<std::uint8_t>((prefix >> p) & 1u);
  perms[0] = identity_key(word.rank());
  auto rebuild_from = [&](std::size_t p) {
    for (std::size_t k = p; k < r; ++k) {
      perms[k + 1] = perms[k];
      defects[k + 1] = defects[k];
      step(perms[k + 1], defects[k + 1], letters[k], bits[k] != 0);
    }
  };
  rebuild_from(0);
  record(out, perms[r], defects[r]);
  const std::size_t free = r - fixed;
  const std::uint64_t count = std::uint64_t{1} << free;
  for (std::uint64_t t = 1; t < count; ++t) {
    const auto g = static_cast<std::size_t>(std::countr_zero(t));
    const std::size_t p = r - 1 - g;
    bits[p] ^= 1u;
    rebuild_from(p);
    record(out, perms[r], defects[r]);
  }
}

DeodharTable to_table(const PartialTable& partial) {
  DeodharTable table;
  for (const auto& [key, hist] : partial) {
    std::vector<int> images(key.begin(), key.end());
    std::vector<Coeff> coeffs(hist.begin(), hist.end());
    table.emplace(Permutation(std::move(images)), QPoly(std::move(coeffs)));
  }
  return table;
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

}  // namespace

DefectRecord defect_set(const Word& word, const Mask& mask) {
  if (mask.size() != word.size()) {
    throw DomainError("mask length " + std::to_string(mask.size()) + " does not match word length " +
                      std::to_string(word.size()));
  }
  DefectRecord out;
  std::vector<int> x(static_cast<std::size_t>(word.rank()));
  std::iota(x.begin(), x.end(), 1);
  for (std::size_t j = 1; j <= word.size(); ++j) {
    const int i = word.at(j);
    auto& lo = x[static_cast<std::size_t>(i - 1)];
    auto& hi = x[static_cast<std::size_t>(i)];
    if (lo > hi) {
      out.defects.push_back(j);
      (mask.at(j) ? out.one_defects : out.zero_defects).push_back(j);
    }
    if (mask.at(j)) std::swap(lo, hi);
  }
  out.product = Permutation(std::move(x));
  return out;
}

DeodharTable deodhar_table(const Word& word, const EnumerationOptions& options) {
  const std::size_t r = word.size();
  if (r > kMaxMaskWordLength) {
    throw ResourceError("word has " + std::to_string(r) + " letters; mask enumeration is limited to " +
                        std::to_string(kMaxMaskWordLength));
  }
  const auto walk = options.walk == MaskWalk::GrayCode ? walk_gray : walk_naive;
  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    PartialTable partial;
    walk(word, 0, 0, partial);
    return to_table(partial);
  }
  // Fix the first `fixed` mask bits per chunk; chunks are dealt round-robin.
  std::size_t fixed = 0;
  while (fixed < r && (std::uint64_t{1} << fixed) < 4ull * jobs) ++fixed;
  const std::uint64_t chunks = std::uint64_t{1} << fixed;
  std::vector<PartialTable> partials(jobs);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::uint64_t c = t; c < chunks; c += jobs) walk(word, fixed, c, partials[t]);
    });
  }
  for (auto& w : workers) w.join();
  DeodharTable table;
  for (const auto& partial : partials) merge_into(table, to_table(partial));
  return table;
}

QPoly deodhar_poly(const Word& word, const Permutation& x) {
  const DeodharTable table = deodhar_table(word);
  const Permutation target = x.size() < word.rank() ? x.extended(word.rank()) : x;
  if (target.size() != word.rank()) throw DomainError("rank mismatch between word and permutation");
  auto it = table.find(target);
  return it == table.end() ? QPoly() : it->second;
}

void merge_into(DeodharTable& into, const DeodharTable& from) {
  for (const auto& [x, poly] : from) {
    auto [it, inserted] = into.emplace(x, poly);
    if (!inserted) it->second += poly;
  }
}

bool degree_bound_holds(const Word& word, const DeodharTable& table) {
  const Permutation w = apply_word(word);
  const int lw = length(w);
  for (const auto& [x, poly] : table) {
    if (x == w) continue;
    if (2 * poly.degree() > lw - length(x) - 1) return false;
  }
  return true;
}

std::string HalfInteger::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

HalfInteger delta(const Word& word, const Mask& mask) {
  const DefectRecord rec = defect_set(word, mask);
  const Permutation w = apply_word(word);
  if (rec.product == w) throw DomainError("delta is undefined for masks evaluating to w");
  const long gap = static_cast<long>(length(w)) - length(rec.product) - 1;
  return HalfInteger{gap - 2 * static_cast<long>(rec.defects.size())};
}

CriticalZeros critical_zeros(const HeapEmbedding& heap, const Mask& mask, std::size_t defect) {
  const DefectRecord rec = defect_set(heap.word(), mask);
  if (!contains(rec.zero_defects, defect)) {
    throw DomainError("position " + std::to_string(defect) + " is not a D0 defect");
  }
  const HeapPoint apex = heap.point(defect);
  const std::size_t piece = heap.component_of(defect);
  CriticalZeros out{0, 0, defect};
  for (std::size_t a = 1; a < defect; ++a) {
    if (mask.at(a) || heap.component_of(a) != piece) continue;
    const HeapPoint p = heap.point(a);
    const int drop = apex.level - p.level;
    if (drop <= 0) continue;
    if (apex.column - p.column == drop) out.left = a;
    if (p.column - apex.column == drop) out.right = a;
  }
  if (out.left == 0 || out.right == 0) {
    throw InternalError("defect " + std::to_string(defect) + " has no " +
                        (out.left == 0 ? "left" : "right") + " critical zero");
  }
  return out;
}

CriticalZeros critical_zeros(const Word& word, const Mask& mask, std::size_t defect) {
  return critical_zeros(build_heap(word), mask, defect);
}

DefectGraph defect_graph(const HeapEmbedding& heap, const Mask& mask) {
  const DefectRecord rec = defect_set(heap.word(), mask);
  DefectGraph g;
  for (std::size_t j : rec.zero_defects) {
    g.vertices.push_back(j);
    g.zeros.push_back(critical_zeros(heap, mask, j));
  }
  auto triple = [](const CriticalZeros& z) { return std::array<std::size_t, 3>{z.left, z.right, z.middle}; };
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < g.vertices.size(); ++v) {
      bool shared = false;
      for (std::size_t a : triple(g.zeros[u])) {
        for (std::size_t b : triple(g.zeros[v])) shared = shared || a == b;
      }
      if (shared) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

DefectGraph defect_graph(const Word& word, const Mask& mask) { return defect_graph(build_heap(word), mask); }

bool is_forest(const DefectGraph& graph) {
  std::vector<std::size_t> parent(graph.vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : graph.edges) {
    const std::size_t ru = find(u);
    const std::size_t rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
  }
  return true;
}

bool recursion_check(const Word& word) {
  if (word.empty()) throw DomainError("recursion check needs a nonempty word");
  const int s = word.at(word.size());
  const DeodharTable full = deodhar_table(word);
  const DeodharTable truncated = deodhar_table(word.without_last());
  auto lookup = [](const DeodharTable& t, const Permutation& x) {
    auto it = t.find(x);
    return it == t.end() ? QPoly() : it->second;
  };
  std::set<Permutation> candidates;
  for (const auto& [x, _] : full) candidates.insert(x);
  for (const auto& [x, _] : truncated) {
    candidates.insert(x);
    candidates.insert(x.times_generator(s));
  }
  for (const Permutation& x : candidates) {
    const int c = x.has_right_descent(s) ? 1 : 0;
    const QPoly rhs = lookup(truncated, x).shifted(c) + lookup(truncated, x.times_generator(s)).shifted(1 - c);
    if (lookup(full, x) != rhs) return false;
  }
  return true;
}

}  // namespace klheap

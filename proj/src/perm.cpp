#include "klheap/perm.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>
#include <unordered_set>

#include "klheap/error.hpp"

namespace klheap {

namespace {

void require_same_rank(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DomainError("rank mismatch: S_" + std::to_string(a.size()) + " vs S_" +
                      std::to_string(b.size()));
  }
}

// Parses a signed decimal integer starting at text[pos]; advances pos.
int parse_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc{}) {
    throw ParseError("expected an integer", start);
  }
  pos = static_cast<std::size_t>(ptr - text.data());
  return value;
}

void skip_spaces(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("permutation must have rank >= 1");
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation of 1.." + std::to_string(size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation must have rank >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::generator(int n, int i) {
  if (i < 1 || i >= n) {
    throw DomainError("generator s_" + std::to_string(i) + " outside S_" + std::to_string(n));
  }
  return identity(n).times_generator(i);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k) + 1) return false;
  }
  return true;
}

bool Permutation::has_left_descent(int i) const {
  for (int v : images_) {
    if (v == i) return false;
    if (v == i + 1) return true;
  }
  return false;
}

Permutation Permutation::times_generator(int i) const {
  if (i < 1 || i >= size()) {
    throw DomainError("generator s_" + std::to_string(i) + " outside S_" + std::to_string(size()));
  }
  Permutation out = *this;
  std::swap(out.images_[static_cast<std::size_t>(i - 1)], out.images_[static_cast<std::size_t>(i)]);
  return out;
}

Permutation Permutation::generator_times(int i) const {
  if (i < 1 || i >= size()) {
    throw DomainError("generator s_" + std::to_string(i) + " outside S_" + std::to_string(size()));
  }
  Permutation out = *this;
  for (int& v : out.images_) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    out.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return out;
}

Permutation Permutation::extended(int m) const {
  if (m < size()) throw DomainError("cannot shrink a permutation");
  Permutation out = *this;
  for (int v = size() + 1; v <= m; ++v) out.images_.push_back(v);
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(images_[k]);
  }
  return out;
}

Permutation Permutation::parse(std::string_view text, int identity_rank) {
  std::size_t pos = 0;
  skip_spaces(text, pos);
  std::size_t end = text.size();
  while (end > pos && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  text = text.substr(0, end);
  if (text.substr(pos) == "e") {
    if (identity_rank < 1) throw ParseError("identity 'e' needs a known rank", pos);
    return identity(identity_rank);
  }
  bool bracketed = pos < text.size() && text[pos] == '[';
  if (bracketed) {
    if (text.back() != ']') throw ParseError("unterminated '['", text.size());
    ++pos;
    text.remove_suffix(1);
  }
  std::vector<int> images;
  while (true) {
    skip_spaces(text, pos);
    if (pos >= text.size()) throw ParseError("expected an integer", pos);
    const std::size_t at = pos;
    int v = parse_int(text, pos);
    if (v < 1) throw ParseError("permutation entries must be positive", at);
    images.push_back(v);
    skip_spaces(text, pos);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  try {
    return Permutation(std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 0);
  }
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

bool ShortLex::operator()(const Permutation& a, const Permutation& b) const {
  const int la = length(a);
  const int lb = length(b);
  if (la != lb) return la < lb;
  return a < b;
}

Word::Word(std::vector<int> letters, int n) : letters_(std::move(letters)), n_(n) {
  if (n_ < 1) throw DomainError("word rank must be >= 1");
  for (int i : letters_) {
    if (i < 1 || i >= n_) {
      throw DomainError("letter " + std::to_string(i) + " outside 1.." + std::to_string(n_ - 1));
    }
  }
}

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  int top = 0;
  for (int i : letters_) {
    if (i < 1) throw DomainError("letters must be >= 1");
    top = std::max(top, i);
  }
  n_ = top + 1;
}

Word Word::without_last() const {
  if (letters_.empty()) throw DomainError("empty word has no last letter");
  std::vector<int> shorter(letters_.begin(), letters_.end() - 1);
  return Word(std::move(shorter), n_);
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(letters_[k]);
  }
  return out;
}

Word Word::parse(std::string_view text, int n) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (true) {
    skip_spaces(text, pos);
    if (pos >= text.size()) break;
    const std::size_t at = pos;
    int i = parse_int(text, pos);
    if (i < 1) throw ParseError("generator indices must be >= 1", at);
    if (n > 0 && i >= n) {
      throw ParseError("generator index exceeds rank " + std::to_string(n), at);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected whitespace between letters", pos);
    }
    letters.push_back(i);
  }
  if (n > 0) return Word(std::move(letters), n);
  return Word(std::move(letters));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_rank(p, q);
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) images[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(images));
}

int length(const Permutation& p) {
  auto im = p.images();
  int inversions = 0;
  for (std::size_t i = 0; i < im.size(); ++i) {
    for (std::size_t j = i + 1; j < im.size(); ++j) {
      if (im[i] > im[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation apply_word(const Word& word) {
  std::vector<int> images(static_cast<std::size_t>(word.rank()));
  std::iota(images.begin(), images.end(), 1);
  for (int i : word.letters()) {
    std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
  }
  return Permutation(std::move(images));
}

bool is_reduced(const Word& word) {
  return length(apply_word(word)) == static_cast<int>(word.size());
}

Word canonical_reduced_word(const Permutation& p) {
  Permutation rest = p;
  std::vector<int> stripped;
  while (true) {
    int d = 0;
    for (int i = 1; i < rest.size(); ++i) {
      if (rest.has_right_descent(i)) {
        d = i;
        break;
      }
    }
    if (d == 0) break;
    stripped.push_back(d);
    rest = rest.times_generator(d);
  }
  std::reverse(stripped.begin(), stripped.end());
  return Word(std::move(stripped), p.size());
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  require_same_rank(x, w);
  const int n = x.size();
  // r[j] = #{a <= i : perm(a) >= j}, accumulated row by row.
  std::vector<int> rx(static_cast<std::size_t>(n + 2), 0);
  std::vector<int> rw(static_cast<std::size_t>(n + 2), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= x(i); ++j) ++rx[static_cast<std::size_t>(j)];
    for (int j = 1; j <= w(i); ++j) ++rw[static_cast<std::size_t>(j)];
    for (int j = 1; j <= n; ++j) {
      if (rx[static_cast<std::size_t>(j)] > rw[static_cast<std::size_t>(j)]) return false;
    }
  }
  return true;
}

namespace {

struct PatternPlan {
  std::vector<int> values;
  // For step d: index (< d) of the chosen entry whose pattern value is the
  // nearest below / above values[d], or -1.
  std::vector<int> below;
  std::vector<int> above;
};

PatternPlan plan_pattern(const Permutation& pattern) {
  PatternPlan plan;
  auto im = pattern.images();
  plan.values.assign(im.begin(), im.end());
  const int k = pattern.size();
  plan.below.assign(static_cast<std::size_t>(k), -1);
  plan.above.assign(static_cast<std::size_t>(k), -1);
  for (int d = 0; d < k; ++d) {
    int best_below = 0;
    int best_above = k + 1;
    for (int e = 0; e < d; ++e) {
      const int v = plan.values[static_cast<std::size_t>(e)];
      const int target = plan.values[static_cast<std::size_t>(d)];
      if (v < target && v > best_below) {
        best_below = v;
        plan.below[static_cast<std::size_t>(d)] = e;
      }
      if (v > target && v < best_above) {
        best_above = v;
        plan.above[static_cast<std::size_t>(d)] = e;
      }
    }
  }
  return plan;
}

bool match_from(std::span<const int> host, const PatternPlan& plan, std::vector<int>& chosen,
                std::size_t next_position) {
  const std::size_t d = chosen.size();
  const std::size_t k = plan.values.size();
  if (d == k) return true;
  const int lo = plan.below[d] < 0 ? 0 : chosen[static_cast<std::size_t>(plan.below[d])];
  const int hi = plan.above[d] < 0 ? static_cast<int>(host.size()) + 1
                                   : chosen[static_cast<std::size_t>(plan.above[d])];
  if (hi - lo - 1 <= 0) return false;
  const std::size_t last = host.size() - (k - d);
  for (std::size_t p = next_position; p <= last; ++p) {
    const int v = host[p];
    if (v <= lo || v >= hi) continue;
    chosen.push_back(v);
    if (match_from(host, plan, chosen, p + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& host, const Permutation& pattern) {
  if (pattern.size() > host.size()) {
    throw DomainError("pattern of rank " + std::to_string(pattern.size()) +
                      " is longer than host of rank " + std::to_string(host.size()));
  }
  const PatternPlan plan = plan_pattern(pattern);
  std::vector<int> chosen;
  chosen.reserve(plan.values.size());
  return match_from(host.images(), plan, chosen, 0);
}

bool is_321_avoiding(const Permutation& w) {
  // A 321 occurrence exists iff some entry has a larger entry before it and
  // a smaller entry after it.
  auto im = w.images();
  const std::size_t n = im.size();
  std::vector<int> suffix_min(n + 1, static_cast<int>(n) + 1);
  for (std::size_t i = n; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], im[i]);
  int prefix_max = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (prefix_max > im[i] && suffix_min[i + 1] < im[i]) return false;
    prefix_max = std::max(prefix_max, im[i]);
  }
  return true;
}

std::span<const Permutation> hexagon_patterns() {
  static const std::array<Permutation, 4> patterns = {
      Permutation({4, 6, 7, 1, 8, 2, 3, 5}),
      Permutation({4, 6, 7, 8, 1, 2, 3, 5}),
      Permutation({5, 6, 7, 1, 8, 2, 3, 4}),
      Permutation({5, 6, 7, 8, 1, 2, 3, 4}),
  };
  return patterns;
}

bool is_hexagon_avoiding(const Permutation& w) {
  if (w.size() < 8) return true;
  for (const Permutation& p : hexagon_patterns()) {
    if (contains_pattern(w, p)) return false;
  }
  return true;
}

bool is_321_hexagon_avoiding(const Permutation& w) {
  return is_321_avoiding(w) && is_hexagon_avoiding(w);
}

bool lateral_convexity_check(const Word& word) {
  if (!is_reduced(word)) throw DomainError("lateral convexity needs a reduced word");
  auto letters = word.letters();
  for (std::size_t j = 0; j < letters.size(); ++j) {
    for (std::size_t k = j + 1; k < letters.size(); ++k) {
      if (letters[k] != letters[j]) continue;
      bool lower = false;
      bool upper = false;
      for (std::size_t m = j + 1; m < k; ++m) {
        lower = lower || letters[m] == letters[j] - 1;
        upper = upper || letters[m] == letters[j] + 1;
      }
      if (!lower || !upper) return false;
      break;  // later repeats are checked from position k
    }
  }
  return true;
}

std::vector<Permutation> all_below(const Permutation& w) {
  // Products of subwords of a prefix, extended one letter at a time.
  std::unordered_set<Permutation, PermutationHash> reached{Permutation::identity(w.size())};
  const Word word = canonical_reduced_word(w);
  for (int i : word.letters()) {
    std::vector<Permutation> grown;
    grown.reserve(reached.size());
    for (const Permutation& x : reached) grown.push_back(x.times_generator(i));
    reached.insert(grown.begin(), grown.end());
  }
  std::vector<Permutation> out(reached.begin(), reached.end());
  std::sort(out.begin(), out.end(), ShortLex{});
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace klheap

#pragma once

// Symmetric-group arithmetic on permutations in one-line notation.
//
// Everything here is 1-based: a permutation of rank n maps {1..n} to itself
// and generator s_i (1 <= i <= n-1) is the adjacent transposition (i, i+1).
// Right multiplication by s_i swaps the entries at positions i and i+1.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klheap {

class Permutation {
 public:
  /// Identity of rank 1.
  Permutation() : images_{1} {}
  /// Validates that `images` is a bijection on 1..n with n >= 1.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// The adjacent transposition s_i in S_n.
  static Permutation generator(int n, int i);

  int size() const noexcept { return static_cast<int>(images_.size()); }
  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  /// True iff l(w s_i) < l(w), i.e. w(i) > w(i+1).
  bool has_right_descent(int i) const {
    return images_[static_cast<std::size_t>(i - 1)] > images_[static_cast<std::size_t>(i)];
  }
  /// True iff l(s_i w) < l(w), i.e. i+1 appears before i in one-line notation.
  bool has_left_descent(int i) const;

  /// w * s_i.
  Permutation times_generator(int i) const;
  /// s_i * w.
  Permutation generator_times(int i) const;
  Permutation inverse() const;
  /// Embeds into S_m (m >= n) by appending fixed points.
  Permutation extended(int m) const;

  /// "3,4,5,1,2"
  std::string to_string() const;
  /// Parses "3,4,5,1,2". The literal "e" denotes the identity of rank
  /// `identity_rank` (which must then be >= 1).
  static Permutation parse(std::string_view text, int identity_rank = 0);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Orders by length first, then lexicographically by one-line notation.
/// This is the output order used by every table and listing.
struct ShortLex {
  bool operator()(const Permutation& a, const Permutation& b) const;
};

/// A sequence of generator indices in S_n.
class Word {
 public:
  Word() = default;
  /// Every letter must lie in 1..n-1.
  Word(std::vector<int> letters, int n);
  /// Uses the smallest rank that contains every letter.
  explicit Word(std::vector<int> letters);

  int rank() const noexcept { return n_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// 1-based letter access, matching word positions 1..r.
  int at(std::size_t position) const { return letters_[position - 1]; }
  std::span<const int> letters() const noexcept { return letters_; }

  /// The word with its last letter removed.
  Word without_last() const;

  /// "2 1 3 2 4 3"
  std::string to_string() const;
  /// Parses space-separated indices. `n` of 0 infers the rank.
  static Word parse(std::string_view text, int n = 0);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
  int n_ = 1;
};

/// p∘q, (p∘q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);
/// Number of inversions.
int length(const Permutation& p);
/// s_{i_1} ··· s_{i_r} in S_{word.rank()}.
Permutation apply_word(const Word& word);
bool is_reduced(const Word& word);

/// Strips the smallest right descent repeatedly and reverses the letters.
Word canonical_reduced_word(const Permutation& p);

/// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Permutation& x, const Permutation& w);

bool contains_pattern(const Permutation& host, const Permutation& pattern);
bool is_321_avoiding(const Permutation& w);
/// Avoids the four hexagon patterns. Vacuously true below rank 8.
bool is_hexagon_avoiding(const Permutation& w);
bool is_321_hexagon_avoiding(const Permutation& w);
/// The four rank-8 patterns whose avoidance defines hexagon-avoidance.
std::span<const Permutation> hexagon_patterns();

/// Every two occurrences of a letter i are separated by both an i-1 and an
/// i+1. Throws DomainError on a non-reduced word.
bool lateral_convexity_check(const Word& word);

/// The Bruhat interval [e, w], sorted by ShortLex.
std::vector<Permutation> all_below(const Permutation& w);

/// All of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace klheap

template <>
struct std::hash<klheap::Permutation> {
  std::size_t operator()(const klheap::Permutation& p) const noexcept {
    return klheap::PermutationHash{}(p);
  }
};

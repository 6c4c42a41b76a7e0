#pragma once

// The Iwahori-Hecke algebra of S_n over Z[v, v^-1], q = v^2, and an
// independent Kazhdan-Lusztig oracle built from the C' basis recursion.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "klheap/perm.hpp"
#include "klheap/qpoly.hpp"

namespace klheap {

/// Σ α_x T_x with zero coefficients pruned.
class HeckeElement {
 public:
  using Terms = std::unordered_map<Permutation, HalfLaurent>;

  explicit HeckeElement(int n = 1) : n_(n) {}
  /// c · T_x
  static HeckeElement basis(const Permutation& x, const HalfLaurent& c = 1);

  int rank() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  HalfLaurent coeff(const Permutation& x) const;
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Permutation& x, const HalfLaurent& c);
  HeckeElement& operator+=(const HeckeElement& other);
  HeckeElement& operator-=(const HeckeElement& other);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  HeckeElement scaled(const HalfLaurent& c) const;

  /// Terms sorted by ShortLex, e.g. "(v^-1)T[1,2,3] + (v^-1)T[2,1,3]".
  std::string to_string() const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  Terms terms_;
};

/// h · T_s
HeckeElement t_mul_gen(const HeckeElement& h, int s);
/// h · T_s^{-1}
HeckeElement t_inverse_mul_gen(const HeckeElement& h, int s);
/// h · C'_s = v^{-1} (h + h T_s)
HeckeElement c_prime_mul_gen(const HeckeElement& h, int s);
/// General product, expanding each T_y of the right factor along a reduced word.
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

/// The ring involution v -> v^{-1}, T_x -> (T_{x^{-1}})^{-1}.
HeckeElement bar_element(const HeckeElement& h);

/// C'_s = v^{-1}(T_e + T_s) in the Hecke algebra of S_n.
HeckeElement c_prime_s(int n, int s);

struct KLTable {
  Permutation w;
  /// P_{x,w} for every x <= w.
  std::map<Permutation, QPoly, ShortLex> entries;

  /// Zero for x not below w.
  QPoly at(const Permutation& x) const;
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}; zero if that is not an
  /// integer exponent or x is not below w.
  Coeff mu(const Permutation& x) const;

  friend bool operator==(const KLTable&, const KLTable&) = default;
};

/// C'_w = v^{-l(w)} Σ_x P_{x,w}(v^2) T_x.
HeckeElement c_prime(const KLTable& table);

/// Memoized KL tables. Readers share a lock; inserting a finished table
/// takes it exclusively, so several threads may compute at once.
class KLStore {
 public:
  /// With `check_bar`, ι(C'_w) = C'_w is asserted for every new table of
  /// rank <= kBarCheckMaxRank. Degree bounds and P_{w,w} = 1 are always
  /// asserted.
  explicit KLStore(bool check_bar = true) : check_bar_(check_bar) {}

  static constexpr int kBarCheckMaxRank = 5;

  std::shared_ptr<const KLTable> table(const Permutation& w);
  std::size_t size() const;
  void clear();

  /// One JSON object per line: {"w":..., "entries":[{"x":..., "poly":{"coeffs":[...]}}]}.
  /// Lines are sorted by ShortLex order of w.
  void save(std::ostream& out) const;
  /// Merges tables from `in`; returns the number read. Throws Error on
  /// malformed lines and InternalError on tables violating P_{w,w} = 1.
  std::size_t load(std::istream& in);
  void save_file(const std::filesystem::path& path) const;
  std::size_t load_file(const std::filesystem::path& path);

 private:
  std::shared_ptr<const KLTable> find(const Permutation& w) const;
  std::shared_ptr<const KLTable> compute(const Permutation& w);

  bool check_bar_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Permutation, std::shared_ptr<const KLTable>> tables_;
};

/// The process-wide store used by the free functions below.
KLStore& default_kl_store();

KLTable kl_table(const Permutation& w);
/// JSON line for one table, the cache format.
std::string kl_table_json(const KLTable& table);

/// C'_w equals the product of C'_s along a reduced word of w.
bool is_tight(const Permutation& w);
/// Σ_{x <= w} q^{l(x)} P_{x,w}.
QPoly poincare_ih(const Permutation& w);
bool is_bar_invariant(const HeckeElement& h);

}  // namespace klheap

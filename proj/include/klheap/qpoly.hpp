#pragma once

// Exact polynomial arithmetic.
//
// QPoly is an element of Z[q]. HalfLaurent is a Laurent polynomial in
// v = q^{1/2}, the coefficient ring used by the Hecke algebra. All
// coefficient arithmetic is on 64-bit integers with overflow checks; an
// overflow throws std::overflow_error rather than wrapping.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace klheap {

using Coeff = std::int64_t;

/// Degree of the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

class QPoly {
 public:
  QPoly() = default;
  QPoly(Coeff constant);  // NOLINT: implicit so that `1` reads as the unit
  /// coeffs[d] is the coefficient of q^d. Trailing zeros are trimmed.
  explicit QPoly(std::vector<Coeff> coeffs);
  static QPoly monomial(Coeff c, int degree);
  /// (1+q)^k
  static QPoly one_plus_q_power(int k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return coeffs_.empty() ? kDegreeOfZero : static_cast<int>(coeffs_.size()) - 1;
  }
  Coeff coeff_at(int d) const noexcept;
  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  Coeff evaluate(Coeff q) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  QPoly operator-() const;
  /// Multiplies by q^k, k >= 0.
  QPoly shifted(int k) const;

  /// Ascending powers: "1+2q+q^2", "0" for zero, "-q^3" for -q^3.
  std::string to_string() const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// Laurent polynomial in v with v^2 = q.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(Coeff constant);  // NOLINT
  static HalfLaurent monomial(Coeff c, int v_exponent);
  /// P(q) rewritten as P(v^2).
  static HalfLaurent from_qpoly(const QPoly& p);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Coeff coeff_at(int v_exponent) const noexcept;
  /// Smallest / largest exponent with a nonzero coefficient. Undefined on zero.
  int low_exponent() const noexcept { return low_; }
  int high_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }

  /// The involution v -> v^{-1}.
  HalfLaurent bar() const;
  /// Multiplies by v^k.
  HalfLaurent shifted(int k) const;

  HalfLaurent& operator+=(const HalfLaurent& other);
  HalfLaurent& operator-=(const HalfLaurent& other);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  HalfLaurent operator-() const;

  /// Inverse of from_qpoly after multiplying by v^k: returns P with
  /// v^k * (*this) = P(v^2), or throws InternalError if no such P exists.
  QPoly to_qpoly_after_shift(int k) const;

  /// "v^-1+2v" style, ascending exponents.
  std::string to_string() const;

  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

 private:
  void trim();
  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

/// F_n(q) = F_{n-1}(q) + q F_{n-2}(q), F_0 = F_1 = 1, F_n = 0 for n < 0.
QPoly q_fibonacci(int n);

/// A polynomial in an auxiliary variable z with Z[q] coefficients;
/// element k multiplies z^k.
using ZPoly = std::vector<QPoly>;

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);

/// Coefficient of z^k in the power series numerator / denominator. The
/// constant term of the denominator must be +1 or -1.
QPoly rational_series_coeff(const ZPoly& numerator, const ZPoly& denominator, int k);

/// Numerator and (expanded) denominator of the generating function whose
/// z^m coefficient is P_{e,w} for the 3-row diamond heap with m columns.
struct SeriesFraction {
  ZPoly numerator;
  ZPoly denominator;
};
const SeriesFraction& three_row_diamond_series();

}  // namespace klheap

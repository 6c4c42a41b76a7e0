#include "klheap/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "klheap/error.hpp"

namespace klheap {

Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("coefficient overflow");
  return out;
}

namespace {

Coeff checked_neg(Coeff a) {
  if (a == std::numeric_limits<Coeff>::min()) throw std::overflow_error("coefficient overflow");
  return -a;
}

// Appends "c" times a power label to out, as part of a sum.
void append_term(std::string& out, Coeff c, const std::string& power) {
  if (c == 0) return;
  if (!out.empty()) out += c < 0 ? "-" : "+";
  else if (c < 0) out += "-";
  const Coeff mag = c < 0 ? -c : c;
  if (power.empty()) {
    out += std::to_string(mag);
  } else {
    if (mag != 1) out += std::to_string(mag);
    out += power;
  }
}

}  // namespace

QPoly::QPoly(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPoly::QPoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(Coeff c, int degree) {
  if (degree < 0) throw DomainError("QPoly monomials need a non-negative degree");
  std::vector<Coeff> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return QPoly(std::move(coeffs));
}

QPoly QPoly::one_plus_q_power(int k) {
  QPoly out(1);
  const QPoly factor(std::vector<Coeff>{1, 1});
  for (int i = 0; i < k; ++i) out = out * factor;
  return out;
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff QPoly::coeff_at(int d) const noexcept {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Coeff QPoly::evaluate(Coeff q) const {
  Coeff acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, q), *it);
  }
  return acc;
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t d = 0; d < other.coeffs_.size(); ++d) {
    coeffs_[d] = checked_add(coeffs_[d], other.coeffs_[d]);
  }
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) { return *this += -other; }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return QPoly(std::move(out));
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (Coeff& c : out.coeffs_) c = checked_neg(c);
  return out;
}

QPoly QPoly::shifted(int k) const {
  if (k < 0) throw DomainError("QPoly shift must be non-negative");
  if (is_zero()) return {};
  std::vector<Coeff> out(static_cast<std::size_t>(k), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(out));
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    std::string power;
    if (d == 1) power = "q";
    if (d > 1) power = "q^" + std::to_string(d);
    append_term(out, coeffs_[d], power);
  }
  return out;
}

HalfLaurent::HalfLaurent(Coeff constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

HalfLaurent HalfLaurent::monomial(Coeff c, int v_exponent) {
  HalfLaurent out;
  if (c == 0) return out;
  out.low_ = v_exponent;
  out.coeffs_.push_back(c);
  return out;
}

HalfLaurent HalfLaurent::from_qpoly(const QPoly& p) {
  HalfLaurent out;
  if (p.is_zero()) return out;
  out.coeffs_.assign(2 * p.coeffs().size() - 1, 0);
  for (std::size_t d = 0; d < p.coeffs().size(); ++d) out.coeffs_[2 * d] = p.coeffs()[d];
  out.trim();
  return out;
}

void HalfLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

Coeff HalfLaurent::coeff_at(int v_exponent) const noexcept {
  const int idx = v_exponent - low_;
  if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

HalfLaurent HalfLaurent::bar() const {
  HalfLaurent out;
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.low_ = -high_exponent();
  return out;
}

HalfLaurent HalfLaurent::shifted(int k) const {
  HalfLaurent out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const int lo = std::min(low_, other.low_);
  const int hi = std::max(high_exponent(), other.high_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    Coeff& slot = coeffs_[static_cast<std::size_t>(other.low_ - low_) + i];
    slot = checked_add(slot, other.coeffs_[i]);
  }
  trim();
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& other) { return *this += -other; }

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out.coeffs_[i + j] = checked_add(out.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  out.trim();
  return out;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent out = *this;
  for (Coeff& c : out.coeffs_) c = checked_neg(c);
  return out;
}

QPoly HalfLaurent::to_qpoly_after_shift(int k) const {
  if (is_zero()) return {};
  const int lo = low_ + k;
  if (lo < 0) throw InternalError("negative power of q in " + to_string());
  std::vector<Coeff> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = lo + static_cast<int>(i);
    if (coeffs_[i] == 0) continue;
    if (e % 2 != 0) throw InternalError("odd power of v in " + to_string());
    const auto d = static_cast<std::size_t>(e / 2);
    if (out.size() <= d) out.resize(d + 1, 0);
    out[d] = coeffs_[i];
  }
  return QPoly(std::move(out));
}

std::string HalfLaurent::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    std::string power;
    if (e == 1) power = "v";
    if (e != 0 && e != 1) power = "v^" + std::to_string(e);
    append_term(out, coeffs_[i], power);
  }
  return out;
}

QPoly q_fibonacci(int n) {
  if (n < 0) return {};
  QPoly prev(1);  // F_{k-1}
  QPoly cur(1);   // F_k
  const QPoly q = QPoly::monomial(1, 1);
  for (int k = 1; k < n; ++k) {
    QPoly next = cur + q * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

QPoly rational_series_coeff(const ZPoly& numerator, const ZPoly& denominator, int k) {
  if (k < 0) return {};
  const QPoly lead = denominator.empty() ? QPoly() : denominator.front();
  if (lead != QPoly(1) && lead != QPoly(-1)) {
    throw DomainError("denominator constant term must be a unit (+1 or -1)");
  }
  auto term = [](const ZPoly& p, int i) -> QPoly {
    return i < static_cast<int>(p.size()) ? p[static_cast<std::size_t>(i)] : QPoly();
  };
  // series[i] = (num_i - sum_{t>=1} den_t series[i-t]) / den_0
  std::vector<QPoly> series;
  series.reserve(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    QPoly acc = term(numerator, i);
    for (int t = 1; t <= i && t < static_cast<int>(denominator.size()); ++t) {
      acc -= denominator[static_cast<std::size_t>(t)] * series[static_cast<std::size_t>(i - t)];
    }
    series.push_back(lead == QPoly(1) ? acc : -acc);
  }
  return series.back();
}

const SeriesFraction& three_row_diamond_series() {
  static const SeriesFraction fraction = [] {
    auto q = [](Coeff c, int d) { return QPoly::monomial(c, d); };
    // -1 + q^2 z^2 + q^3 z^3
    ZPoly numerator{QPoly(-1), QPoly(), q(1, 2), q(1, 3)};
    // 1 + q z + q^2 z^2
    ZPoly first{QPoly(1), q(1, 1), q(1, 2)};
    // -1 + (1+q) z + (q+q^2) z^2 + q^2 z^3 - q^4 z^4
    ZPoly second{QPoly(-1), QPoly(std::vector<Coeff>{1, 1}), QPoly(std::vector<Coeff>{0, 1, 1}),
                 q(1, 2), q(-1, 4)};
    return SeriesFraction{std::move(numerator), zpoly_mul(first, second)};
  }();
  return fraction;
}

}  // namespace klheap

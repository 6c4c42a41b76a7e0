#include "klheap/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "klheap/error.hpp"

namespace klheap {

using ordered_json = nlohmann::ordered_json;

HeckeElement HeckeElement::basis(const Permutation& x, const HalfLaurent& c) {
  HeckeElement h(x.size());
  h.add(x, c);
  return h;
}

HalfLaurent HeckeElement::coeff(const Permutation& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? HalfLaurent() : it->second;
}

void HeckeElement::add(const Permutation& x, const HalfLaurent& c) {
  if (c.is_zero()) return;
  if (x.size() != n_) throw DomainError("Hecke element of rank " + std::to_string(n_) + " given T_" + x.to_string());
  auto [it, inserted] = terms_.emplace(x, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& other) {
  for (const auto& [x, c] : other.terms_) add(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& other) {
  for (const auto& [x, c] : other.terms_) add(x, -c);
  return *this;
}

HeckeElement HeckeElement::scaled(const HalfLaurent& c) const {
  HeckeElement out(n_);
  for (const auto& [x, a] : terms_) out.add(x, a * c);
  return out;
}

std::string HeckeElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<Permutation> keys;
  for (const auto& [x, _] : terms_) keys.push_back(x);
  std::sort(keys.begin(), keys.end(), ShortLex{});
  std::string out;
  for (const Permutation& x : keys) {
    if (!out.empty()) out += " + ";
    out += "(" + terms_.at(x).to_string() + ")T[" + x.to_string() + "]";
  }
  return out;
}

namespace {

void check_generator(int n, int s) {
  if (s < 1 || s >= n) {
    throw DomainError("generator s_" + std::to_string(s) + " is outside S_" + std::to_string(n));
  }
}

}  // namespace

HeckeElement t_mul_gen(const HeckeElement& h, int s) {
  check_generator(h.rank(), s);
  HeckeElement out(h.rank());
  for (const auto& [x, c] : h.terms()) {
    const Permutation xs = x.times_generator(s);
    if (!x.has_right_descent(s)) {
      out.add(xs, c);
    } else {
      // T_x T_s = (q-1) T_x + q T_{xs} when xs < x.
      out.add(x, c.shifted(2) - c);
      out.add(xs, c.shifted(2));
    }
  }
  return out;
}

HeckeElement t_inverse_mul_gen(const HeckeElement& h, int s) {
  check_generator(h.rank(), s);
  HeckeElement out(h.rank());
  for (const auto& [x, c] : h.terms()) {
    const Permutation xs = x.times_generator(s);
    if (x.has_right_descent(s)) {
      out.add(xs, c);
    } else {
      // T_x T_s^{-1} = q^{-1} T_{xs} + (q^{-1} - 1) T_x when xs > x.
      out.add(xs, c.shifted(-2));
      out.add(x, c.shifted(-2) - c);
    }
  }
  return out;
}

HeckeElement c_prime_mul_gen(const HeckeElement& h, int s) {
  return (h + t_mul_gen(h, s)).scaled(HalfLaurent::monomial(1, -1));
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.rank() != b.rank()) throw DomainError("Hecke elements of different rank");
  HeckeElement out(a.rank());
  for (const auto& [y, c] : b.terms()) {
    HeckeElement part = a;
    const Word word = canonical_reduced_word(y);
    for (int s : word.letters()) part = t_mul_gen(part, s);
    out += part.scaled(c);
  }
  return out;
}

HeckeElement bar_element(const HeckeElement& h) {
  // (T_{x^{-1}})^{-1} = T_{s_1}^{-1} ··· T_{s_k}^{-1} for a reduced word
  // s_1···s_k of x; built by peeling a right descent and memoized.
  std::unordered_map<Permutation, HeckeElement> inverse_of;
  auto inverse_t = [&](auto&& self, const Permutation& x) -> const HeckeElement& {
    if (auto it = inverse_of.find(x); it != inverse_of.end()) return it->second;
    HeckeElement value(x.size());
    if (x.is_identity()) {
      value = HeckeElement::basis(x);
    } else {
      int s = 1;
      while (!x.has_right_descent(s)) ++s;
      value = t_inverse_mul_gen(self(self, x.times_generator(s)), s);
    }
    return inverse_of.emplace(x, std::move(value)).first->second;
  };
  HeckeElement out(h.rank());
  for (const auto& [x, c] : h.terms()) out += inverse_t(inverse_t, x).scaled(c.bar());
  return out;
}

HeckeElement c_prime_s(int n, int s) {
  check_generator(n, s);
  HeckeElement h(n);
  h.add(Permutation::identity(n), HalfLaurent::monomial(1, -1));
  h.add(Permutation::generator(n, s), HalfLaurent::monomial(1, -1));
  return h;
}

QPoly KLTable::at(const Permutation& x) const {
  auto it = entries.find(x);
  return it == entries.end() ? QPoly() : it->second;
}

Coeff KLTable::mu(const Permutation& x) const {
  const int gap = length(w) - length(x) - 1;
  if (gap < 0 || gap % 2 != 0) return 0;
  return at(x).coeff_at(gap / 2);
}

HeckeElement c_prime(const KLTable& table) {
  const int lw = length(table.w);
  HeckeElement h(table.w.size());
  for (const auto& [x, p] : table.entries) h.add(x, HalfLaurent::from_qpoly(p).shifted(-lw));
  return h;
}

std::shared_ptr<const KLTable> KLStore::find(const Permutation& w) const {
  std::shared_lock lock(mutex_);
  auto it = tables_.find(w);
  return it == tables_.end() ? nullptr : it->second;
}

std::shared_ptr<const KLTable> KLStore::table(const Permutation& w) {
  if (auto hit = find(w)) return hit;
  auto fresh = compute(w);
  std::unique_lock lock(mutex_);
  return tables_.emplace(w, std::move(fresh)).first->second;
}

std::shared_ptr<const KLTable> KLStore::compute(const Permutation& w) {
  auto out = std::make_shared<KLTable>();
  out->w = w;
  const int n = w.size();
  if (w.is_identity()) {
    out->entries.emplace(w, QPoly(1));
    return out;
  }
  // C'_w = C'_v C'_s - Σ_{z < v, zs < z} μ(z, v) C'_z with v = ws < w.
  int s = 1;
  while (!w.has_right_descent(s)) ++s;
  const Permutation v = w.times_generator(s);
  const auto below = table(v);
  HeckeElement cw = c_prime_mul_gen(c_prime(*below), s);
  for (const auto& [z, p] : below->entries) {
    if (z == v || !z.has_right_descent(s)) continue;
    const Coeff m = below->mu(z);
    if (m != 0) cw -= c_prime(*table(z)).scaled(m);
  }

  const int lw = length(w);
  for (const auto& [x, c] : cw.terms()) out->entries.emplace(x, c.to_qpoly_after_shift(lw));
  if (out->at(w) != QPoly(1)) throw InternalError("P_{w,w} != 1 for w = " + w.to_string());
  for (const auto& [x, p] : out->entries) {
    if (x != w && 2 * p.degree() > lw - length(x) - 1) {
      throw InternalError("degree bound fails for P_{" + x.to_string() + "," + w.to_string() + "}");
    }
  }
  if (check_bar_ && n <= kBarCheckMaxRank && !is_bar_invariant(cw)) {
    throw InternalError("C'_w is not bar-invariant for w = " + w.to_string());
  }
  return out;
}

std::size_t KLStore::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

void KLStore::clear() {
  std::unique_lock lock(mutex_);
  tables_.clear();
}

std::string kl_table_json(const KLTable& table) {
  ordered_json entries = ordered_json::array();
  for (const auto& [x, p] : table.entries) {
    ordered_json coeffs = ordered_json::array();
    for (Coeff c : p.coeffs()) coeffs.push_back(c);
    entries.push_back({{"x", x.to_string()}, {"poly", {{"coeffs", coeffs}}}});
  }
  ordered_json line = {{"w", table.w.to_string()}, {"entries", entries}};
  return line.dump();
}

void KLStore::save(std::ostream& out) const {
  std::vector<std::shared_ptr<const KLTable>> all;
  {
    std::shared_lock lock(mutex_);
    for (const auto& [_, t] : tables_) all.push_back(t);
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return ShortLex{}(a->w, b->w); });
  for (const auto& t : all) out << kl_table_json(*t) << '\n';
}

std::size_t KLStore::load(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fresh = std::make_shared<KLTable>();
    try {
      const auto doc = ordered_json::parse(line);
      fresh->w = Permutation::parse(doc.at("w").get<std::string>());
      for (const auto& entry : doc.at("entries")) {
        const Permutation x = Permutation::parse(entry.at("x").get<std::string>());
        if (x.size() != fresh->w.size()) throw DomainError("entry rank differs from w");
        fresh->entries.emplace(x, QPoly(entry.at("poly").at("coeffs").get<std::vector<Coeff>>()));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error("cache line " + std::to_string(line_no) + ": " + e.what());
    } catch (const DomainError& e) {
      throw Error("cache line " + std::to_string(line_no) + ": " + e.what());
    }
    if (fresh->at(fresh->w) != QPoly(1)) {
      throw InternalError("cache line " + std::to_string(line_no) + " has P_{w,w} != 1");
    }
    std::unique_lock lock(mutex_);
    tables_.insert_or_assign(fresh->w, std::move(fresh));
    ++count;
  }
  return count;
}

void KLStore::save_file(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write cache file " + path.string());
  save(out);
}

std::size_t KLStore::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  return load(in);
}

KLStore& default_kl_store() {
  static KLStore store;
  return store;
}

KLTable kl_table(const Permutation& w) { return *default_kl_store().table(w); }

bool is_tight(const Permutation& w) {
  const int n = w.size();
  HeckeElement product = HeckeElement::basis(Permutation::identity(n));
  const Word word = canonical_reduced_word(w);
  for (int s : word.letters()) product = c_prime_mul_gen(product, s);
  return product == c_prime(*default_kl_store().table(w));
}

QPoly poincare_ih(const Permutation& w) {
  QPoly out;
  const auto table = default_kl_store().table(w);
  for (const auto& [x, p] : table->entries) out += p.shifted(length(x));
  return out;
}

bool is_bar_invariant(const HeckeElement& h) { return bar_element(h) == h; }

}  // namespace klheap

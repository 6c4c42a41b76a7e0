#include "klheap/mask.hpp"

#include <cctype>

#include "klheap/error.hpp"

namespace klheap {

Mask::Mask(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1) throw DomainError("mask entries must be 0 or 1");
  }
}

Mask Mask::from_integer(std::uint64_t value, std::size_t length) {
  if (length > 64) throw DomainError("mask integers hold at most 64 positions");
  std::vector<std::uint8_t> bits(length);
  for (std::size_t j = 0; j < length; ++j) bits[j] = static_cast<std::uint8_t>((value >> j) & 1u);
  return Mask(std::move(bits));
}

Mask Mask::all_ones(std::size_t length) { return Mask(std::vector<std::uint8_t>(length, 1)); }

std::size_t Mask::zero_count() const noexcept {
  std::size_t zeros = 0;
  for (std::uint8_t b : bits_) zeros += b == 0 ? 1 : 0;
  return zeros;
}

std::uint64_t Mask::to_integer() const {
  if (bits_.size() > 64) throw DomainError("mask longer than 64 positions");
  std::uint64_t value = 0;
  for (std::size_t j = 0; j < bits_.size(); ++j) value |= static_cast<std::uint64_t>(bits_[j]) << j;
  return value;
}

Mask Mask::with(std::size_t position, bool value) const {
  Mask out = *this;
  out.bits_.at(position - 1) = value ? 1 : 0;
  return out;
}

std::string Mask::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (j) out += ',';
    out += bits_[j] ? '1' : '0';
  }
  out += ')';
  return out;
}

Mask Mask::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  const bool parenthesized = pos < text.size() && text[pos] == '(';
  if (parenthesized) ++pos;
  bool expect_bit = true;
  while (true) {
    skip();
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (c == ')' && parenthesized) {
      ++pos;
      skip();
      if (pos != text.size()) throw ParseError("trailing characters after ')'", pos);
      return Mask(std::move(bits));
    }
    if (expect_bit) {
      if (c != '0' && c != '1') throw ParseError("expected 0 or 1", pos);
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
      ++pos;
      expect_bit = false;
      // Bare bit strings like "110100" need no separators.
      if (!parenthesized && pos < text.size() && (text[pos] == '0' || text[pos] == '1')) {
        expect_bit = true;
      }
    } else {
      if (c != ',') throw ParseError("expected ','", pos);
      ++pos;
      expect_bit = true;
    }
  }
  if (parenthesized) throw ParseError("unterminated '('", text.size());
  if (expect_bit && !bits.empty()) throw ParseError("trailing ','", text.size());
  return Mask(std::move(bits));
}

}  // namespace klheap

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace klheap {

/// A 0/1 sequence σ_1..σ_r over a fixed word; σ_j = 1 keeps letter j.
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::vector<std::uint8_t> bits);
  /// Bit j of `value` is σ_{j+1}.
  static Mask from_integer(std::uint64_t value, std::size_t length);
  static Mask all_ones(std::size_t length);

  std::size_t size() const noexcept { return bits_.size(); }
  /// σ_j for 1 <= j <= r.
  bool at(std::size_t position) const { return bits_[position - 1] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::size_t zero_count() const noexcept;
  std::uint64_t to_integer() const;

  Mask with(std::size_t position, bool value) const;

  /// "(1,1,0,1)"
  std::string to_string() const;
  static Mask parse(std::string_view text);

  friend bool operator==(const Mask&, const Mask&) = default;
  /// Lexicographic on (σ_1, σ_2, ...).
  friend auto operator<=>(const Mask& a, const Mask& b) { return a.bits_ <=> b.bits_; }

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace klheap

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace hcnlab {

/// Fixed-length binary word x_1 x_2 ... x_n.
///
/// Position 1 is the leftmost bit. value() reads the word most-significant
/// bit first, so x_1 is the highest bit of the integer.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 32;

  /// Throws std::invalid_argument if length is outside [1, kMaxLength] or
  /// value has bits above the declared length.
  BinaryWord(int length, std::uint32_t value);

  static BinaryWord zeros(int length) { return BinaryWord(length, 0); }

  /// Parses a string of '0'/'1' characters, leftmost character is position 1.
  static BinaryWord parse(std::string_view bits);

  int length() const noexcept { return length_; }
  std::uint32_t value() const noexcept { return value_; }

  /// Bit at a 1-based position. Throws std::out_of_range.
  int bit(int position) const;

  BinaryWord complement() const noexcept;
  BinaryWord with_bit_flipped(int position) const;
  int popcount() const noexcept;
  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::uint32_t mask() const noexcept;

  int length_;
  std::uint32_t value_;
};

inline BinaryWord word_complement(const BinaryWord& w) noexcept {
  return w.complement();
}

/// Mask selecting 1-based position `position` of an n-bit word.
constexpr std::uint32_t position_mask(int n, int position) noexcept {
  return std::uint32_t{1} << (n - position);
}

}  // namespace hcnlab

#include "hcnlab/binary_word.hpp"

#include <bit>
#include <stdexcept>

namespace hcnlab {

BinaryWord::BinaryWord(int length, std::uint32_t value)
    : length_(length), value_(value) {
  if (length < 1 || length > kMaxLength) {
    throw std::invalid_argument("word length must be in [1, 32], got " +
                                std::to_string(length));
  }
  if ((value & ~mask()) != 0) {
    throw std::invalid_argument("word value has bits beyond length " +
                                std::to_string(length));
  }
}

BinaryWord BinaryWord::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxLength)) {
    throw std::invalid_argument("binary word must have 1..32 characters");
  }
  std::uint32_t value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word contains non-binary character '" +
                                  std::string(1, c) + "'");
    }
    value = (value << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BinaryWord(static_cast<int>(bits.size()), value);
}

std::uint32_t BinaryWord::mask() const noexcept {
  return length_ == 32 ? ~std::uint32_t{0}
                       : (std::uint32_t{1} << length_) - 1;
}

int BinaryWord::bit(int position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("bit position " + std::to_string(position) +
                            " outside word of length " +
                            std::to_string(length_));
  }
  return (value_ & position_mask(length_, position)) != 0 ? 1 : 0;
}

BinaryWord BinaryWord::complement() const noexcept {
  return BinaryWord(length_, ~value_ & mask());
}

BinaryWord BinaryWord::with_bit_flipped(int position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("bit position " + std::to_string(position) +
                            " outside word of length " +
                            std::to_string(length_));
  }
  return BinaryWord(length_, value_ ^ position_mask(length_, position));
}

int BinaryWord::popcount() const noexcept { return std::popcount(value_); }

std::string BinaryWord::to_string() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int p = 1; p <= length_; ++p) {
    if ((value_ & position_mask(length_, p)) != 0) {
      out[static_cast<std::size_t>(p - 1)] = '1';
    }
  }
  return out;
}

}  // namespace hcnlab

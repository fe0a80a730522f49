#include <gtest/gtest.h>

#include <stdexcept>

#include "hcnlab/binary_word.hpp"

namespace hcnlab {
namespace {

TEST(BinaryWord, ParsesLeftmostCharacterAsPositionOne) {
  const BinaryWord w = BinaryWord::parse("100");
  EXPECT_EQ(w.length(), 3);
  EXPECT_EQ(w.value(), 4u);
  EXPECT_EQ(w.bit(1), 1);
  EXPECT_EQ(w.bit(2), 0);
  EXPECT_EQ(w.bit(3), 0);
  EXPECT_EQ(w.to_string(), "100");
}

TEST(BinaryWord, ComplementFlipsEveryBit) {
  EXPECT_EQ(word_complement(BinaryWord::parse("00")), BinaryWord::parse("11"));
  EXPECT_EQ(word_complement(BinaryWord::parse("01")), BinaryWord::parse("10"));
  const BinaryWord w = BinaryWord::parse("101");
  EXPECT_EQ(word_complement(word_complement(w)), w);
  EXPECT_EQ(word_complement(w).length(), 3);
}

TEST(BinaryWord, ComplementIsAnInvolutionForEveryShortWord) {
  for (int n = 1; n <= 8; ++n) {
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      const BinaryWord w(n, v);
      EXPECT_EQ(w.complement().complement(), w);
      EXPECT_EQ(w.popcount() + w.complement().popcount(), n);
    }
  }
}

TEST(BinaryWord, EqualityNeedsSameLengthAndBits) {
  EXPECT_EQ(BinaryWord(3, 5), BinaryWord::parse("101"));
  EXPECT_NE(BinaryWord(3, 1), BinaryWord(2, 1));
  EXPECT_NE(BinaryWord(3, 1), BinaryWord(3, 2));
}

TEST(BinaryWord, FlipsOneBit) {
  const BinaryWord w = BinaryWord::parse("0000");
  EXPECT_EQ(w.with_bit_flipped(1).to_string(), "1000");
  EXPECT_EQ(w.with_bit_flipped(4).to_string(), "0001");
  EXPECT_EQ(position_mask(4, 1), 8u);
  EXPECT_EQ(position_mask(4, 4), 1u);
}

TEST(BinaryWord, RejectsMalformedInput) {
  EXPECT_THROW(BinaryWord(0, 0), std::invalid_argument);
  EXPECT_THROW(BinaryWord(33, 0), std::invalid_argument);
  EXPECT_THROW(BinaryWord(2, 4), std::invalid_argument);
  EXPECT_THROW(BinaryWord::parse(""), std::invalid_argument);
  EXPECT_THROW(BinaryWord::parse("012"), std::invalid_argument);
  EXPECT_THROW(BinaryWord::parse("01").bit(3), std::out_of_range);
  EXPECT_THROW(BinaryWord::parse("01").bit(0), std::out_of_range);
}

TEST(BinaryWord, ThirtyTwoBitWordsRoundTrip) {
  const BinaryWord w(32, 0xFFFFFFFFu);
  EXPECT_EQ(w.complement(), BinaryWord::zeros(32));
  EXPECT_EQ(w.to_string(), std::string(32, '1'));
}

}  // namespace
}  // namespace hcnlab

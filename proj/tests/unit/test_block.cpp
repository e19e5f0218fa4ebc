// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "diskenc/block.hpp"

using diskenc::Block;

TEST(Block, HexRoundTripIsBigEndian) {
  const Block b = Block::from_hex("000102030405060708090a0b0c0d0e0f");
  EXPECT_EQ(b.hi, 0x0001020304050607ull);
  EXPECT_EQ(b.lo, 0x08090a0b0c0d0e0full);
  EXPECT_EQ(b.to_hex(), "000102030405060708090a0b0c0d0e0f");
  EXPECT_EQ(Block::from_hex("FFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFF"), (Block{~0ull, ~0ull}));
}

TEST(Block, BinEncodingSitsInTheLowBytes) {
  const auto bytes = Block::from_integer(0x0102).bytes();
  for(std::size_t i = 0; i < 14; ++i) {
    EXPECT_EQ(bytes[i], 0);
  }
  EXPECT_EQ(bytes[14], 0x01);
  EXPECT_EQ(bytes[15], 0x02);
  EXPECT_EQ(Block::one(), Block::from_integer(1));
}

TEST(Block, LoadStoreInverse) {
  std::array<std::uint8_t, 16> raw{};
  for(std::size_t i = 0; i < raw.size(); ++i) {
    raw[i] = static_cast<std::uint8_t>(0xa0 + i);
  }
  const Block b = Block::load(raw);
  std::array<std::uint8_t, 16> back{};
  b.store(back);
  EXPECT_EQ(raw, back);
}

TEST(Block, FromHexRejectsBadInput) {
  EXPECT_THROW(Block::from_hex(""), std::invalid_argument);
  EXPECT_THROW(Block::from_hex("00"), std::invalid_argument);
  EXPECT_THROW(Block::from_hex(std::string(33, '0')), std::invalid_argument);
  EXPECT_THROW(Block::from_hex(std::string(31, '0') + "g"), std::invalid_argument);
}

TEST(Block, ByteHexHelpers) {
  EXPECT_EQ(diskenc::to_hex(std::vector<std::uint8_t>{0x00, 0xab, 0xff}), "00abff");
  EXPECT_EQ(diskenc::from_hex("00abFF"), (std::vector<std::uint8_t>{0x00, 0xab, 0xff}));
  EXPECT_TRUE(diskenc::from_hex("").empty());
  EXPECT_THROW(diskenc::from_hex("abc"), std::invalid_argument);
  EXPECT_THROW(diskenc::from_hex("zz"), std::invalid_argument);
}

TEST(Block, BlockVectorsCheckSizes) {
  std::vector<std::uint8_t> bytes(32);
  std::vector<Block> blocks(2);
  EXPECT_NO_THROW(diskenc::load_blocks(bytes, blocks));
  std::vector<Block> wrong(3);
  EXPECT_THROW(diskenc::load_blocks(bytes, wrong), std::invalid_argument);
  EXPECT_THROW(diskenc::store_blocks(wrong, bytes), std::invalid_argument);
}

TEST(Block, XorAndZero) {
  const Block a{1, 2};
  EXPECT_TRUE((a ^ a).is_zero());
  EXPECT_FALSE(a.is_zero());
  Block c = a;
  c ^= Block{1, 0};
  EXPECT_EQ(c, (Block{0, 2}));
}

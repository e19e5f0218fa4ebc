// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "counting_prf.hpp"
#include "diskenc/aez.hpp"
#include "diskenc/gf128.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using diskenc::AezContext;
using diskenc::Block;
using diskenc::MaskMode;
namespace gf = diskenc::gf128;

TEST(Aez, Masks) {
  gen::Rng rng;
  const Block key = rng.block();
  const auto E = oracle::aes(key);
  for(const auto mode : {MaskMode::Precomputed, MaskMode::OnTheFly}) {
    const AezContext ctx(key, mode);
    EXPECT_EQ(ctx.i_mask(), E.encrypt(Block::zero()));
    EXPECT_EQ(ctx.j_mask(), E.encrypt(Block::one()));
    EXPECT_TRUE(ctx.delta().is_zero());
    EXPECT_TRUE(ctx.i_offset(-1).is_zero());
    EXPECT_EQ(ctx.i_offset(0), ctx.i_mask());
    EXPECT_EQ(ctx.i_offset(1), gf::dbl(ctx.i_mask()));
    EXPECT_EQ(ctx.i_offset(2), gf::dbl(ctx.i_mask()) ^ ctx.i_mask());
    for(int j = 0; j <= 127; ++j) {
      EXPECT_EQ(ctx.j_offset(j), gf::scalar(static_cast<std::uint64_t>(j), ctx.j_mask())) << j;
    }
    EXPECT_EQ(ctx.j_table().has_value(), mode == MaskMode::Precomputed);
    EXPECT_THROW((void)ctx.i_offset(3), std::out_of_range);
    EXPECT_THROW((void)ctx.i_offset(-2), std::out_of_range);
    EXPECT_THROW((void)ctx.j_offset(128), std::out_of_range);
    EXPECT_THROW((void)ctx.j_offset(-1), std::out_of_range);
  }
}

TEST(Aez, JTableEntries) {
  gen::Rng rng;
  const AezContext ctx(rng.block(), MaskMode::Precomputed);
  const auto& table = *ctx.j_table();
  EXPECT_TRUE(table[0].is_zero());
  EXPECT_EQ(table[1], ctx.j_mask());
  EXPECT_EQ(table[127], gf::scalar(127, ctx.j_mask()));
}

TEST(Aez, ETildeDefinition) {
  gen::Rng rng;
  const Block key = rng.block();
  const auto E = oracle::aes(key);
  for(const auto mode : {MaskMode::Precomputed, MaskMode::OnTheFly}) {
    const AezContext ctx(key, mode);
    const Block I = ctx.i_mask(), J = ctx.j_mask();
    const Block b = rng.block();
    EXPECT_EQ(ctx.e_tilde(0, 0, b), E.encrypt(b ^ I));
    EXPECT_EQ(ctx.e_tilde(-1, 1, b), E.encrypt(b ^ J));
    const Block j86 = gf::scalar(64, J) ^ gf::scalar(16, J) ^ gf::scalar(4, J) ^ gf::scalar(2, J);
    EXPECT_EQ(ctx.e_tilde(1, 86, b), E.encrypt(b ^ gf::dbl(I) ^ j86));
    EXPECT_THROW(ctx.e_tilde(3, 0, b), std::out_of_range);
    EXPECT_THROW(ctx.e_tilde(0, 200, b), std::out_of_range);
  }
}

TEST(Aez, MatchesStraightLineOracle) {
  gen::Rng rng;
  for(int i = 0; i < 4; ++i) {
    const Block key = rng.block();
    const auto msg = rng.sector();
    const auto expect = oracle::aez_encrypt(key, msg);
    for(const auto mode : {MaskMode::Precomputed, MaskMode::OnTheFly}) {
      const auto ct = AezContext(key, mode).encrypt(msg);
      ASSERT_TRUE(std::equal(ct.begin(), ct.end(), expect.begin(), expect.end()));
    }
  }
}

TEST(Aez, PrfCalls) {
  gen::Rng rng;
  auto prf = std::make_shared<CountingPrf>(rng.block());
  const AezContext ctx(prf);
  EXPECT_EQ(prf->calls(), 2u);  // I and J
  prf->reset();
  const auto ct = ctx.encrypt(rng.bytes(4096));
  // 2*127 + 2 + 127 + 2*127 + 2
  EXPECT_EQ(prf->calls(), 639u);
  prf->reset();
  ctx.decrypt(ct);
  EXPECT_EQ(prf->calls(), 639u);
}

TEST(Aez, RoundTripBothDirections) {
  gen::Rng rng;
  for(const auto mode : {MaskMode::Precomputed, MaskMode::OnTheFly}) {
    const AezContext ctx(rng.block(), mode);
    for(int i = 0; i < 10; ++i) {
      const auto msg = rng.sector();
      const auto ct = ctx.encrypt(msg);
      const auto back = ctx.decrypt(ct);
      ASSERT_TRUE(std::equal(back.begin(), back.end(), msg.begin()));
      const auto y = rng.bytes(4096);
      const auto e = ctx.encrypt(ctx.decrypt(y));
      ASSERT_TRUE(std::equal(e.begin(), e.end(), y.begin()));
    }
  }
}

TEST(Aez, WrongSizeAndNullPrf) {
  const AezContext ctx(Block::one());
  EXPECT_THROW(ctx.encrypt(std::vector<std::uint8_t>(100)), std::invalid_argument);
  EXPECT_THROW(ctx.decrypt(std::vector<std::uint8_t>(8192)), std::invalid_argument);
  EXPECT_THROW(AezContext(std::shared_ptr<const diskenc::BlockFunction>{}), std::invalid_argument);
}

TEST(Aez, Diffusion) {
  gen::Rng rng;
  const AezContext ctx(rng.block());
  const auto msg = rng.bytes(4096);
  const auto ct = ctx.encrypt(msg);
  for(int i = 0; i < 128; ++i) {
    auto flipped = msg;
    const auto bit = rng.range(0, 4096 * 8 - 1);
    flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    const auto ct2 = ctx.encrypt(flipped);
    for(std::size_t b = 0; b < 256; ++b) {
      ASSERT_FALSE(std::equal(ct.begin() + 16 * b, ct.begin() + 16 * (b + 1), ct2.begin() + 16 * b))
          << "bit " << bit << " left block " << b << " unchanged";
    }
  }
}

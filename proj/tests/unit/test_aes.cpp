// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <set>

#include "diskenc/aes128.hpp"
#include "gen.hpp"
#include "oracles.hpp"

using diskenc::Block;

TEST(Aes128, Fips197AppendixC1) {
  const diskenc::Aes128 aes(Block::from_hex("000102030405060708090a0b0c0d0e0f"));
  EXPECT_EQ(aes.eval(Block::from_hex("00112233445566778899aabbccddeeff")).to_hex(),
            "69c4e0d86a7b0430d8cdb78070b4c55a");
}

TEST(Aes128, Fips197AppendixB) {
  const diskenc::Aes128 aes(Block::from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
  EXPECT_EQ(aes.eval(Block::from_hex("3243f6a8885a308d313198a2e0370734")).to_hex(),
            "3925841d02dc09fbdc118597196a0b32");
}

TEST(Aes128, KeyExpansionAppendixA1) {
  const auto raw = diskenc::from_hex("2b7e151628aed2a6abf7158809cf4f3c");
  const auto k = diskenc::expand_key(raw);
  EXPECT_EQ(k.round_keys[0].to_hex(), "2b7e151628aed2a6abf7158809cf4f3c");
  EXPECT_EQ(k.round_keys[1].to_hex(), "a0fafe1788542cb123a339392a6c7605");
  EXPECT_EQ(k.round_keys[10].to_hex(), "d014f9a8c9ee2589e13f0cc8b6630ca6");
  EXPECT_EQ(diskenc::expand_key(raw).round_keys, k.round_keys);
}

TEST(Aes128, ZeroKeyRoundKeyZero) {
  const std::vector<std::uint8_t> zero(16, 0);
  const auto k = diskenc::expand_key(zero);
  EXPECT_TRUE(k.round_keys[0].is_zero());
  // AES-128(0, 0), a widely published value
  EXPECT_EQ(diskenc::prf_eval(k, Block::zero()).to_hex(), "66e94bd4ef8a2c3b884cfa59ca342b2e");
}

TEST(Aes128, WrongKeyLength) {
  EXPECT_THROW(diskenc::expand_key(std::vector<std::uint8_t>(15)), std::invalid_argument);
  EXPECT_THROW(diskenc::expand_key(std::vector<std::uint8_t>(32)), std::invalid_argument);
  EXPECT_THROW(diskenc::Aes128(std::vector<std::uint8_t>{}), std::invalid_argument);
}

TEST(Aes128, MatchesReferenceImplementation) {
  gen::Rng rng;
  for(int i = 0; i < 300; ++i) {
    const Block key = rng.edgy_block();
    const Block pt = rng.edgy_block();
    const diskenc::Aes128 aes(key);
    ASSERT_EQ(aes.eval(pt), oracle::aes(key).encrypt(pt)) << key.to_hex() << " " << pt.to_hex();
  }
}

TEST(Aes128, EvalManyAgreesWithEval) {
  gen::Rng rng;
  const diskenc::Aes128 aes(rng.block());
  for(const std::size_t n : {0u, 1u, 3u, 8u, 255u}) {
    const auto in = rng.blocks(n);
    std::vector<Block> out(n);
    aes.eval_many(in, out);
    for(std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(out[i], aes.eval(in[i]));
    }
  }
  std::vector<Block> in(2), out(3);
  EXPECT_THROW(aes.eval_many(in, out), std::invalid_argument);
}

TEST(Aes128, InjectiveOnSample) {
  gen::Rng rng;
  const diskenc::Aes128 aes(rng.block());
  std::set<std::pair<std::uint64_t, std::uint64_t>> in, out;
  while(in.size() < 4096) {
    const Block x = rng.block();
    if(in.insert({x.hi, x.lo}).second) {
      const Block y = aes.eval(x);
      out.insert({y.hi, y.lo});
    }
  }
  EXPECT_EQ(out.size(), 4096u);
}

TEST(Aes128, SharedPointerFactory) {
  const auto f = diskenc::make_aes128(Block::from_hex("000102030405060708090a0b0c0d0e0f"));
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->eval(Block::from_hex("00112233445566778899aabbccddeeff")).to_hex(),
            "69c4e0d86a7b0430d8cdb78070b4c55a");
}

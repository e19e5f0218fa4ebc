// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include "diskenc/gf128.hpp"
#include "gen.hpp"
#include "oracles.hpp"

namespace gf = diskenc::gf128;
using diskenc::Block;

TEST(Gf128, IdentityAndZero) {
  gen::Rng rng;
  for(int i = 0; i < 100; ++i) {
    const Block x = rng.block();
    EXPECT_EQ(gf::mul(x, Block::one()), x);
    EXPECT_EQ(gf::mul(Block::one(), x), x);
    EXPECT_TRUE(gf::mul(x, Block::zero()).is_zero());
  }
}

TEST(Gf128, ReductionPolynomial) {
  // alpha^127 * alpha = alpha^128 = alpha^7 + alpha^2 + alpha + 1
  const Block a127{1ull << 63, 0};
  EXPECT_EQ(gf::mul(a127, Block{0, 2}), (Block{0, 0x87}));
  EXPECT_EQ(gf::dbl(a127), (Block{0, 0x87}));
  // alpha^127 squared = alpha^254 = alpha^126 * alpha^128
  EXPECT_EQ(gf::square(a127), oracle::mul(a127, a127));
}

TEST(Gf128, MatchesSchoolbookOnEdgyInputs) {
  gen::Rng rng;
  for(int i = 0; i < 2000; ++i) {
    const Block a = rng.edgy_block();
    const Block b = rng.edgy_block();
    ASSERT_EQ(gf::mul(a, b), oracle::mul(a, b)) << a.to_hex() << " * " << b.to_hex();
  }
}

TEST(Gf128, SquareAndPowers) {
  gen::Rng rng;
  for(int i = 0; i < 200; ++i) {
    const Block x = rng.block();
    EXPECT_EQ(gf::square(x), gf::mul(x, x));
    EXPECT_EQ(gf::pow2k(x, 0), x);
    EXPECT_EQ(gf::pow2k(x, 3), oracle::pow(x, 8));
    EXPECT_EQ(gf::pow(x, 0), Block::one());
    EXPECT_EQ(gf::pow(x, 13), oracle::pow(x, 13));
  }
}

TEST(Gf128, DoublingIsMultiplicationByAlpha) {
  gen::Rng rng;
  for(int i = 0; i < 500; ++i) {
    const Block x = rng.edgy_block();
    EXPECT_EQ(gf::dbl(x), gf::mul(Block{0, 2}, x));
  }
}

TEST(Gf128, ScalarSmallValues) {
  gen::Rng rng;
  const Block x = rng.block();
  EXPECT_TRUE(gf::scalar(0, x).is_zero());
  EXPECT_EQ(gf::scalar(1, x), x);
  EXPECT_EQ(gf::scalar(2, x), gf::dbl(x));
  EXPECT_EQ(gf::scalar(3, x), gf::dbl(x) ^ x);
  // 86 = 64 + 16 + 4 + 2
  const Block composed = gf::dbl(gf::dbl(gf::dbl(gf::dbl(gf::dbl(gf::dbl(x)))))) ^ gf::dbl(gf::dbl(gf::dbl(gf::dbl(x)))) ^
                         gf::dbl(gf::dbl(x)) ^ gf::dbl(x);
  EXPECT_EQ(gf::scalar(86, x), composed);
  EXPECT_EQ(gf::scalar(~0ull, x), gf::mul(Block{0, ~0ull}, x));
}

TEST(Gf128, Distributive) {
  gen::Rng rng;
  for(int i = 0; i < 200; ++i) {
    const Block a = rng.block(), b = rng.block(), c = rng.block();
    EXPECT_EQ(gf::mul(a, b ^ c), gf::mul(a, b) ^ gf::mul(a, c));
    EXPECT_EQ(gf::mul(gf::mul(a, b), c), gf::mul(a, gf::mul(b, c)));
    EXPECT_EQ(gf::mul(a, b), gf::mul(b, a));
  }
}

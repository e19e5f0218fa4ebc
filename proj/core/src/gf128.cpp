// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/gf128.hpp"

namespace diskenc::gf128 {

namespace {

__extension__ typedef unsigned __int128 u128;

// 64x64 -> 128 carry-less product, 4-bit windowed. The window table holds
// b * w for w < 16; the three top bits of each entry spill into the high word.
u128 clmul64(std::uint64_t a, std::uint64_t b) noexcept {
  u128 table[16];
  table[0] = 0;
  table[1] = b;
  for(int w = 2; w < 16; w += 2) {
    table[w] = table[w / 2] << 1;
    table[w + 1] = table[w] ^ b;
  }
  u128 r = 0;
  for(int shift = 60; shift >= 0; shift -= 4) {
    r = (r << 4) ^ table[(a >> shift) & 0xF];
  }
  return r;
}

// Spread the 64 bits of a into the even bit positions of a 128-bit value.
u128 spread64(std::uint64_t a) noexcept {
  u128 x = a;
  x = (x | (x << 32)) & ((u128(0x00000000FFFFFFFFull) << 64) | 0x00000000FFFFFFFFull);
  x = (x | (x << 16)) & ((u128(0x0000FFFF0000FFFFull) << 64) | 0x0000FFFF0000FFFFull);
  x = (x | (x << 8)) & ((u128(0x00FF00FF00FF00FFull) << 64) | 0x00FF00FF00FF00FFull);
  x = (x | (x << 4)) & ((u128(0x0F0F0F0F0F0F0F0Full) << 64) | 0x0F0F0F0F0F0F0F0Full);
  x = (x | (x << 2)) & ((u128(0x3333333333333333ull) << 64) | 0x3333333333333333ull);
  x = (x | (x << 1)) & ((u128(0x5555555555555555ull) << 64) | 0x5555555555555555ull);
  return x;
}

// Reduce hi * a^128 + lo modulo psi. hi has degree <= 126.
Element reduce(u128 hi, u128 lo) noexcept {
  // hi * (a^7 + a^2 + a + 1) overflows past a^127 by at most 7 bits.
  const u128 spill = (hi >> 127) ^ (hi >> 126) ^ (hi >> 121);
  u128 folded = hi ^ (hi << 1) ^ (hi << 2) ^ (hi << 7);
  folded ^= spill ^ (spill << 1) ^ (spill << 2) ^ (spill << 7);
  const u128 r = lo ^ folded;
  return {static_cast<std::uint64_t>(r >> 64), static_cast<std::uint64_t>(r)};
}

}  // namespace

Element mul(const Element& a, const Element& b) noexcept {
  // (a1 X + a0)(b1 X + b0) with X = a^64, three half-size products.
  const u128 high = clmul64(a.hi, b.hi);
  const u128 low = clmul64(a.lo, b.lo);
  const u128 mid = clmul64(a.hi ^ a.lo, b.hi ^ b.lo) ^ high ^ low;
  const u128 prod_hi = high ^ (mid >> 64);
  const u128 prod_lo = low ^ (mid << 64);
  return reduce(prod_hi, prod_lo);
}

Element square(const Element& a) noexcept {
  return reduce(spread64(a.hi), spread64(a.lo));
}

Element scalar(std::uint64_t i, const Element& x) noexcept {
  if(i == 0) {
    return Element::zero();
  }
  // Walk the bits of i from the top: the recurrence i = 2j doubles j*x and
  // i = 2j+1 adds x to 2j*x.
  int top = 63;
  while(((i >> top) & 1) == 0) {
    --top;
  }
  Element acc = x;
  for(int bit = top - 1; bit >= 0; --bit) {
    acc = dbl(acc);
    if((i >> bit) & 1) {
      acc ^= x;
    }
  }
  return acc;
}

Element pow2k(const Element& x, unsigned k) noexcept {
  Element r = x;
  for(unsigned i = 0; i < k; ++i) {
    r = square(r);
  }
  return r;
}

Element pow(const Element& x, std::uint64_t e) noexcept {
  Element result = Element::one();
  Element base = x;
  while(e != 0) {
    if(e & 1) {
      result = mul(result, base);
    }
    base = square(base);
    e >>= 1;
  }
  return result;
}

}  // namespace diskenc::gf128

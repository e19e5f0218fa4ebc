// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/aes128.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace diskenc {

namespace {

constexpr std::uint8_t xtime(std::uint8_t x) {
  return static_cast<std::uint8_t>((x << 1) ^ ((x >> 7) * 0x1B));
}

constexpr std::uint8_t gf256_mul(std::uint8_t a, std::uint8_t b) {
  std::uint8_t r = 0;
  while(b != 0) {
    if(b & 1) {
      r ^= a;
    }
    a = xtime(a);
    b >>= 1;
  }
  return r;
}

constexpr std::array<std::uint8_t, 256> make_sbox() {
  std::array<std::uint8_t, 256> sbox{};
  for(int x = 0; x < 256; ++x) {
    // multiplicative inverse by brute force, 0 maps to 0
    std::uint8_t inv = 0;
    for(int y = 1; y < 256 && x != 0; ++y) {
      if(gf256_mul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1) {
        inv = static_cast<std::uint8_t>(y);
        break;
      }
    }
    std::uint8_t s = inv;
    std::uint8_t r = inv;
    for(int k = 0; k < 4; ++k) {
      r = static_cast<std::uint8_t>((r << 1) | (r >> 7));
      s ^= r;
    }
    sbox[x] = static_cast<std::uint8_t>(s ^ 0x63);
  }
  return sbox;
}

constexpr auto kSbox = make_sbox();

// T-table for column (2s, s, s, 3s); the other three are byte rotations.
constexpr std::array<std::uint32_t, 256> make_te0() {
  std::array<std::uint32_t, 256> t{};
  for(int x = 0; x < 256; ++x) {
    const std::uint8_t s = kSbox[x];
    t[x] = (std::uint32_t(xtime(s)) << 24) | (std::uint32_t(s) << 16) | (std::uint32_t(s) << 8) |
           std::uint32_t(xtime(s) ^ s);
  }
  return t;
}

constexpr auto kTe0 = make_te0();

constexpr std::uint32_t rotr8(std::uint32_t x) { return (x >> 8) | (x << 24); }

constexpr std::uint32_t sub_word(std::uint32_t w) {
  return (std::uint32_t(kSbox[w >> 24]) << 24) | (std::uint32_t(kSbox[(w >> 16) & 0xFF]) << 16) |
         (std::uint32_t(kSbox[(w >> 8) & 0xFF]) << 8) | std::uint32_t(kSbox[w & 0xFF]);
}

struct Words {
  std::uint32_t w[4];
};

Words to_words(const Block& b) {
  return {{static_cast<std::uint32_t>(b.hi >> 32), static_cast<std::uint32_t>(b.hi),
           static_cast<std::uint32_t>(b.lo >> 32), static_cast<std::uint32_t>(b.lo)}};
}

Block from_words(const Words& s) {
  return {(std::uint64_t(s.w[0]) << 32) | s.w[1], (std::uint64_t(s.w[2]) << 32) | s.w[3]};
}

std::uint32_t te(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return kTe0[a >> 24] ^ rotr8(kTe0[(b >> 16) & 0xFF]) ^ rotr8(rotr8(kTe0[(c >> 8) & 0xFF])) ^
         rotr8(rotr8(rotr8(kTe0[d & 0xFF])));
}

std::uint32_t last(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  return (std::uint32_t(kSbox[a >> 24]) << 24) | (std::uint32_t(kSbox[(b >> 16) & 0xFF]) << 16) |
         (std::uint32_t(kSbox[(c >> 8) & 0xFF]) << 8) | std::uint32_t(kSbox[d & 0xFF]);
}

}  // namespace

void BlockFunction::eval_many(std::span<const Block> in, std::span<Block> out) const {
  if(in.size() != out.size()) {
    throw std::invalid_argument("eval_many: input and output lengths differ");
  }
  for(std::size_t i = 0; i < in.size(); ++i) {
    out[i] = eval(in[i]);
  }
}

PrfKey expand_key(std::span<const std::uint8_t> raw) {
  if(raw.size() != 16) {
    throw std::invalid_argument("AES-128 key must be 16 bytes, got " + std::to_string(raw.size()));
  }
  PrfKey key;
  std::copy(raw.begin(), raw.end(), key.raw.begin());

  std::uint32_t w[44];
  for(int i = 0; i < 4; ++i) {
    w[i] = (std::uint32_t(raw[4 * i]) << 24) | (std::uint32_t(raw[4 * i + 1]) << 16) |
           (std::uint32_t(raw[4 * i + 2]) << 8) | std::uint32_t(raw[4 * i + 3]);
  }
  std::uint8_t rcon = 0x01;
  for(int i = 4; i < 44; ++i) {
    std::uint32_t t = w[i - 1];
    if(i % 4 == 0) {
      t = sub_word((t << 8) | (t >> 24)) ^ (std::uint32_t(rcon) << 24);
      rcon = xtime(rcon);
    }
    w[i] = w[i - 4] ^ t;
  }
  for(int r = 0; r < 11; ++r) {
    key.round_keys[r] = from_words({{w[4 * r], w[4 * r + 1], w[4 * r + 2], w[4 * r + 3]}});
  }
  return key;
}

Block prf_eval(const PrfKey& key, const Block& x) noexcept {
  Words s = to_words(x ^ key.round_keys[0]);
  for(int r = 1; r < 10; ++r) {
    const Words k = to_words(key.round_keys[r]);
    const Words t = {{te(s.w[0], s.w[1], s.w[2], s.w[3]) ^ k.w[0], te(s.w[1], s.w[2], s.w[3], s.w[0]) ^ k.w[1],
                      te(s.w[2], s.w[3], s.w[0], s.w[1]) ^ k.w[2], te(s.w[3], s.w[0], s.w[1], s.w[2]) ^ k.w[3]}};
    s = t;
  }
  const Words k = to_words(key.round_keys[10]);
  const Words out = {{last(s.w[0], s.w[1], s.w[2], s.w[3]) ^ k.w[0], last(s.w[1], s.w[2], s.w[3], s.w[0]) ^ k.w[1],
                      last(s.w[2], s.w[3], s.w[0], s.w[1]) ^ k.w[2], last(s.w[3], s.w[0], s.w[1], s.w[2]) ^ k.w[3]}};
  return from_words(out);
}

Aes128::Aes128(std::span<const std::uint8_t> raw_key) : m_key(expand_key(raw_key)) {}

Aes128::Aes128(const Block& raw_key) : m_key(expand_key(raw_key.bytes())) {}

Block Aes128::eval(const Block& x) const { return prf_eval(m_key, x); }

void Aes128::eval_many(std::span<const Block> in, std::span<Block> out) const {
  if(in.size() != out.size()) {
    throw std::invalid_argument("eval_many: input and output lengths differ");
  }
  for(std::size_t i = 0; i < in.size(); ++i) {
    out[i] = prf_eval(m_key, in[i]);
  }
}

std::shared_ptr<const BlockFunction> make_aes128(const Block& raw_key) {
  return std::make_shared<const Aes128>(raw_key);
}

}  // namespace diskenc

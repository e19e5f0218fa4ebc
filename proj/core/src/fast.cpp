// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/fast.hpp"

#include <stdexcept>
#include <string>

namespace diskenc {

namespace {

using gf128::mul;

void check_sector(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if(in.size() != kSectorBytes || out.size() != kSectorBytes) {
    throw std::invalid_argument("FAST operates on 4096-byte sectors, got " + std::to_string(in.size()) + " -> " +
                                std::to_string(out.size()) + " bytes");
  }
}

}  // namespace

FastContext::FastContext(std::shared_ptr<const BlockFunction> prf, Variant variant, const Block& fstr)
    : m_prf(std::move(prf)),
      m_variant(variant),
      m_fstr(fstr),
      m_hash(m_prf ? m_prf->eval(fstr) : throw std::invalid_argument("FastContext: null block function")) {}

FastContext::FastContext(const Block& key, Variant variant, const Block& fstr)
    : FastContext(make_aes128(key), variant, fstr) {}

void FastContext::ctr_translate(const Block& s, std::span<const Block> ys, std::span<Block> out) const {
  if(ys.empty()) {
    throw std::invalid_argument("counter mode needs at least one block");
  }
  if(ys.size() != out.size()) {
    throw std::invalid_argument("counter mode: input and output lengths differ");
  }
  std::vector<Block> pad(ys.size());
  for(std::size_t i = 0; i < ys.size(); ++i) {
    pad[i] = s ^ Block::from_integer(i + 1);
  }
  m_prf->eval_many(pad, pad);
  for(std::size_t i = 0; i < ys.size(); ++i) {
    out[i] = pad[i] ^ ys[i];
  }
}

std::vector<Block> FastContext::ctr_translate(const Block& s, std::span<const Block> ys) const {
  std::vector<Block> out(ys.size());
  ctr_translate(s, ys, out);
  return out;
}

FastContext::BlockPair FastContext::feistel(const Block& a1, const Block& f1) const {
  const Block f2 = a1 ^ m_prf->eval(f1);
  const Block b2 = f1 ^ m_prf->eval(f2);
  return {f2, b2};
}

FastContext::BlockPair FastContext::feistel_inverse(const Block& f2, const Block& b2) const {
  const Block f1 = b2 ^ m_prf->eval(f2);
  const Block a1 = f2 ^ m_prf->eval(f1);
  return {a1, f1};
}

void FastContext::check_tail(std::span<const Block> tail) const {
  if(tail.size() != kTailBlocks) {
    throw std::invalid_argument("hash layer expects 254 tail blocks, got " + std::to_string(tail.size()));
  }
}

FastContext::BlockPair FastContext::layer_h(const Block& x1, const Block& x2, std::span<const Block> tail,
                                            const Block& tweak) const {
  check_tail(tail);
  const Block a1 = x1 ^ hashing::fast_h(m_hash, m_variant, tail, tweak);
  return {a1, x2 ^ mul(m_hash.tau(), a1)};
}

FastContext::BlockPair FastContext::layer_h_inverse(const Block& a1, const Block& f1, std::span<const Block> tail,
                                                    const Block& tweak) const {
  check_tail(tail);
  const Block x2 = f1 ^ mul(m_hash.tau(), a1);
  return {a1 ^ hashing::fast_h(m_hash, m_variant, tail, tweak), x2};
}

FastContext::BlockPair FastContext::layer_gprime(const Block& y1, const Block& y2, std::span<const Block> tail,
                                                 const Block& tweak) const {
  check_tail(tail);
  return {y1 ^ mul(m_hash.tau(), y2), y2 ^ hashing::fast_hprime(m_hash, m_variant, tail, tweak)};
}

FastContext::BlockPair FastContext::layer_gprime_inverse(const Block& c1, const Block& c2,
                                                         std::span<const Block> tail, const Block& tweak) const {
  check_tail(tail);
  const Block y2 = c2 ^ hashing::fast_hprime(m_hash, m_variant, tail, tweak);
  return {c1 ^ mul(m_hash.tau(), y2), y2};
}

void FastContext::encrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_sector(in, out);
  std::array<Block, kSectorBlocks> x;
  load_blocks(in, x);
  const std::span<const Block> x_tail(x.data() + 2, kTailBlocks);

  const auto [a1, f1] = layer_h(x[0], x[1], x_tail, tweak);
  const auto [f2, b2] = feistel(a1, f1);

  std::array<Block, kSectorBlocks> c;
  const std::span<Block> c_tail(c.data() + 2, kTailBlocks);
  ctr_translate(f1 ^ f2, x_tail, c_tail);

  const auto [c1, c2] = layer_gprime(f2, b2, c_tail, tweak);
  c[0] = c1;
  c[1] = c2;
  store_blocks(c, out);
}

void FastContext::decrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_sector(in, out);
  std::array<Block, kSectorBlocks> c;
  load_blocks(in, c);
  const std::span<const Block> c_tail(c.data() + 2, kTailBlocks);

  const auto [f2, b2] = layer_gprime_inverse(c[0], c[1], c_tail, tweak);
  const auto [a1, f1] = feistel_inverse(f2, b2);

  std::array<Block, kSectorBlocks> x;
  const std::span<Block> x_tail(x.data() + 2, kTailBlocks);
  ctr_translate(f1 ^ f2, c_tail, x_tail);

  const auto [x1, x2] = layer_h_inverse(a1, f1, x_tail, tweak);
  x[0] = x1;
  x[1] = x2;
  store_blocks(x, out);
}

Sector FastContext::encrypt(const Block& tweak, std::span<const std::uint8_t> msg) const {
  Sector out;
  encrypt(tweak, msg, out);
  return out;
}

Sector FastContext::decrypt(const Block& tweak, std::span<const std::uint8_t> ct) const {
  Sector out;
  decrypt(tweak, ct, out);
  return out;
}

}  // namespace diskenc

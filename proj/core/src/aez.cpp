// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/aez.hpp"

#include <stdexcept>
#include <string>

#include "diskenc/gf128.hpp"

namespace diskenc {

namespace {

constexpr std::size_t kPairs = AezContext::kPairs;
constexpr std::size_t kX = 2 * kPairs;
constexpr std::size_t kY = 2 * kPairs + 1;

void check_sector(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) {
  if(in.size() != kSectorBytes || out.size() != kSectorBytes) {
    throw std::invalid_argument("AEZ operates on 4096-byte sectors, got " + std::to_string(in.size()) + " -> " +
                                std::to_string(out.size()) + " bytes");
  }
}

}  // namespace

AezContext::AezContext(std::shared_ptr<const BlockFunction> prf, MaskMode mode) : m_prf(std::move(prf)), m_mode(mode) {
  if(!m_prf) {
    throw std::invalid_argument("AezContext: null block function");
  }
  build_masks();
}

AezContext::AezContext(const Block& key, MaskMode mode) : AezContext(make_aes128(key), mode) {}

void AezContext::build_masks() {
  m_i = m_prf->eval(Block::zero());
  m_j = m_prf->eval(Block::one());

  m_i_table = {Block::zero(), m_i, gf128::dbl(m_i), gf128::dbl(m_i) ^ m_i};

  m_j_doublings[0] = m_j;
  for(std::size_t k = 1; k < m_j_doublings.size(); ++k) {
    m_j_doublings[k] = gf128::dbl(m_j_doublings[k - 1]);
  }

  if(m_mode == MaskMode::Precomputed) {
    auto& table = m_j_table.emplace();
    table[0] = Block::zero();
    table[1] = m_j;
    for(std::size_t j = 2; j < table.size(); ++j) {
      table[j] = (j % 2 == 0) ? gf128::dbl(table[j / 2]) : table[j - 1] ^ m_j;
    }
  }
}

const Block& AezContext::i_offset(int i) const {
  if(i < -1 || i > 2) {
    throw std::out_of_range("AEZ i index must be in [-1, 2], got " + std::to_string(i));
  }
  return m_i_table[static_cast<std::size_t>(i + 1)];
}

Block AezContext::j_offset(int j) const {
  if(j < 0 || j > kMaxJ) {
    throw std::out_of_range("AEZ j index must be in [0, 127], got " + std::to_string(j));
  }
  if(m_j_table) {
    return (*m_j_table)[static_cast<std::size_t>(j)];
  }
  Block acc = Block::zero();
  for(std::size_t bit = 0; bit < m_j_doublings.size(); ++bit) {
    if((j >> bit) & 1) {
      acc ^= m_j_doublings[bit];
    }
  }
  return acc;
}

Block AezContext::e_tilde(int i, int j, const Block& beta) const {
  return m_prf->eval(beta ^ i_offset(i) ^ j_offset(j));
}

void AezContext::e_tilde_run(int i, int first_j, std::span<const Block> in, std::span<Block> out) const {
  const Block& io = i_offset(i);
  for(std::size_t k = 0; k < in.size(); ++k) {
    out[k] = in[k] ^ io ^ j_offset(first_j + static_cast<int>(k));
  }
  m_prf->eval_many(out, out);
}

void AezContext::encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_sector(in, out);
  std::array<Block, kSectorBlocks> msg;
  load_blocks(in, msg);

  std::array<Block, kPairs> m, mp, w, x, s_prime, y, z, tmp;
  for(std::size_t k = 0; k < kPairs; ++k) {
    m[k] = msg[2 * k];
    mp[k] = msg[2 * k + 1];
  }

  // first layer
  e_tilde_run(1, 1, mp, tmp);
  for(std::size_t k = 0; k < kPairs; ++k) w[k] = m[k] ^ tmp[k];
  for(std::size_t k = 0; k < kPairs; ++k) tmp[k] = w[k] ^ i_offset(0);
  m_prf->eval_many(tmp, tmp);
  Block x_sum = Block::zero();
  for(std::size_t k = 0; k < kPairs; ++k) {
    x[k] = mp[k] ^ tmp[k];
    x_sum ^= x[k];
  }
  const Block sx = e_tilde(0, 1, msg[kY]) ^ msg[kX] ^ x_sum ^ m_delta;
  const Block sy = e_tilde(-1, 1, sx) ^ msg[kY];

  // second layer
  const Block s = sx ^ sy;
  std::array<Block, kPairs> s_in;
  s_in.fill(s);
  e_tilde_run(2, 1, s_in, s_prime);
  Block y_sum = Block::zero();
  for(std::size_t k = 0; k < kPairs; ++k) {
    y[k] = s_prime[k] ^ w[k];
    z[k] = s_prime[k] ^ x[k];
    y_sum ^= y[k];
  }

  // third layer
  std::array<Block, kSectorBlocks> ct;
  for(std::size_t k = 0; k < kPairs; ++k) tmp[k] = z[k] ^ i_offset(0);
  m_prf->eval_many(tmp, tmp);
  std::array<Block, kPairs> cp;
  for(std::size_t k = 0; k < kPairs; ++k) cp[k] = y[k] ^ tmp[k];
  e_tilde_run(1, 1, cp, tmp);
  for(std::size_t k = 0; k < kPairs; ++k) {
    ct[2 * k] = z[k] ^ tmp[k];
    ct[2 * k + 1] = cp[k];
  }
  const Block cy = sx ^ e_tilde(-1, 2, sy);
  const Block cx = sy ^ e_tilde(0, 2, cy) ^ m_delta ^ y_sum;
  ct[kX] = cx;
  ct[kY] = cy;
  store_blocks(ct, out);
}

void AezContext::decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  check_sector(in, out);
  std::array<Block, kSectorBlocks> ct;
  load_blocks(in, ct);

  std::array<Block, kPairs> c, cp, y, z, w, x, s_prime, tmp;
  for(std::size_t k = 0; k < kPairs; ++k) {
    c[k] = ct[2 * k];
    cp[k] = ct[2 * k + 1];
  }

  // undo third layer
  e_tilde_run(1, 1, cp, tmp);
  for(std::size_t k = 0; k < kPairs; ++k) z[k] = c[k] ^ tmp[k];
  for(std::size_t k = 0; k < kPairs; ++k) tmp[k] = z[k] ^ i_offset(0);
  m_prf->eval_many(tmp, tmp);
  Block y_sum = Block::zero();
  for(std::size_t k = 0; k < kPairs; ++k) {
    y[k] = cp[k] ^ tmp[k];
    y_sum ^= y[k];
  }
  const Block sy = ct[kX] ^ e_tilde(0, 2, ct[kY]) ^ m_delta ^ y_sum;
  const Block sx = ct[kY] ^ e_tilde(-1, 2, sy);

  // undo second layer
  const Block s = sx ^ sy;
  std::array<Block, kPairs> s_in;
  s_in.fill(s);
  e_tilde_run(2, 1, s_in, s_prime);
  Block x_sum = Block::zero();
  for(std::size_t k = 0; k < kPairs; ++k) {
    w[k] = y[k] ^ s_prime[k];
    x[k] = z[k] ^ s_prime[k];
    x_sum ^= x[k];
  }

  // undo first layer
  std::array<Block, kSectorBlocks> msg;
  for(std::size_t k = 0; k < kPairs; ++k) tmp[k] = w[k] ^ i_offset(0);
  m_prf->eval_many(tmp, tmp);
  std::array<Block, kPairs> mp;
  for(std::size_t k = 0; k < kPairs; ++k) mp[k] = x[k] ^ tmp[k];
  e_tilde_run(1, 1, mp, tmp);
  for(std::size_t k = 0; k < kPairs; ++k) {
    msg[2 * k] = w[k] ^ tmp[k];
    msg[2 * k + 1] = mp[k];
  }
  const Block my = sy ^ e_tilde(-1, 1, sx);
  msg[kY] = my;
  msg[kX] = sx ^ e_tilde(0, 1, my) ^ x_sum ^ m_delta;
  store_blocks(msg, out);
}

Sector AezContext::encrypt(std::span<const std::uint8_t> msg) const {
  Sector out;
  encrypt(msg, out);
  return out;
}

Sector AezContext::decrypt(std::span<const std::uint8_t> ct) const {
  Sector out;
  decrypt(ct, out);
  return out;
}

}  // namespace diskenc

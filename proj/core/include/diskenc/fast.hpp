// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "diskenc/aes128.hpp"
#include "diskenc/block.hpp"
#include "diskenc/hashing.hpp"

namespace diskenc {

using Sector = std::array<std::uint8_t, kSectorBytes>;

/// FAST over fixed 4096-byte sectors (m = 256 blocks) with a one-block tweak,
/// instantiated with Horner or BRW hashing.
///
/// Encryption: (A1, F1) = H(X1, X2, X3..X256, T); (F2, B2) = Feistel(A1, F1);
/// C3..C256 = Ctr[Z = F1 ^ F2](X3..X256); (C1, C2) = G'(F2, B2, C3..C256, T).
/// Decryption runs the layers backwards and, like encryption, only evaluates
/// the forward block function.
class FastContext {
 public:
  using Variant = hashing::Variant;
  using BlockPair = std::pair<Block, Block>;

  static constexpr std::size_t kTailBlocks = kSectorBlocks - 2;

  /// tau = F_K(fstr), derived once per context.
  FastContext(std::shared_ptr<const BlockFunction> prf, Variant variant, const Block& fstr = Block::zero());
  FastContext(const Block& key, Variant variant, const Block& fstr = Block::zero());

  Variant variant() const noexcept { return m_variant; }
  const Block& fstr() const noexcept { return m_fstr; }
  const hashing::HashKey& hash_key() const noexcept { return m_hash; }
  const BlockFunction& prf() const noexcept { return *m_prf; }

  /// out_i = F_K(s ^ bin_128(i)) ^ ys_i for i = 1..m. Self-inverse.
  /// Throws std::invalid_argument on empty input or mismatched lengths.
  void ctr_translate(const Block& s, std::span<const Block> ys, std::span<Block> out) const;
  std::vector<Block> ctr_translate(const Block& s, std::span<const Block> ys) const;

  /// Two-round Feistel: F2 = a1 ^ F_K(f1), B2 = f1 ^ F_K(F2).
  BlockPair feistel(const Block& a1, const Block& f1) const;
  /// Recovers (A1, F1) from (F2, B2) using forward evaluations only.
  BlockPair feistel_inverse(const Block& f2, const Block& b2) const;

  /// H: A1 = x1 ^ h(T, tail), F1 = x2 ^ tau * A1. Tail must be 254 blocks.
  BlockPair layer_h(const Block& x1, const Block& x2, std::span<const Block> tail, const Block& tweak) const;
  BlockPair layer_h_inverse(const Block& a1, const Block& f1, std::span<const Block> tail,
                            const Block& tweak) const;

  /// G': C1 = y1 ^ tau * y2, C2 = y2 ^ h'(T, tail). Tail must be 254 blocks.
  BlockPair layer_gprime(const Block& y1, const Block& y2, std::span<const Block> tail, const Block& tweak) const;
  BlockPair layer_gprime_inverse(const Block& c1, const Block& c2, std::span<const Block> tail,
                                 const Block& tweak) const;

  /// Both throw std::invalid_argument unless in and out are exactly 4096 bytes.
  void encrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;
  void decrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;

  Sector encrypt(const Block& tweak, std::span<const std::uint8_t> msg) const;
  Sector decrypt(const Block& tweak, std::span<const std::uint8_t> ct) const;

 private:
  void check_tail(std::span<const Block> tail) const;

  std::shared_ptr<const BlockFunction> m_prf;
  Variant m_variant;
  Block m_fstr;
  hashing::HashKey m_hash;
};

}  // namespace diskenc

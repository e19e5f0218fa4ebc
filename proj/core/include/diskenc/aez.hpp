// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>

#include "diskenc/aes128.hpp"
#include "diskenc/block.hpp"
#include "diskenc/fast.hpp"

namespace diskenc {

enum class MaskMode { Precomputed, OnTheFly };

/// AEZ-Core over 4096-byte sectors with the tweak digest Delta fixed to zero.
///
/// Sector layout, in byte order: M1, M1', M2, M2', ..., M127, M127', Mx, My.
/// Every tweaked call is E~(i,j)(b) = E_K(b ^ (i+1)*I ^ j*J) with
/// I = E_K(0) and J = E_K(1).
class AezContext {
 public:
  /// Number of (M_i, M_i') pairs in a sector.
  static constexpr std::size_t kPairs = (kSectorBlocks - 2) / 2;
  static constexpr int kMaxJ = static_cast<int>(kPairs);

  AezContext(std::shared_ptr<const BlockFunction> prf, MaskMode mode = MaskMode::Precomputed);
  AezContext(const Block& key, MaskMode mode = MaskMode::Precomputed);

  MaskMode mask_mode() const noexcept { return m_mode; }
  const Block& i_mask() const noexcept { return m_i; }
  const Block& j_mask() const noexcept { return m_j; }
  const Block& delta() const noexcept { return m_delta; }

  /// (i+1)*I for i in {-1, 0, 1, 2}.
  const Block& i_offset(int i) const;
  /// j*J for 0 <= j <= 127, read from the table or composed from the
  /// doublings J, 2J, ..., 64J depending on the mask mode.
  Block j_offset(int j) const;
  /// Present only in precomputed mode.
  const std::optional<std::array<Block, kPairs + 1>>& j_table() const noexcept { return m_j_table; }

  /// Throws std::out_of_range for unsupported (i, j).
  Block e_tilde(int i, int j, const Block& beta) const;

  void encrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;
  void decrypt(std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;
  Sector encrypt(std::span<const std::uint8_t> msg) const;
  Sector decrypt(std::span<const std::uint8_t> ct) const;

 private:
  void build_masks();
  // E_K(b ^ i_offset(i) ^ j_offset(j)) for a run of (b, j) with j = first_j, first_j + 1, ...
  void e_tilde_run(int i, int first_j, std::span<const Block> in, std::span<Block> out) const;

  std::shared_ptr<const BlockFunction> m_prf;
  MaskMode m_mode;
  Block m_i;
  Block m_j;
  Block m_delta;
  std::array<Block, 4> m_i_table{};
  std::array<Block, 7> m_j_doublings{};
  std::optional<std::array<Block, kPairs + 1>> m_j_table;
};

}  // namespace diskenc

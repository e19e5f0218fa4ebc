// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diskenc {

inline constexpr std::size_t kBlockBytes = 16;
inline constexpr std::size_t kSectorBytes = 4096;
inline constexpr std::size_t kSectorBlocks = kSectorBytes / kBlockBytes;

/// A 128-bit string. `hi` holds bytes 0..7 and `lo` bytes 8..15, both
/// big-endian, so the leftmost bit of the string is the top bit of `hi`.
/// Read as a 128-bit integer, bit k is the coefficient of alpha^k when the
/// block is used as a field element.
struct Block {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;

  static constexpr Block zero() noexcept { return {}; }
  static constexpr Block one() noexcept { return {0, 1}; }

  /// bin_128(i): big-endian integer encoding.
  static constexpr Block from_integer(std::uint64_t i) noexcept { return {0, i}; }

  static Block load(std::span<const std::uint8_t, kBlockBytes> bytes) noexcept;
  void store(std::span<std::uint8_t, kBlockBytes> out) const noexcept;
  std::array<std::uint8_t, kBlockBytes> bytes() const noexcept;

  /// Parses exactly 32 hex digits; throws std::invalid_argument otherwise.
  static Block from_hex(std::string_view hex);
  std::string to_hex() const;

  constexpr bool is_zero() const noexcept { return (hi | lo) == 0; }
  constexpr bool operator==(const Block&) const noexcept = default;

  constexpr Block& operator^=(const Block& o) noexcept {
    hi ^= o.hi;
    lo ^= o.lo;
    return *this;
  }
  friend constexpr Block operator^(Block a, const Block& b) noexcept { return a ^= b; }
};

/// Big-endian load/store of a run of blocks; sizes must agree (16 bytes per block).
void load_blocks(std::span<const std::uint8_t> bytes, std::span<Block> out);
void store_blocks(std::span<const Block> blocks, std::span<std::uint8_t> out);

std::string to_hex(std::span<const std::uint8_t> bytes);
/// Throws std::invalid_argument on odd length or non-hex characters.
std::vector<std::uint8_t> from_hex(std::string_view hex);

}  // namespace diskenc

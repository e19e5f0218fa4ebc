// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>

#include "diskenc/block.hpp"

namespace diskenc {

/// A keyed function on 128-bit blocks. Both tweakable enciphering schemes in
/// this library only ever evaluate the forward direction of the block cipher,
/// so this is the whole contract; tests substitute counting stubs.
class BlockFunction {
 public:
  virtual ~BlockFunction() = default;

  virtual Block eval(const Block& x) const = 0;

  /// Evaluates every block of `in` into `out` (same length, may alias).
  virtual void eval_many(std::span<const Block> in, std::span<Block> out) const;
};

/// Expanded AES-128 encryption key.
struct PrfKey {
  std::array<std::uint8_t, 16> raw{};
  std::array<Block, 11> round_keys{};
};

/// AES-128 key schedule. Throws std::invalid_argument unless `raw` is 16 bytes.
PrfKey expand_key(std::span<const std::uint8_t> raw);

/// AES-128 encryption of one block.
Block prf_eval(const PrfKey& key, const Block& x) noexcept;

class Aes128 final : public BlockFunction {
 public:
  explicit Aes128(std::span<const std::uint8_t> raw_key);
  explicit Aes128(const Block& raw_key);

  Block eval(const Block& x) const override;
  void eval_many(std::span<const Block> in, std::span<Block> out) const override;

  const PrfKey& key() const noexcept { return m_key; }

 private:
  PrfKey m_key;
};

std::shared_ptr<const BlockFunction> make_aes128(const Block& raw_key);

}  // namespace diskenc

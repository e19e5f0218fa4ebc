// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <span>
#include <variant>

#include "diskenc/aez.hpp"
#include "diskenc/fast.hpp"
#include "diskenc/pipeline.hpp"

namespace diskenc {

using pipeline::Scheme;

/// One keyed sector scheme behind a uniform interface. AEZ ignores the
/// tweak (its tweak digest is fixed to zero) and FAST ignores the mask mode.
class SectorCipher {
 public:
  SectorCipher(Scheme scheme, const Block& key, const Block& fstr = Block::zero(),
               MaskMode mask_mode = MaskMode::Precomputed);

  Scheme scheme() const noexcept { return m_scheme; }
  bool uses_tweak() const noexcept { return m_scheme != Scheme::Aez; }

  void encrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;
  void decrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const;

 private:
  Scheme m_scheme;
  std::variant<FastContext, AezContext> m_ctx;
};

}  // namespace diskenc

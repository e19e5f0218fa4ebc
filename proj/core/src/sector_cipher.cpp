// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/sector_cipher.hpp"

namespace diskenc {

namespace {

std::variant<FastContext, AezContext> make_context(Scheme scheme, const Block& key, const Block& fstr,
                                                   MaskMode mask_mode) {
  switch(scheme) {
    case Scheme::FastBrw:
      return FastContext(key, hashing::Variant::BRW, fstr);
    case Scheme::FastHorner:
      return FastContext(key, hashing::Variant::Horner, fstr);
    case Scheme::Aez:
      break;
  }
  return AezContext(key, mask_mode);
}

}  // namespace

SectorCipher::SectorCipher(Scheme scheme, const Block& key, const Block& fstr, MaskMode mask_mode)
    : m_scheme(scheme), m_ctx(make_context(scheme, key, fstr, mask_mode)) {}

void SectorCipher::encrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  if(const auto* fast = std::get_if<FastContext>(&m_ctx)) {
    fast->encrypt(tweak, in, out);
  } else {
    std::get<AezContext>(m_ctx).encrypt(in, out);
  }
}

void SectorCipher::decrypt(const Block& tweak, std::span<const std::uint8_t> in, std::span<std::uint8_t> out) const {
  if(const auto* fast = std::get_if<FastContext>(&m_ctx)) {
    fast->decrypt(tweak, in, out);
  } else {
    std::get<AezContext>(m_ctx).decrypt(in, out);
  }
}

}  // namespace diskenc

// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/block.hpp"

#include <stdexcept>

namespace diskenc {

namespace {

std::uint64_t load_be64(const std::uint8_t* p) noexcept {
  std::uint64_t v = 0;
  for(int i = 0; i < 8; ++i) {
    v = (v << 8) | p[i];
  }
  return v;
}

void store_be64(std::uint64_t v, std::uint8_t* p) noexcept {
  for(int i = 7; i >= 0; --i) {
    p[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
}

int hex_value(char c) noexcept {
  if(c >= '0' && c <= '9') return c - '0';
  if(c >= 'a' && c <= 'f') return c - 'a' + 10;
  if(c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

constexpr char kHexDigits[] = "0123456789abcdef";

}  // namespace

Block Block::load(std::span<const std::uint8_t, kBlockBytes> bytes) noexcept {
  return {load_be64(bytes.data()), load_be64(bytes.data() + 8)};
}

void Block::store(std::span<std::uint8_t, kBlockBytes> out) const noexcept {
  store_be64(hi, out.data());
  store_be64(lo, out.data() + 8);
}

std::array<std::uint8_t, kBlockBytes> Block::bytes() const noexcept {
  std::array<std::uint8_t, kBlockBytes> out{};
  store(out);
  return out;
}

Block Block::from_hex(std::string_view hex) {
  if(hex.size() != 2 * kBlockBytes) {
    throw std::invalid_argument("block hex must be exactly 32 digits, got " +
                                std::to_string(hex.size()));
  }
  const auto raw = diskenc::from_hex(hex);
  return load(std::span<const std::uint8_t, kBlockBytes>(raw.data(), kBlockBytes));
}

std::string Block::to_hex() const {
  const auto b = bytes();
  return diskenc::to_hex(b);
}

void load_blocks(std::span<const std::uint8_t> bytes, std::span<Block> out) {
  if(bytes.size() != out.size() * kBlockBytes) {
    throw std::invalid_argument("load_blocks: byte count does not match block count");
  }
  for(std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Block::load(bytes.subspan(i * kBlockBytes).first<kBlockBytes>());
  }
}

void store_blocks(std::span<const Block> blocks, std::span<std::uint8_t> out) {
  if(out.size() != blocks.size() * kBlockBytes) {
    throw std::invalid_argument("store_blocks: byte count does not match block count");
  }
  for(std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].store(out.subspan(i * kBlockBytes).first<kBlockBytes>());
  }
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  std::string s;
  s.reserve(bytes.size() * 2);
  for(const auto b : bytes) {
    s.push_back(kHexDigits[b >> 4]);
    s.push_back(kHexDigits[b & 0x0F]);
  }
  return s;
}

std::vector<std::uint8_t> from_hex(std::string_view hex) {
  if(hex.size() % 2 != 0) {
    throw std::invalid_argument("hex string has odd length");
  }
  std::vector<std::uint8_t> out(hex.size() / 2);
  for(std::size_t i = 0; i < out.size(); ++i) {
    const int h = hex_value(hex[2 * i]);
    const int l = hex_value(hex[2 * i + 1]);
    if(h < 0 || l < 0) {
      throw std::invalid_argument("invalid hex digit at position " + std::to_string(h < 0 ? 2 * i : 2 * i + 1));
    }
    out[i] = static_cast<std::uint8_t>((h << 4) | l);
  }
  return out;
}

}  // namespace diskenc

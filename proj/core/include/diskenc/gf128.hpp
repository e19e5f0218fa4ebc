// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>

#include "diskenc/block.hpp"

/// Arithmetic in GF(2^128) defined by psi(a) = a^128 + a^7 + a^2 + a + 1.
///
/// Elements are Blocks. The leftmost bit of the string is the coefficient of
/// a^127 and the rightmost bit the constant term, so the multiplicative
/// identity is the string 0^127 1 and bin_128(i) is the polynomial whose
/// coefficients are the binary digits of i.
namespace diskenc::gf128 {

using Element = Block;

/// Low byte of the reduction: a^128 = a^7 + a^2 + a + 1 mod psi.
inline constexpr std::uint64_t kReduction = 0x87;

constexpr Element add(const Element& a, const Element& b) noexcept { return a ^ b; }

/// Multiply by a ("doubling"): shift left one bit, fold the carry with 0x87.
constexpr Element dbl(const Element& x) noexcept {
  const std::uint64_t carry = x.hi >> 63;
  return {(x.hi << 1) | (x.lo >> 63), (x.lo << 1) ^ (carry * kReduction)};
}

/// Karatsuba carry-less multiply followed by shift-XOR reduction.
Element mul(const Element& a, const Element& b) noexcept;

/// Squaring via bit spreading (squaring is GF(2)-linear).
Element square(const Element& a) noexcept;

/// i*x using the double-and-add recurrence (0, x, 2x, 2(jx), (2jx)+x).
Element scalar(std::uint64_t i, const Element& x) noexcept;

/// x^(2^k) by k repeated squarings.
Element pow2k(const Element& x, unsigned k) noexcept;

/// x^e by square-and-multiply.
Element pow(const Element& x, std::uint64_t e) noexcept;

}  // namespace diskenc::gf128

// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

#include "diskenc/gf128.hpp"

namespace diskenc::hashing {

using gf128::Element;

/// Field operations performed by one hash evaluation. Each evaluation
/// accumulates into its own instance, so concurrent calls never share one.
struct OpCounts {
  std::size_t mults = 0;
  std::size_t squarings = 0;
};

/// The hash key tau together with its repeated squares.
class HashKey {
 public:
  /// tau^(2^k) for k = 1..7 covers the 255-block BRW polynomial.
  static constexpr unsigned kSquares = 7;

  explicit HashKey(const Element& tau) noexcept;

  const Element& tau() const noexcept { return m_tau; }
  const Element& tau_sq() const noexcept { return m_squares[0]; }
  /// tau^(2^k), 1 <= k <= kSquares.
  const Element& square(unsigned k) const { return m_squares.at(k - 1); }

 private:
  Element m_tau;
  std::array<Element, kSquares> m_squares;
};

enum class Variant { Horner, BRW };

/// Y1 tau^(m-1) + ... + Y(m-1) tau + Ym; zero for m = 0. Uses max(m-1, 0) multiplications.
Element horner(const Element& tau, std::span<const Element> ys, OpCounts& ops) noexcept;
Element horner(const Element& tau, std::span<const Element> ys) noexcept;

/// Same value as horner(), computed as d interleaved polynomials in tau^d that
/// are recombined with tau^((m - i) mod d). Throws std::invalid_argument for d = 0.
Element horner_decimated(const Element& tau, std::span<const Element> ys, std::size_t d, OpCounts& ops);
Element horner_decimated(const Element& tau, std::span<const Element> ys, std::size_t d);

/// Bernstein-Rabin-Winograd polynomial. floor(m/2) multiplications, and for
/// m >= 3 floor(lg m) squarings to build tau^2, tau^4, ...
Element brw(const HashKey& key, std::span<const Element> ys, OpCounts& ops);
Element brw(const HashKey& key, std::span<const Element> ys);

/// Multiplications brw() performs on m blocks.
std::size_t brw_mult_count(std::size_t m) noexcept;

/// h(T, tail) = tau * Horner(1, tail..., T) or tau * BRW(tail..., T).
/// The BRW form needs at least two tail blocks (throws std::invalid_argument).
Element fast_h(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak,
               OpCounts& ops);
Element fast_h(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak);

/// h'(T, tail): as fast_h with tau^2 in place of the leading tau.
Element fast_hprime(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak,
                    OpCounts& ops);
Element fast_hprime(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak);

}  // namespace diskenc::hashing

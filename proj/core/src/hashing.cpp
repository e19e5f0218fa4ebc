// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/hashing.hpp"

#include <bit>
#include <stdexcept>
#include <vector>

namespace diskenc::hashing {

namespace {

Element counted_mul(const Element& a, const Element& b, OpCounts& ops) noexcept {
  ++ops.mults;
  return gf128::mul(a, b);
}

// tau^(2^k) for k = 1..depth; entry k-1 holds tau^(2^k).
class PowerLadder {
 public:
  PowerLadder(const HashKey& key, unsigned depth, OpCounts& ops) : m_powers(depth) {
    for(unsigned k = 1; k <= depth; ++k) {
      m_powers[k - 1] = k <= HashKey::kSquares ? key.square(k) : gf128::square(m_powers[k - 2]);
    }
    ops.squarings += depth;
  }

  // tau^t for t a power of two >= 2
  const Element& at(std::size_t t) const { return m_powers[std::countr_zero(t) - 1]; }

 private:
  std::vector<Element> m_powers;
};

// BRW over the m blocks get(lo), ..., get(lo + m - 1), left subtree first.
template <typename Get>
Element brw_range(const Get& get, std::size_t lo, std::size_t m, const HashKey& key, const PowerLadder& ladder,
                  OpCounts& ops) {
  switch(m) {
    case 0:
      return Element::zero();
    case 1:
      return get(lo);
    case 2:
      return counted_mul(get(lo), key.tau(), ops) ^ get(lo + 1);
    case 3:
      return counted_mul(key.tau() ^ get(lo), ladder.at(2) ^ get(lo + 1), ops) ^ get(lo + 2);
    default:
      break;
  }
  const std::size_t t = std::bit_floor(m);
  const Element left = brw_range(get, lo, t - 1, key, ladder, ops);
  const Element node = counted_mul(left, ladder.at(t) ^ get(lo + t - 1), ops);
  return node ^ brw_range(get, lo + t, m - t, key, ladder, ops);
}

unsigned ladder_depth(std::size_t m) noexcept {
  return m >= 3 ? static_cast<unsigned>(std::bit_width(m) - 1) : 0;
}

template <typename Get>
Element brw_eval(const HashKey& key, const Get& get, std::size_t m, OpCounts& ops) {
  const PowerLadder ladder(key, ladder_depth(m), ops);
  return brw_range(get, 0, m, key, ladder, ops);
}

// Horner(1, tail..., T) without materializing the coefficient vector.
Element horner_with_one(const Element& tau, std::span<const Element> tail, const Element& tweak, OpCounts& ops) {
  Element acc = Element::one();
  for(const auto& y : tail) {
    acc = counted_mul(acc, tau, ops) ^ y;
  }
  return counted_mul(acc, tau, ops) ^ tweak;
}

Element polynomial(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak,
                   OpCounts& ops) {
  if(variant == Variant::Horner) {
    return horner_with_one(key.tau(), tail, tweak, ops);
  }
  if(tail.size() < 2) {
    throw std::invalid_argument("BRW hash needs at least two tail blocks");
  }
  const auto get = [&](std::size_t i) -> const Element& { return i < tail.size() ? tail[i] : tweak; };
  return brw_eval(key, get, tail.size() + 1, ops);
}

}  // namespace

HashKey::HashKey(const Element& tau) noexcept : m_tau(tau) {
  Element p = tau;
  for(auto& s : m_squares) {
    p = gf128::square(p);
    s = p;
  }
}

Element horner(const Element& tau, std::span<const Element> ys, OpCounts& ops) noexcept {
  if(ys.empty()) {
    return Element::zero();
  }
  Element acc = ys[0];
  for(std::size_t i = 1; i < ys.size(); ++i) {
    acc = counted_mul(acc, tau, ops) ^ ys[i];
  }
  return acc;
}

Element horner(const Element& tau, std::span<const Element> ys) noexcept {
  OpCounts ops;
  return horner(tau, ys, ops);
}

Element horner_decimated(const Element& tau, std::span<const Element> ys, std::size_t d, OpCounts& ops) {
  if(d == 0) {
    throw std::invalid_argument("decimation factor must be positive");
  }
  const std::size_t m = ys.size();
  // tau^0 .. tau^d
  std::vector<Element> powers(d + 1);
  powers[0] = Element::one();
  for(std::size_t k = 1; k <= d; ++k) {
    powers[k] = k == 1 ? tau : counted_mul(powers[k - 1], tau, ops);
  }
  const Element& step = powers[d];

  Element result = Element::zero();
  for(std::size_t s = 0; s < d && s < m; ++s) {
    // stride s holds P(s+1), P(s+1+d), ...; its weight is tau^((m - s - 1) mod d)
    Element acc = ys[s];
    for(std::size_t i = s + d; i < m; i += d) {
      acc = counted_mul(acc, step, ops) ^ ys[i];
    }
    const std::size_t chi = (m - s - 1) % d;
    result ^= chi == 0 ? acc : counted_mul(acc, powers[chi], ops);
  }
  return result;
}

Element horner_decimated(const Element& tau, std::span<const Element> ys, std::size_t d) {
  OpCounts ops;
  return horner_decimated(tau, ys, d, ops);
}

Element brw(const HashKey& key, std::span<const Element> ys, OpCounts& ops) {
  const auto get = [&](std::size_t i) -> const Element& { return ys[i]; };
  return brw_eval(key, get, ys.size(), ops);
}

Element brw(const HashKey& key, std::span<const Element> ys) {
  OpCounts ops;
  return brw(key, ys, ops);
}

std::size_t brw_mult_count(std::size_t m) noexcept { return m / 2; }

Element fast_h(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak,
               OpCounts& ops) {
  return counted_mul(key.tau(), polynomial(key, variant, tail, tweak, ops), ops);
}

Element fast_h(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak) {
  OpCounts ops;
  return fast_h(key, variant, tail, tweak, ops);
}

Element fast_hprime(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak,
                    OpCounts& ops) {
  return counted_mul(key.tau_sq(), polynomial(key, variant, tail, tweak, ops), ops);
}

Element fast_hprime(const HashKey& key, Variant variant, std::span<const Element> tail, const Element& tweak) {
  OpCounts ops;
  return fast_hprime(key, variant, tail, tweak, ops);
}

}  // namespace diskenc::hashing

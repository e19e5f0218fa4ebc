// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <atomic>
#include <memory>

#include "diskenc/aes128.hpp"

// Forwards to AES-128 and counts block evaluations.
class CountingPrf final : public diskenc::BlockFunction {
 public:
  explicit CountingPrf(const diskenc::Block& key) : m_aes(key) {}

  diskenc::Block eval(const diskenc::Block& x) const override {
    ++m_calls;
    return m_aes.eval(x);
  }
  void eval_many(std::span<const diskenc::Block> in, std::span<diskenc::Block> out) const override {
    m_calls += in.size();
    m_aes.eval_many(in, out);
  }

  std::size_t calls() const { return m_calls; }
  void reset() const { m_calls = 0; }

 private:
  diskenc::Aes128 m_aes;
  mutable std::atomic<std::size_t> m_calls{0};
};

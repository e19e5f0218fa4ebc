// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "diskenc/aes128.hpp"
#include "diskenc/aez.hpp"
#include "diskenc/fast.hpp"
#include "diskenc/gf128.hpp"
#include "diskenc/hashing.hpp"
#include "diskenc/pipeline.hpp"

namespace {

using diskenc::Block;

Block rand_block(std::mt19937_64& rng) {
  const std::uint64_t hi = rng();
  return {hi, rng()};
}

std::vector<std::uint8_t> rand_sector(std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(diskenc::kSectorBytes);
  for(auto& b : v) {
    b = static_cast<std::uint8_t>(rng());
  }
  return v;
}

void BM_GfMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Block a = rand_block(rng);
  const Block b = rand_block(rng);
  for(auto _ : state) {
    a = diskenc::gf128::mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_GfMul);

void BM_GfSquare(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Block a = rand_block(rng);
  for(auto _ : state) {
    a = diskenc::gf128::square(a);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_GfSquare);

void BM_Aes128Block(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const diskenc::Aes128 aes(rand_block(rng));
  Block x = rand_block(rng);
  for(auto _ : state) {
    x = aes.eval(x);
    benchmark::DoNotOptimize(x);
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * 16);
}
BENCHMARK(BM_Aes128Block);

void BM_Horner255(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const Block tau = rand_block(rng);
  std::vector<Block> ys(255);
  for(auto& y : ys) {
    y = rand_block(rng);
  }
  const auto d = static_cast<std::size_t>(state.range(0));
  for(auto _ : state) {
    benchmark::DoNotOptimize(d == 1 ? diskenc::hashing::horner(tau, ys) : diskenc::hashing::horner_decimated(tau, ys, d));
  }
}
BENCHMARK(BM_Horner255)->Arg(1)->Arg(4)->Arg(8);

void BM_Brw255(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const diskenc::hashing::HashKey key(rand_block(rng));
  std::vector<Block> ys(255);
  for(auto& y : ys) {
    y = rand_block(rng);
  }
  for(auto _ : state) {
    benchmark::DoNotOptimize(diskenc::hashing::brw(key, ys));
  }
}
BENCHMARK(BM_Brw255);

void BM_FastEncrypt(benchmark::State& state) {
  std::mt19937_64 rng(6);
  const auto variant = state.range(0) == 0 ? diskenc::hashing::Variant::Horner : diskenc::hashing::Variant::BRW;
  const diskenc::FastContext ctx(rand_block(rng), variant);
  const auto msg = rand_sector(rng);
  std::vector<std::uint8_t> out(diskenc::kSectorBytes);
  std::uint64_t sector = 0;
  for(auto _ : state) {
    ctx.encrypt(Block::from_integer(sector++), msg, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * diskenc::kSectorBytes);
  state.SetLabel(state.range(0) == 0 ? "horner" : "brw");
}
BENCHMARK(BM_FastEncrypt)->Arg(0)->Arg(1);

void BM_AezEncrypt(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto mode = state.range(0) == 0 ? diskenc::MaskMode::Precomputed : diskenc::MaskMode::OnTheFly;
  const diskenc::AezContext ctx(rand_block(rng), mode);
  const auto msg = rand_sector(rng);
  std::vector<std::uint8_t> out(diskenc::kSectorBytes);
  for(auto _ : state) {
    ctx.encrypt(msg, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * diskenc::kSectorBytes);
  state.SetLabel(state.range(0) == 0 ? "precomputed" : "on-the-fly");
}
BENCHMARK(BM_AezEncrypt)->Arg(0)->Arg(1);

void BM_PipelineSchedule(benchmark::State& state) {
  const auto cfg = diskenc::pipeline::ArchConfig::reference(diskenc::pipeline::Scheme::FastBrw, 2);
  for(auto _ : state) {
    benchmark::DoNotOptimize(diskenc::pipeline::schedule(cfg).total_cycles);
  }
}
BENCHMARK(BM_PipelineSchedule);

}  // namespace

BENCHMARK_MAIN();

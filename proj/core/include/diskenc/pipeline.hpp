// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diskenc/aez.hpp"

/// Cycle accounting for pipelined hardware realisations of the sector
/// schemes: AES encryption cores with an 11-cycle latency that accept one
/// block per cycle, and 4-stage pipelined GF(2^128) multipliers.
///
/// Cycles are counted from 0. An operation issued at cycle c on a unit with
/// latency L delivers its result at cycle c + L, where a dependent operation
/// may issue. Every figure comes from issue/latency arithmetic over the data
/// dependencies of the algorithm; the only free parameters are the named
/// synchronisation constants, which pad phase ends.
namespace diskenc::pipeline {

enum class Scheme { FastBrw, FastHorner, Aez };

std::string_view to_string(Scheme s) noexcept;
/// Accepts "fast-brw", "fast-horner", "aez".
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

/// Extra cycles appended to the end of a phase. Zero reproduces the bare
/// dependency schedule.
struct SyncConstants {
  int first_hash = 0;  ///< FAST: end of H (hash, tau*h, tau*A1)
  int finalize = 0;    ///< FAST: after the last G' multiplication; AEZ: after layer three
  int precompute = 0;  ///< AEZ precomputed masks: reset and memory synchronisation
  int mask_setup = 0;  ///< AEZ on-the-fly masks: before layer one

  bool operator==(const SyncConstants&) const = default;
};

struct ArchConfig {
  Scheme scheme = Scheme::FastBrw;
  int cores = 2;
  int aes_latency = 11;
  int mult_stages = 4;
  int multipliers = 1;
  MaskMode mask_mode = MaskMode::Precomputed;
  SyncConstants sync;

  /// The reference architecture: FAST-Horner with two cores gets two
  /// multipliers, other FAST variants one, AEZ none. Carries the shipped
  /// synchronisation constants.
  static ArchConfig reference(Scheme scheme, int cores, MaskMode mask_mode = MaskMode::Precomputed);
};

/// Shipped synchronisation constants for a reference architecture.
SyncConstants default_sync(Scheme scheme, int cores, MaskMode mask_mode);

struct Phase {
  std::string name;
  std::int64_t start = 0;
  std::int64_t end = 0;
  int sync = 0;  ///< cycles of `end` that come from a synchronisation constant

  std::int64_t cycles() const noexcept { return end - start; }
};

struct CycleReport {
  std::vector<Phase> phases;
  std::vector<Phase> precompute_phases;  ///< run once per key, before any sector
  std::int64_t total_cycles = 0;
  std::int64_t precompute_cycles = 0;  ///< AEZ precomputed masks; not part of total
  std::int64_t aes_calls = 0;
  std::int64_t mult_calls = 0;

  /// Throws std::out_of_range if absent.
  const Phase& phase(std::string_view name) const;
};

/// Throws std::invalid_argument for configurations outside the modelled
/// family (AEZ with other than two cores, wrong multiplier counts, ...).
void validate(const ArchConfig& cfg);

CycleReport schedule(const ArchConfig& cfg);

/// Greedy critical-path list schedule of the floor(m/2) multiplications of an
/// m-block BRW polynomial on one pipelined multiplier, all inputs available at
/// cycle 0. The total counts issue slots plus the final pipeline latency
/// (one multiplication on 4 stages: 5); m <= 1 reports 0. Phases: one "brw".
CycleReport schedule_brw_tree(std::size_t m, int mult_stages);

/// bits * freq / cycles in Gbps, rounded to two decimals. Throws
/// std::invalid_argument for non-positive inputs.
double throughput_gbps(std::int64_t cycles, double freq_mhz, std::int64_t bits = 32768);

// ---------------------------------------------------------------------------
// Multiplier DAG scheduling, exposed for tests.

struct MultOp {
  std::vector<std::size_t> deps;  ///< indices of earlier ops whose results are operands
  std::int64_t release = 0;       ///< earliest cycle the non-product operands exist
};

struct MultSchedule {
  std::vector<std::int64_t> issue;
  std::vector<std::int64_t> done;
  std::int64_t finish = 0;  ///< max(done), or `start` when there are no ops
};

/// List-schedules `ops` on `multipliers` identical pipelines of `stages`
/// cycles each, one issue per pipeline per cycle, starting at `start`.
/// Among ready ops the one with the longest remaining dependency chain goes
/// first.
MultSchedule list_schedule(const std::vector<MultOp>& ops, int multipliers, int stages, std::int64_t start);

/// The multiplication DAG of an m-block BRW polynomial. `block_release[k]`
/// is the cycle block k (0-based) becomes available (empty: all at 0).
std::vector<MultOp> brw_dag(std::size_t m, const std::vector<std::int64_t>& block_release = {});

}  // namespace diskenc::pipeline

// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace diskenc::pipeline {

namespace {

using Cycle = std::int64_t;

constexpr std::size_t kHashBlocks = kSectorBlocks - 1;  // X3..X256 plus the tweak
constexpr std::size_t kTailBlocks = kSectorBlocks - 2;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// One pipelined AES encryption core.
class AesCore {
 public:
  explicit AesCore(int latency, Cycle free_from = 0) : m_latency(latency), m_next(free_from) {}

  // Issues as soon as both the input and the core are ready; returns the
  // cycle the output is available.
  Cycle issue(Cycle ready) {
    const Cycle t = std::max(ready, m_next);
    m_next = t + 1;
    ++m_calls;
    return t + m_latency;
  }

  Cycle next_free() const noexcept { return m_next; }
  std::int64_t calls() const noexcept { return m_calls; }

 private:
  int m_latency;
  Cycle m_next;
  std::int64_t m_calls = 0;
};

void build_brw(std::size_t lo, std::size_t m, const std::vector<Cycle>& rel, std::vector<MultOp>& ops,
               std::vector<std::size_t>& covered) {
  const auto release = [&](std::size_t k) { return rel.empty() ? Cycle{0} : rel[k]; };
  if(m <= 1) {
    return;
  }
  if(m == 2) {
    // Y1 * tau; Y2 is only added
    covered.push_back(ops.size());
    ops.push_back({{}, release(lo)});
    return;
  }
  if(m == 3) {
    // (tau + Y1)(tau^2 + Y2); Y3 is only added
    covered.push_back(ops.size());
    ops.push_back({{}, std::max(release(lo), release(lo + 1))});
    return;
  }
  const std::size_t t = std::bit_floor(m);
  std::vector<std::size_t> left;
  build_brw(lo, t - 1, rel, ops, left);
  const std::size_t node = ops.size();
  ops.push_back({left, release(lo + t - 1)});
  covered.insert(covered.end(), left.begin(), left.end());
  covered.push_back(node);
  build_brw(lo + t, m - t, rel, ops, covered);
}

std::vector<std::size_t> all_indices(std::size_t first, std::size_t last) {
  std::vector<std::size_t> v;
  for(std::size_t i = first; i < last; ++i) {
    v.push_back(i);
  }
  return v;
}

// Multiplications building tau^e for 3 <= e <= max_exp that are not powers
// of two (those come from squaring circuits). Returns exponent -> op index.
std::map<std::size_t, std::size_t> add_power_ops(std::size_t max_exp, std::vector<MultOp>& ops, Cycle release) {
  std::map<std::size_t, std::size_t> index;
  for(std::size_t e = 3; e <= max_exp; ++e) {
    if(std::has_single_bit(e)) {
      continue;
    }
    const std::size_t rest = e - std::bit_floor(e);
    MultOp op{{}, release};
    if(const auto it = index.find(rest); it != index.end()) {
      op.deps.push_back(it->second);
    }
    index[e] = ops.size();
    ops.push_back(op);
  }
  return index;
}

// d-decimated Horner over coefficients with the given release cycles. Each
// stride s is evaluated at tau^d and then multiplied by tau^(chi_s + shift).
// Returns the indices of the d recombination ops.
std::vector<std::size_t> add_decimated_horner(std::size_t d, const std::vector<Cycle>& coeff_release, std::size_t shift,
                                              const std::map<std::size_t, std::size_t>& power_ops,
                                              std::vector<MultOp>& ops) {
  const std::size_t m = coeff_release.size();
  std::vector<std::size_t> outputs;
  for(std::size_t s = 0; s < d && s < m; ++s) {
    std::size_t prev_op = kNone;
    std::size_t prev_pos = s;
    for(std::size_t pos = s + d; pos < m; pos += d) {
      MultOp op{{}, coeff_release[prev_pos]};
      if(prev_op != kNone) {
        op.deps.push_back(prev_op);
      }
      prev_op = ops.size();
      ops.push_back(op);
      prev_pos = pos;
    }
    const std::size_t exponent = (m - s - 1) % d + shift;
    MultOp recombine{{}, coeff_release[prev_pos]};
    if(prev_op != kNone) {
      recombine.deps.push_back(prev_op);
    }
    if(const auto it = power_ops.find(exponent); it != power_ops.end()) {
      recombine.deps.push_back(it->second);
    }
    outputs.push_back(ops.size());
    ops.push_back(recombine);
  }
  return outputs;
}

std::size_t decimation(const ArchConfig& cfg) {
  return static_cast<std::size_t>(cfg.multipliers) * static_cast<std::size_t>(cfg.mult_stages);
}

CycleReport schedule_fast(const ArchConfig& cfg) {
  const int aes_lat = cfg.aes_latency;
  const int stages = cfg.mult_stages;
  const bool brw = cfg.scheme == Scheme::FastBrw;
  CycleReport report;

  // tau = F_K(fStr) on the odd core
  AesCore odd(aes_lat);
  AesCore even(aes_lat);
  const Cycle tau_ready = odd.issue(0);
  report.phases.push_back({"tau", 0, tau_ready, 0});

  // H: polynomial, tau * poly, tau * A1
  std::vector<MultOp> first;
  std::size_t h_final = 0;
  if(brw) {
    std::vector<std::size_t> covered;
    build_brw(0, kHashBlocks, {}, first, covered);
    first.push_back({all_indices(0, first.size()), 0});
    first.push_back({{first.size() - 1}, 0});
    h_final = first.size() - 1;
  } else {
    const std::size_t d = decimation(cfg);
    // powers for both hashes: tau^(chi+1) for h, tau^(chi+2) for h'
    const auto powers = add_power_ops(d + 1, first, 0);
    const std::vector<Cycle> coeffs(kHashBlocks + 1, 0);  // leading 1, X3..X256, T
    const auto recombined = add_decimated_horner(d, coeffs, 1, powers, first);
    first.push_back({recombined, 0});
    h_final = first.size() - 1;
  }
  const MultSchedule h_sched = list_schedule(first, cfg.multipliers, stages, tau_ready);
  const Cycle h_end = h_sched.done[h_final] + cfg.sync.first_hash;
  report.phases.push_back({"first_hash", tau_ready, h_end, cfg.sync.first_hash});

  // Feistel round one: F2 = A1 ^ F_K(F1)
  const Cycle f2_ready = odd.issue(h_end);
  report.phases.push_back({"feistel", h_end, f2_ready, 0});

  // Feistel round two (B2 = F1 ^ F_K(F2)) then the counter J_i = Z ^ bin(i).
  // Two cores deliver J_(2j-1) and J_(2j) in the same cycle.
  const Cycle b2_ready = odd.issue(f2_ready);
  std::vector<Cycle> ct_ready(kTailBlocks);
  if(cfg.cores == 2) {
    for(std::size_t k = 0; k < kTailBlocks; k += 2) {
      const Cycle ready = std::max(odd.next_free(), even.next_free());
      ct_ready[k] = odd.issue(ready);
      ct_ready[k + 1] = even.issue(ready);
    }
  } else {
    for(auto& c : ct_ready) {
      c = odd.issue(f2_ready);
    }
  }
  const Cycle ctr_end = *std::max_element(ct_ready.begin(), ct_ready.end());
  report.phases.push_back({"counter", f2_ready, ctr_end, 0});

  // G': h' over C3..C256 and T as ciphertext blocks arrive, then C1 = F2 ^ tau * C2
  std::vector<MultOp> second;
  std::size_t hp_final = 0;
  if(brw) {
    std::vector<Cycle> release(ct_ready);
    release.push_back(0);  // tweak
    std::vector<std::size_t> covered;
    build_brw(0, kHashBlocks, release, second, covered);
    second.push_back({covered, 0});  // tau^2 * BRW
    hp_final = second.size() - 1;
    // tau * B2 only needs B2, but the controller issues the single-block
    // products after the polynomial, as in H
    second.push_back({{hp_final}, b2_ready});
  } else {
    std::vector<Cycle> coeffs;
    coeffs.push_back(0);
    coeffs.insert(coeffs.end(), ct_ready.begin(), ct_ready.end());
    coeffs.push_back(0);
    const auto recombined = add_decimated_horner(decimation(cfg), coeffs, 2, {}, second);
    second.push_back({recombined, b2_ready});
  }
  const MultSchedule g_sched = list_schedule(second, cfg.multipliers, stages, f2_ready);
  const Cycle first_arrival = *std::min_element(ct_ready.begin(), ct_ready.end());
  Cycle hp_done = 0;
  if(brw) {
    hp_done = g_sched.done[hp_final];
  } else {
    for(std::size_t i = 0; i + 1 < second.size(); ++i) {
      hp_done = std::max(hp_done, g_sched.done[i]);
    }
  }
  report.phases.push_back({"second_hash", first_arrival, hp_done, 0});
  const Cycle total = g_sched.done.back() + cfg.sync.finalize;
  report.phases.push_back({"finalize", hp_done, total, cfg.sync.finalize});

  report.total_cycles = total;
  report.aes_calls = odd.calls() + even.calls();
  report.mult_calls = static_cast<std::int64_t>(first.size() + second.size());
  return report;
}

CycleReport schedule_aez(const ArchConfig& cfg) {
  const int aes_lat = cfg.aes_latency;
  const auto pairs = static_cast<std::int64_t>(AezContext::kPairs);
  CycleReport report;

  // I = E_K(0), J = E_K(1) back to back on one core; "done" is one cycle
  // after the later output.
  const Cycle ij_done = aes_lat + 2;
  Cycle start = 0;
  if(cfg.mask_mode == MaskMode::Precomputed) {
    // j*J for j = 1..127 by double-and-add, one per cycle; i*I alongside
    const Cycle table_done = ij_done + pairs;
    report.precompute_cycles = table_done + cfg.sync.precompute;
    report.precompute_phases.push_back({"masks_ij", 0, ij_done, 0});
    report.precompute_phases.push_back({"masks_j_table", ij_done, report.precompute_cycles, cfg.sync.precompute});
  } else {
    // the doublings J, 2J, ..., 64J are latched one cycle after J
    start = ij_done + 1 + cfg.sync.mask_setup;
    report.phases.push_back({"mask_setup", 0, start, cfg.sync.mask_setup});
  }

  // AES' computes W_i = M_i ^ E~(1,i)(M'_i) and then E~(0,1)(M_y);
  // AES computes X_i = M'_i ^ E~(0,0)(W_i) as each W_i emerges, then S_y.
  AesCore core_a(aes_lat, start);
  AesCore core_b(aes_lat, start);
  Cycle x_sum = start;
  std::vector<Cycle> w_ready(static_cast<std::size_t>(pairs));
  for(auto& w : w_ready) {
    w = core_b.issue(start);
  }
  const Cycle my_ready = core_b.issue(start);
  for(const auto w : w_ready) {
    x_sum = std::max(x_sum, core_a.issue(w));
  }
  const Cycle sx_ready = std::max(x_sum, my_ready);
  const Cycle sy_ready = core_a.issue(sx_ready);
  report.phases.push_back({"layer1", start, sy_ready, 0});

  // S'_i = E~(2,i)(S) split across both cores
  const Cycle l2_start = sy_ready;
  AesCore* cores[2] = {&core_a, &core_b};
  Cycle l2_end = l2_start;
  for(std::int64_t i = 0; i < pairs; ++i) {
    l2_end = std::max(l2_end, cores[i % 2]->issue(l2_start));
  }
  report.phases.push_back({"layer2", l2_start, l2_end, 0});

  // AES' computes C'_i = Y_i ^ E~(0,0)(Z_i) then C_y; AES computes
  // C_i = Z_i ^ E~(1,i)(C'_i) then C_x.
  const Cycle l3_start = l2_end;
  Cycle l3_end = l3_start;
  std::vector<Cycle> cp_ready(static_cast<std::size_t>(pairs));
  for(auto& c : cp_ready) {
    c = core_b.issue(l3_start);
  }
  const Cycle cy_ready = core_b.issue(l3_start);
  for(const auto c : cp_ready) {
    l3_end = std::max(l3_end, core_a.issue(c));
  }
  l3_end = std::max(l3_end, core_a.issue(cy_ready));
  const Cycle total = l3_end + cfg.sync.finalize;
  report.phases.push_back({"layer3", l3_start, total, cfg.sync.finalize});

  report.total_cycles = total;
  report.aes_calls = 2 + core_a.calls() + core_b.calls();
  report.mult_calls = 0;
  return report;
}

}  // namespace

std::string_view to_string(Scheme s) noexcept {
  switch(s) {
    case Scheme::FastBrw:
      return "fast-brw";
    case Scheme::FastHorner:
      return "fast-horner";
    case Scheme::Aez:
      return "aez";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) noexcept {
  for(const auto s : {Scheme::FastBrw, Scheme::FastHorner, Scheme::Aez}) {
    if(to_string(s) == name) {
      return s;
    }
  }
  return std::nullopt;
}

SyncConstants default_sync(Scheme scheme, int cores, MaskMode mask_mode) {
  // Calibrated so schedule() totals equal the reference cycle counts. The
  // first-hash pad is shared by all FAST designs; whatever remains sits at
  // the end of G'.
  switch(scheme) {
    case Scheme::FastBrw:
      return cores == 2 ? SyncConstants{3, 3, 0, 0} : SyncConstants{3, 14, 0, 0};
    case Scheme::FastHorner:
      return cores == 2 ? SyncConstants{3, 2, 0, 0} : SyncConstants{3, 2, 0, 0};
    case Scheme::Aez:
      return mask_mode == MaskMode::Precomputed ? SyncConstants{0, 7, 5, 0} : SyncConstants{0, 7, 0, 1};
  }
  return {};
}

ArchConfig ArchConfig::reference(Scheme scheme, int cores, MaskMode mask_mode) {
  ArchConfig cfg;
  cfg.scheme = scheme;
  cfg.cores = cores;
  cfg.mask_mode = mask_mode;
  cfg.multipliers = scheme == Scheme::Aez ? 0 : (scheme == Scheme::FastHorner && cores == 2 ? 2 : 1);
  cfg.sync = default_sync(scheme, cores, mask_mode);
  return cfg;
}

const Phase& CycleReport::phase(std::string_view name) const {
  for(const auto& p : phases) {
    if(p.name == name) {
      return p;
    }
  }
  throw std::out_of_range("no phase named " + std::string(name));
}

void validate(const ArchConfig& cfg) {
  if(cfg.aes_latency < 1 || cfg.mult_stages < 1) {
    throw std::invalid_argument("aes_latency and mult_stages must be at least 1");
  }
  const SyncConstants& s = cfg.sync;
  if(s.first_hash < 0 || s.finalize < 0 || s.precompute < 0 || s.mask_setup < 0) {
    throw std::invalid_argument("synchronisation constants must be non-negative");
  }
  switch(cfg.scheme) {
    case Scheme::Aez:
      if(cfg.cores != 2) {
        throw std::invalid_argument("the AEZ architecture uses exactly two AES cores");
      }
      if(cfg.multipliers != 0) {
        throw std::invalid_argument("the AEZ architecture has no multiplier");
      }
      break;
    case Scheme::FastBrw:
    case Scheme::FastHorner: {
      if(cfg.cores != 1 && cfg.cores != 2) {
        throw std::invalid_argument("FAST architectures use one or two AES cores");
      }
      const int expected = cfg.scheme == Scheme::FastHorner && cfg.cores == 2 ? 2 : 1;
      if(cfg.multipliers != expected) {
        throw std::invalid_argument("FAST " + std::string(to_string(cfg.scheme)) + " with " +
                                    std::to_string(cfg.cores) + " core(s) uses " + std::to_string(expected) +
                                    " multiplier(s)");
      }
      break;
    }
  }
}

CycleReport schedule(const ArchConfig& cfg) {
  validate(cfg);
  return cfg.scheme == Scheme::Aez ? schedule_aez(cfg) : schedule_fast(cfg);
}

CycleReport schedule_brw_tree(std::size_t m, int mult_stages) {
  if(mult_stages < 1) {
    throw std::invalid_argument("mult_stages must be at least 1");
  }
  const auto ops = brw_dag(m);
  const MultSchedule s = list_schedule(ops, 1, mult_stages, 0);
  CycleReport report;
  // issue slots plus pipeline latency: the cycle a result becomes usable
  // is itself counted
  const std::int64_t total = ops.empty() ? 0 : s.finish + 1;
  report.phases.push_back({"brw", 0, total, 0});
  report.total_cycles = total;
  report.mult_calls = static_cast<std::int64_t>(ops.size());
  return report;
}

double throughput_gbps(std::int64_t cycles, double freq_mhz, std::int64_t bits) {
  if(cycles <= 0 || !(freq_mhz > 0.0) || bits <= 0) {
    throw std::invalid_argument("throughput needs positive cycles, frequency and bit count");
  }
  const double gbps = static_cast<double>(bits) * freq_mhz / static_cast<double>(cycles) / 1000.0;
  return std::round(gbps * 100.0) / 100.0;
}

MultSchedule list_schedule(const std::vector<MultOp>& ops, int multipliers, int stages, std::int64_t start) {
  if(multipliers < 1 || stages < 1) {
    throw std::invalid_argument("list_schedule needs at least one multiplier and one stage");
  }
  const std::size_t n = ops.size();
  MultSchedule out;
  out.issue.assign(n, -1);
  out.done.assign(n, -1);
  out.finish = start;

  std::vector<std::vector<std::size_t>> children(n);
  for(std::size_t i = 0; i < n; ++i) {
    for(const auto d : ops[i].deps) {
      if(d >= i) {
        throw std::invalid_argument("list_schedule: ops must be in dependency order");
      }
      children[d].push_back(i);
    }
  }
  std::vector<std::int64_t> chain(n, 0);
  for(std::size_t i = n; i-- > 0;) {
    std::int64_t longest = 0;
    for(const auto c : children[i]) {
      longest = std::max(longest, chain[c]);
    }
    chain[i] = stages + longest;
  }

  // earliest issue cycle once all deps are issued, else -1
  const auto ready_at = [&](std::size_t i) -> Cycle {
    Cycle t = std::max(start, ops[i].release);
    for(const auto d : ops[i].deps) {
      if(out.done[d] < 0) {
        return -1;
      }
      t = std::max(t, out.done[d]);
    }
    return t;
  };

  std::size_t remaining = n;
  Cycle t = start;
  std::vector<std::size_t> candidates;
  while(remaining > 0) {
    candidates.clear();
    Cycle next = std::numeric_limits<Cycle>::max();
    for(std::size_t i = 0; i < n; ++i) {
      if(out.issue[i] >= 0) {
        continue;
      }
      const Cycle r = ready_at(i);
      if(r < 0) {
        continue;
      }
      if(r <= t) {
        candidates.push_back(i);
      } else {
        next = std::min(next, r);
      }
    }
    if(candidates.empty()) {
      t = next;
      continue;
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](std::size_t a, std::size_t b) { return chain[a] > chain[b]; });
    const std::size_t take = std::min<std::size_t>(candidates.size(), static_cast<std::size_t>(multipliers));
    for(std::size_t k = 0; k < take; ++k) {
      const std::size_t i = candidates[k];
      out.issue[i] = t;
      out.done[i] = t + stages;
      out.finish = std::max(out.finish, out.done[i]);
      --remaining;
    }
    ++t;
  }
  return out;
}

std::vector<MultOp> brw_dag(std::size_t m, const std::vector<std::int64_t>& block_release) {
  if(!block_release.empty() && block_release.size() != m) {
    throw std::invalid_argument("brw_dag: release vector length must equal m");
  }
  std::vector<MultOp> ops;
  std::vector<std::size_t> covered;
  build_brw(0, m, block_release, ops, covered);
  return ops;
}

}  // namespace diskenc::pipeline

// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diskenc/image.hpp"
#include "diskenc/pipeline.hpp"
#include "diskenc/vectors.hpp"

namespace {

using namespace diskenc;

const std::map<std::string, Scheme> kSchemes = {
    {"fast-brw", Scheme::FastBrw}, {"fast-horner", Scheme::FastHorner}, {"aez", Scheme::Aez}};
const std::map<std::string, MaskMode> kMaskModes = {{"precomputed", MaskMode::Precomputed},
                                                    {"on-the-fly", MaskMode::OnTheFly}};

struct KeyOptions {
  Scheme scheme = Scheme::FastBrw;
  std::string key_hex;
  std::string fstr_hex = std::string(32, '0');
  MaskMode mask_mode = MaskMode::Precomputed;
};

// Enum options go through strings: CLI11's enum support trips over the
// library's own to_string overloads.
template <typename E>
void add_enum(CLI::App* cmd, const std::string& flag, E& target, const std::map<std::string, E>& names,
              const std::string& help, bool required) {
  std::vector<std::string> keys;
  for(const auto& [name, value] : names) {
    keys.push_back(name);
  }
  auto* opt = cmd->add_option_function<std::string>(
      flag, [&target, &names](const std::string& v) { target = names.at(v); }, help);
  opt->check(CLI::IsMember(keys));
  if(required) {
    opt->required();
  }
}

void add_scheme(CLI::App* cmd, Scheme& scheme) {
  add_enum(cmd, "--scheme", scheme, kSchemes, "fast-brw | fast-horner | aez", true);
}

void add_mask_mode(CLI::App* cmd, MaskMode& mode) {
  add_enum(cmd, "--mask-mode", mode, kMaskModes, "AEZ masks: precomputed | on-the-fly (default precomputed)", false);
}

void add_key_options(CLI::App* cmd, KeyOptions& k) {
  add_scheme(cmd, k.scheme);
  cmd->add_option("--key-hex", k.key_hex, "AES-128 key, 32 hex digits")->required();
  cmd->add_option("--fstr-hex", k.fstr_hex, "FAST hash-key seed fStr, 32 hex digits")->capture_default_str();
  add_mask_mode(cmd, k.mask_mode);
}

Block parse_hex_block(const std::string& hex, const char* what) {
  try {
    return Block::from_hex(hex);
  } catch(const std::invalid_argument& e) {
    throw CLI::ValidationError(std::string(what) + ": " + e.what());
  }
}

int run_image_command(const KeyOptions& k, Direction dir, const std::string& in, const std::string& out,
                      std::uint64_t start_sector, unsigned jobs) {
  ImageJob job;
  job.input = in;
  job.output = out;
  job.scheme = k.scheme;
  job.key = parse_hex_block(k.key_hex, "--key-hex");
  job.fstr = parse_hex_block(k.fstr_hex, "--fstr-hex");
  job.mask_mode = k.mask_mode;
  job.start_sector = start_sector;
  job.direction = dir;
  job.jobs = jobs;
  const ImageSummary s = run_image(job);
  std::cerr << s.sectors << " sectors, " << s.bytes << " bytes in " << std::fixed << std::setprecision(3)
            << s.seconds << " s (" << std::setprecision(1) << s.mb_per_s << " MB/s)\n";
  return 0;
}

int vectors_gen(Scheme scheme, std::size_t count, std::uint64_t seed, const std::string& out) {
  const auto file = vectors::generate(scheme, count, seed);
  if(out.empty() || out == "-") {
    vectors::write(std::cout, file);
    return std::cout ? 0 : 1;
  }
  std::ofstream os(out, std::ios::binary | std::ios::trunc);
  vectors::write(os, file);
  os.close();
  if(!os) {
    throw std::runtime_error("write failed on " + out);
  }
  return 0;
}

int vectors_verify(const std::vector<std::string>& files) {
  int failures = 0;
  for(const auto& path : files) {
    std::ifstream is(path, std::ios::binary);
    if(!is) {
      std::cerr << path << ": cannot open\n";
      ++failures;
      continue;
    }
    vectors::VectorFile file;
    try {
      file = vectors::parse(is);
    } catch(const vectors::FormatError& e) {
      std::cerr << path << ":" << e.line() << ": " << e.what() << "\n";
      ++failures;
      continue;
    }
    std::size_t passed = 0;
    for(const auto& o : vectors::verify(file)) {
      const std::string label = o.name.empty() ? "#" + std::to_string(o.index) : o.name;
      if(o.ok()) {
        ++passed;
        std::cout << path << ":" << o.line << ": " << label << " PASS\n";
      } else {
        ++failures;
        std::cout << path << ":" << o.line << ": " << label << " FAIL (encrypt " << (o.encrypt_ok ? "ok" : "mismatch")
                  << ", decrypt " << (o.decrypt_ok ? "ok" : "mismatch") << ")\n";
      }
    }
    std::cout << path << ": " << passed << "/" << file.records.size() << " records pass ("
              << pipeline::to_string(file.scheme) << ")\n";
  }
  return failures == 0 ? 0 : 1;
}

int report_cycles(Scheme scheme, int cores, MaskMode mode, const std::vector<double>& freqs, bool zero_sync,
                  bool json) {
  auto cfg = pipeline::ArchConfig::reference(scheme, cores, mode);
  if(zero_sync) {
    cfg.sync = {};
  }
  const auto report = pipeline::schedule(cfg);
  if(json) {
    const auto emit = [&](const pipeline::Phase& p, const char* group) {
      nlohmann::json j = {{"record", "phase"}, {"group", group},  {"name", p.name},
                          {"start", p.start},  {"end", p.end},    {"cycles", p.cycles()},
                          {"sync", p.sync}};
      std::cout << j.dump() << "\n";
    };
    for(const auto& p : report.precompute_phases) {
      emit(p, "precompute");
    }
    for(const auto& p : report.phases) {
      emit(p, "sector");
    }
    nlohmann::json total = {{"record", "total"},
                            {"scheme", pipeline::to_string(scheme)},
                            {"cores", cores},
                            {"total_cycles", report.total_cycles},
                            {"precompute_cycles", report.precompute_cycles},
                            {"aes_calls", report.aes_calls},
                            {"mult_calls", report.mult_calls}};
    std::cout << total.dump() << "\n";
    for(const double f : freqs) {
      std::cout << nlohmann::json{{"record", "throughput"},
                                  {"freq_mhz", f},
                                  {"gbps", pipeline::throughput_gbps(report.total_cycles, f)}}
                       .dump()
                << "\n";
    }
    return 0;
  }

  std::cout << pipeline::to_string(scheme) << ", " << cores << " AES core(s), " << cfg.multipliers
            << " multiplier(s)";
  if(scheme == Scheme::Aez) {
    std::cout << ", " << (mode == MaskMode::Precomputed ? "precomputed" : "on-the-fly") << " masks";
  }
  std::cout << (zero_sync ? ", no sync cycles" : "") << "\n\n";
  const auto table = [](const std::vector<pipeline::Phase>& phases) {
    std::cout << std::left << std::setw(16) << "phase" << std::right << std::setw(8) << "start" << std::setw(8)
              << "end" << std::setw(8) << "cycles" << std::setw(6) << "sync" << "\n";
    for(const auto& p : phases) {
      std::cout << std::left << std::setw(16) << p.name << std::right << std::setw(8) << p.start << std::setw(8)
                << p.end << std::setw(8) << p.cycles() << std::setw(6) << p.sync << "\n";
    }
  };
  if(!report.precompute_phases.empty()) {
    std::cout << "per-key precomputation\n";
    table(report.precompute_phases);
    std::cout << "\nper sector\n";
  }
  table(report.phases);
  std::cout << "\ntotal cycles: " << report.total_cycles;
  if(report.precompute_cycles > 0) {
    std::cout << " (+" << report.precompute_cycles << " precompute)";
  }
  std::cout << "\nAES calls: " << report.aes_calls << "  multiplications: " << report.mult_calls << "\n";
  for(const double f : freqs) {
    std::cout << std::fixed << std::setprecision(2) << f
              << " MHz: " << pipeline::throughput_gbps(report.total_cycles, f) << " Gbps\n";
  }
  return 0;
}

int bench(const KeyOptions& k, std::size_t sectors, unsigned jobs, std::uint64_t seed) {
  (void)jobs;
  const SectorCipher cipher(k.scheme, parse_hex_block(k.key_hex, "--key-hex"), parse_hex_block(k.fstr_hex, "--fstr-hex"),
                            k.mask_mode);
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> buf(kSectorBytes), out(kSectorBytes);
  for(auto& b : buf) {
    b = static_cast<std::uint8_t>(rng());
  }
  const auto run = [&](Direction dir) {
    const auto t0 = std::chrono::steady_clock::now();
    for(std::size_t s = 0; s < sectors; ++s) {
      const Block tweak = Block::from_integer(s);
      if(dir == Direction::Encrypt) {
        cipher.encrypt(tweak, buf, out);
      } else {
        cipher.decrypt(tweak, buf, out);
      }
      buf.swap(out);
    }
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  for(const auto dir : {Direction::Encrypt, Direction::Decrypt}) {
    const double secs = run(dir);
    const double mbps = static_cast<double>(sectors * kSectorBytes) / secs / 1e6;
    std::cout << pipeline::to_string(k.scheme) << (dir == Direction::Encrypt ? " encrypt: " : " decrypt: ")
              << sectors << " sectors in " << std::fixed << std::setprecision(3) << secs << " s, "
              << std::setprecision(1) << mbps << " MB/s, " << std::setprecision(2)
              << secs * 1e6 / static_cast<double>(sectors) << " us/sector\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sector encryption for raw disk images (FAST and AEZ-Core), plus hardware cycle reports"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "diskenc 0.1.0");

  int rc = 0;

  // encrypt / decrypt
  for(const auto dir : {Direction::Encrypt, Direction::Decrypt}) {
    const bool enc = dir == Direction::Encrypt;
    auto* cmd = app.add_subcommand(enc ? "encrypt" : "decrypt",
                                   enc ? "Encrypt a raw image sector by sector" : "Decrypt a raw image");
    auto k = std::make_shared<KeyOptions>();
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto start = std::make_shared<std::uint64_t>(0);
    auto jobs = std::make_shared<unsigned>(1);
    add_key_options(cmd, *k);
    cmd->add_option("--start-sector", *start, "Absolute index of the first sector (tweak base)")
        ->capture_default_str();
    cmd->add_option("--jobs", *jobs, "Worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    cmd->add_option("input", *in, "Input image (size a multiple of 4096)")->required()->check(CLI::ExistingFile);
    cmd->add_option("output", *out, "Output image")->required();
    cmd->callback([=, &rc] { rc = run_image_command(*k, dir, *in, *out, *start, *jobs); });
  }

  // vectors gen | verify
  auto* vec = app.add_subcommand("vectors", "Generate or verify known-answer vector files");
  vec->require_subcommand(1);
  auto* gen = vec->add_subcommand("gen", "Write deterministic vectors");
  Scheme gen_scheme = Scheme::FastBrw;
  std::size_t gen_count = 16;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  add_scheme(gen, gen_scheme);
  gen->add_option("--count", gen_count, "Number of records")->capture_default_str();
  gen->add_option("--seed", gen_seed, "PRNG seed")->capture_default_str();
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");
  gen->callback([&] { rc = vectors_gen(gen_scheme, gen_count, gen_seed, gen_out); });

  auto* ver = vec->add_subcommand("verify", "Recompute every record; exit 1 on any mismatch");
  std::vector<std::string> ver_files;
  ver->add_option("files", ver_files, "Vector files")->required();
  ver->callback([&] { rc = vectors_verify(ver_files); });

  // cycles
  auto* cyc = app.add_subcommand("cycles", "Cycle-accurate schedule of the hardware architectures");
  Scheme cyc_scheme = Scheme::FastBrw;
  int cyc_cores = 2;
  MaskMode cyc_mode = MaskMode::Precomputed;
  std::vector<double> cyc_freqs;
  bool cyc_json = false;
  bool cyc_zero = false;
  add_scheme(cyc, cyc_scheme);
  cyc->add_option("--cores", cyc_cores, "AES cores (1 or 2)")->capture_default_str();
  add_mask_mode(cyc, cyc_mode);
  cyc->add_option("--freq-mhz", cyc_freqs, "Clock frequencies for the throughput table")
      ->check(CLI::PositiveNumber);
  cyc->add_flag("--json", cyc_json, "One JSON record per line");
  cyc->add_flag("--zero-sync", cyc_zero, "Drop the synchronisation cycles");
  cyc->callback([&] { rc = report_cycles(cyc_scheme, cyc_cores, cyc_mode, cyc_freqs, cyc_zero, cyc_json); });

  // bench
  auto* b = app.add_subcommand("bench", "Single-thread software throughput");
  KeyOptions bench_key;
  bench_key.key_hex = std::string(32, '0');
  std::size_t bench_count = 2048;
  unsigned bench_jobs = 1;
  std::uint64_t bench_seed = 1;
  add_scheme(b, bench_key.scheme);
  b->add_option("--key-hex", bench_key.key_hex, "AES-128 key")->capture_default_str();
  b->add_option("--fstr-hex", bench_key.fstr_hex, "FAST fStr")->capture_default_str();
  add_mask_mode(b, bench_key.mask_mode);
  b->add_option("--count", bench_count, "Sectors per direction")->check(CLI::PositiveNumber)->capture_default_str();
  b->add_option("--seed", bench_seed, "PRNG seed for the sector contents")->capture_default_str();
  b->callback([&] { rc = bench(bench_key, bench_count, bench_jobs, bench_seed); });

  try {
    app.parse(argc, argv);
  } catch(const CLI::ParseError& e) {
    return app.exit(e);
  } catch(const std::exception& e) {
    std::cerr << "diskenc: " << e.what() << "\n";
    return 1;
  }
  return rc;
}

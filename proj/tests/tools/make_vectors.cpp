// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

// Writes tests/vectors/*.vec from the straight-line oracles only. The
// library is used for nothing but hex formatting.
//
//   make_vectors <output-dir>

#include <fstream>
#include <iostream>
#include <random>
#include <string>

#include "oracles.hpp"

namespace {

using diskenc::Block;

constexpr std::uint64_t kSeed = 20261015;
constexpr int kRandomRecords = 16;
constexpr const char* kLicense =
    "# Copyright 2026 The diskenc Authors. Licensed under the Apache License,\n"
    "# Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0\n";

Block random_block(std::mt19937_64& rng) {
  const std::uint64_t hi = rng();
  return {hi, rng()};
}

std::vector<std::uint8_t> random_sector(std::mt19937_64& rng) {
  std::vector<std::uint8_t> v(diskenc::kSectorBytes);
  for(auto& b : v) {
    b = static_cast<std::uint8_t>(rng() >> 56);
  }
  return v;
}

void fast_file(const std::string& path, bool brw) {
  std::ofstream os(path);
  os << kLicense;
  os << "diskenc-vectors 1 " << (brw ? "fast-brw" : "fast-horner") << "\n";
  os << "# FAST[AES," << (brw ? "BRW" : "Horner") << "] over 4096-byte sectors (256 blocks, big-endian).\n";
  os << "# golden: key = 0, fstr = 0, tweak = bin(1), pt = 00 01 02 ... ff 00 01 ...\n";
  const auto emit = [&](const std::string& name, const Block& key, const Block& fstr, const Block& tweak,
                        const std::vector<std::uint8_t>& pt) {
    const auto ct = oracle::fast_encrypt(key, fstr, brw, tweak, pt);
    os << "name=" << name << " key=" << key.to_hex() << " fstr=" << fstr.to_hex() << " tweak=" << tweak.to_hex()
       << " pt=" << diskenc::to_hex(pt) << " ct=" << diskenc::to_hex(ct) << "\n";
  };
  emit("golden", Block::zero(), Block::zero(), Block::from_integer(1), oracle::cyclic_sector());
  std::mt19937_64 rng(kSeed + (brw ? 1 : 2));
  for(int i = 0; i < kRandomRecords; ++i) {
    const Block key = random_block(rng);
    const Block fstr = random_block(rng);
    const Block tweak = random_block(rng);
    emit("r" + std::to_string(i), key, fstr, tweak, random_sector(rng));
  }
}

void aez_file(const std::string& path) {
  std::ofstream os(path);
  os << kLicense;
  os << "diskenc-vectors 1 aez\n";
  os << "# AEZ-Core with Delta = 0. Sector bytes map to blocks M1, M1', ..., M127, M127', Mx, My.\n";
  os << "# golden: key = 0, pt = 00 01 02 ... ff 00 01 ...\n";
  const auto emit = [&](const std::string& name, const Block& key, const std::vector<std::uint8_t>& pt) {
    os << "name=" << name << " key=" << key.to_hex() << " pt=" << diskenc::to_hex(pt)
       << " ct=" << diskenc::to_hex(oracle::aez_encrypt(key, pt)) << "\n";
  };
  emit("golden", Block::zero(), oracle::cyclic_sector());
  std::mt19937_64 rng(kSeed + 3);
  for(int i = 0; i < kRandomRecords; ++i) {
    const Block key = random_block(rng);
    emit("r" + std::to_string(i), key, random_sector(rng));
  }
}

}  // namespace

int main(int argc, char** argv) {
  if(argc != 2) {
    std::cerr << "usage: make_vectors <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  fast_file(dir + "/fast-brw.vec", true);
  fast_file(dir + "/fast-horner.vec", false);
  aez_file(dir + "/aez.vec");
  return 0;
}

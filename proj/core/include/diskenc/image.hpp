// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <filesystem>

#include "diskenc/sector_cipher.hpp"

namespace diskenc {

enum class Direction { Encrypt, Decrypt };

/// Sector-wise processing of a raw image: a headerless file whose size is a
/// multiple of 4096 bytes. Sector s of the file uses the tweak
/// bin_128(start_sector + s), i.e. the absolute 0-based sector index stored
/// big-endian in the low half of the block.
struct ImageJob {
  std::filesystem::path input;
  std::filesystem::path output;
  Scheme scheme = Scheme::FastBrw;
  Block key;
  Block fstr;
  MaskMode mask_mode = MaskMode::Precomputed;
  std::uint64_t start_sector = 0;
  Direction direction = Direction::Encrypt;
  unsigned jobs = 1;
};

struct ImageSummary {
  std::uint64_t sectors = 0;
  std::uint64_t bytes = 0;
  double seconds = 0.0;
  double mb_per_s = 0.0;  ///< 10^6 bytes per second
};

/// Output bytes do not depend on job.jobs. Throws std::invalid_argument for
/// bad jobs (size, same path, zero workers, sector index overflow) and
/// std::runtime_error for I/O failures; a partially written output is removed.
ImageSummary run_image(const ImageJob& job);

}  // namespace diskenc

// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/image.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace diskenc {

namespace {

constexpr std::uint64_t kChunkSectors = 1024;

// Processes sectors [0, count) of buf in place; worker w takes a contiguous slice.
void process_chunk(const SectorCipher& cipher, Direction dir, std::uint64_t first_sector, std::uint8_t* buf,
                   std::uint64_t count, unsigned jobs) {
  std::vector<std::uint8_t> scratch_all(static_cast<std::size_t>(jobs) * kSectorBytes);
  const auto work = [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::uint8_t* scratch = scratch_all.data() + static_cast<std::size_t>(w) * kSectorBytes;
    for(std::uint64_t s = lo; s < hi; ++s) {
      std::span<std::uint8_t> sector(buf + s * kSectorBytes, kSectorBytes);
      const Block tweak = Block::from_integer(first_sector + s);
      std::span<std::uint8_t, kSectorBytes> out(scratch, kSectorBytes);
      if(dir == Direction::Encrypt) {
        cipher.encrypt(tweak, sector, out);
      } else {
        cipher.decrypt(tweak, sector, out);
      }
      std::copy(out.begin(), out.end(), sector.begin());
    }
  };

  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));
  if(workers <= 1) {
    work(0, 0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for(unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = count * w / workers;
      const std::uint64_t hi = count * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        try {
          work(w, lo, hi);
        } catch(...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for(const auto& e : errors) {
    if(e) {
      std::rethrow_exception(e);
    }
  }
}

}  // namespace

ImageSummary run_image(const ImageJob& job) {
  namespace fs = std::filesystem;
  if(job.jobs == 0) {
    throw std::invalid_argument("worker count must be at least 1");
  }
  std::error_code ec;
  if(!fs::exists(job.input, ec)) {
    throw std::runtime_error("cannot open input " + job.input.string());
  }
  if(fs::exists(job.output, ec) && fs::equivalent(job.input, job.output, ec)) {
    throw std::invalid_argument("input and output must be different files");
  }
  const std::uint64_t size = fs::file_size(job.input, ec);
  if(ec) {
    throw std::runtime_error("cannot stat input " + job.input.string() + ": " + ec.message());
  }
  if(size % kSectorBytes != 0) {
    throw std::invalid_argument("input size " + std::to_string(size) + " is not a multiple of " +
                                std::to_string(kSectorBytes) + " bytes");
  }
  const std::uint64_t sectors = size / kSectorBytes;
  if(sectors > 0 && job.start_sector > std::numeric_limits<std::uint64_t>::max() - (sectors - 1)) {
    throw std::invalid_argument("start sector plus image length overflows the 64-bit sector index");
  }

  const SectorCipher cipher(job.scheme, job.key, job.fstr, job.mask_mode);
  const auto t0 = std::chrono::steady_clock::now();

  std::ifstream in(job.input, std::ios::binary);
  if(!in) {
    throw std::runtime_error("cannot open input " + job.input.string());
  }
  std::ofstream out(job.output, std::ios::binary | std::ios::trunc);
  if(!out) {
    throw std::runtime_error("cannot open output " + job.output.string());
  }
  try {
    std::vector<std::uint8_t> buf(kChunkSectors * kSectorBytes);
    for(std::uint64_t done = 0; done < sectors;) {
      const std::uint64_t n = std::min(kChunkSectors, sectors - done);
      const auto bytes = static_cast<std::streamsize>(n * kSectorBytes);
      if(!in.read(reinterpret_cast<char*>(buf.data()), bytes)) {
        throw std::runtime_error("short read from " + job.input.string());
      }
      process_chunk(cipher, job.direction, job.start_sector + done, buf.data(), n, job.jobs);
      if(!out.write(reinterpret_cast<const char*>(buf.data()), bytes)) {
        throw std::runtime_error("write failed on " + job.output.string());
      }
      done += n;
    }
    out.flush();
    if(!out) {
      throw std::runtime_error("write failed on " + job.output.string());
    }
  } catch(...) {
    out.close();
    fs::remove(job.output, ec);
    throw;
  }
  out.close();

  ImageSummary summary;
  summary.sectors = sectors;
  summary.bytes = size;
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  summary.mb_per_s = summary.seconds > 0.0 ? static_cast<double>(size) / summary.seconds / 1e6 : 0.0;
  return summary;
}

}  // namespace diskenc

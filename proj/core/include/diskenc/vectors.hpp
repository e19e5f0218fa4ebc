// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskenc/sector_cipher.hpp"

/// Known-answer vector files.
///
/// Line-oriented text. The first non-comment line is the header
///   diskenc-vectors 1 <scheme>
/// with <scheme> one of fast-brw, fast-horner, aez. Each further non-empty
/// line that does not start with '#' is one record of space-separated
/// name=value fields:
///   name   free-form label without spaces (optional)
///   key    32 hex digits
///   fstr   32 hex digits (FAST only; default zero)
///   tweak  32 hex digits (FAST only)
///   pt     8192 hex digits, the 4096-byte sector
///   ct     8192 hex digits
/// AEZ sectors map bytes to blocks in order: M1, M1', ..., M127, M127', Mx, My.
namespace diskenc::vectors {

inline constexpr int kFormatVersion = 1;

struct Record {
  std::string name;
  Block key;
  Block fstr;
  Block tweak;
  std::vector<std::uint8_t> pt;
  std::vector<std::uint8_t> ct;
  std::size_t line = 0;  ///< 1-based source line, 0 if not parsed
};

struct VectorFile {
  Scheme scheme = Scheme::FastBrw;
  std::vector<Record> records;
};

/// Malformed input; line() is the 1-based offending line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return m_line; }

 private:
  std::size_t m_line;
};

/// Deterministic records from std::mt19937_64(seed); ciphertexts come from
/// this library.
VectorFile generate(Scheme scheme, std::size_t count, std::uint64_t seed);

void write(std::ostream& os, const VectorFile& file);
std::string to_string(const VectorFile& file);

/// Throws FormatError.
VectorFile parse(std::istream& is);

struct Outcome {
  std::size_t index = 0;
  std::size_t line = 0;
  std::string name;
  bool encrypt_ok = false;
  bool decrypt_ok = false;
  bool ok() const noexcept { return encrypt_ok && decrypt_ok; }
};

/// Recomputes every record in both directions. AEZ records are checked in
/// both mask modes.
std::vector<Outcome> verify(const VectorFile& file);

}  // namespace diskenc::vectors

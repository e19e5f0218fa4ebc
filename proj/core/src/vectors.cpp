// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include "diskenc/vectors.hpp"

#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace diskenc::vectors {

namespace {

constexpr std::string_view kMagic = "diskenc-vectors";

bool is_fast(Scheme s) { return s != Scheme::Aez; }

Block random_block(std::mt19937_64& rng) {
  const std::uint64_t hi = rng();
  return {hi, rng()};
}

bool skip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

Block parse_block(std::size_t lineno, const std::string& field, const std::string& hex) {
  try {
    return Block::from_hex(hex);
  } catch(const std::invalid_argument& e) {
    throw FormatError(lineno, field + ": " + e.what());
  }
}

std::vector<std::uint8_t> parse_sector(std::size_t lineno, const std::string& field, const std::string& hex) {
  if(hex.size() != 2 * kSectorBytes) {
    throw FormatError(lineno, field + ": expected " + std::to_string(2 * kSectorBytes) + " hex digits, got " +
                                  std::to_string(hex.size()));
  }
  try {
    return from_hex(hex);
  } catch(const std::invalid_argument& e) {
    throw FormatError(lineno, field + ": " + e.what());
  }
}

}  // namespace

FormatError::FormatError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), m_line(line) {}

VectorFile generate(Scheme scheme, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  VectorFile file{scheme, {}};
  for(std::size_t i = 0; i < count; ++i) {
    Record r;
    r.name = "r" + std::to_string(i);
    r.key = random_block(rng);
    if(is_fast(scheme)) {
      r.fstr = random_block(rng);
      r.tweak = random_block(rng);
    }
    r.pt.resize(kSectorBytes);
    for(std::size_t k = 0; k < kSectorBytes; k += 8) {
      const std::uint64_t w = rng();
      for(std::size_t b = 0; b < 8; ++b) {
        r.pt[k + b] = static_cast<std::uint8_t>(w >> (56 - 8 * b));
      }
    }
    r.ct.resize(kSectorBytes);
    SectorCipher(scheme, r.key, r.fstr).encrypt(r.tweak, r.pt, r.ct);
    file.records.push_back(std::move(r));
  }
  return file;
}

void write(std::ostream& os, const VectorFile& file) {
  os << kMagic << ' ' << kFormatVersion << ' ' << pipeline::to_string(file.scheme) << '\n';
  for(const auto& r : file.records) {
    if(!r.name.empty()) {
      os << "name=" << r.name << ' ';
    }
    os << "key=" << r.key.to_hex();
    if(is_fast(file.scheme)) {
      os << " fstr=" << r.fstr.to_hex() << " tweak=" << r.tweak.to_hex();
    }
    os << " pt=" << to_hex(r.pt) << " ct=" << to_hex(r.ct) << '\n';
  }
}

std::string to_string(const VectorFile& file) {
  std::ostringstream os;
  write(os, file);
  return os.str();
}

VectorFile parse(std::istream& is) {
  VectorFile file;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while(std::getline(is, line)) {
    ++lineno;
    if(skip(line)) {
      continue;
    }
    std::istringstream fields(line);
    if(!have_header) {
      std::string magic, scheme;
      int version = 0;
      if(!(fields >> magic >> version >> scheme) || magic != kMagic) {
        throw FormatError(lineno, "expected header '" + std::string(kMagic) + " <version> <scheme>'");
      }
      if(version != kFormatVersion) {
        throw FormatError(lineno, "unsupported format version " + std::to_string(version));
      }
      const auto s = pipeline::parse_scheme(scheme);
      if(!s) {
        throw FormatError(lineno, "unknown scheme '" + scheme + "'");
      }
      file.scheme = *s;
      have_header = true;
      continue;
    }

    Record r;
    r.line = lineno;
    bool key = false, tweak = false, pt = false, ct = false;
    std::string tok;
    while(fields >> tok) {
      const auto eq = tok.find('=');
      if(eq == std::string::npos || eq == 0) {
        throw FormatError(lineno, "field '" + tok.substr(0, 16) + "' is not name=value");
      }
      const std::string name = tok.substr(0, eq);
      const std::string value = tok.substr(eq + 1);
      if(name == "name") {
        r.name = value;
      } else if(name == "key") {
        r.key = parse_block(lineno, name, value);
        key = true;
      } else if(name == "fstr" && is_fast(file.scheme)) {
        r.fstr = parse_block(lineno, name, value);
      } else if(name == "tweak" && is_fast(file.scheme)) {
        r.tweak = parse_block(lineno, name, value);
        tweak = true;
      } else if(name == "pt") {
        r.pt = parse_sector(lineno, name, value);
        pt = true;
      } else if(name == "ct") {
        r.ct = parse_sector(lineno, name, value);
        ct = true;
      } else {
        throw FormatError(lineno, "unexpected field '" + name + "'");
      }
    }
    if(!key || !pt || !ct || (is_fast(file.scheme) && !tweak)) {
      throw FormatError(lineno, is_fast(file.scheme) ? "record needs key, tweak, pt and ct"
                                                     : "record needs key, pt and ct");
    }
    file.records.push_back(std::move(r));
  }
  if(!have_header) {
    throw FormatError(lineno == 0 ? 1 : lineno, "missing header");
  }
  return file;
}

std::vector<Outcome> verify(const VectorFile& file) {
  std::vector<Outcome> out;
  std::vector<std::uint8_t> buf(kSectorBytes);
  for(std::size_t i = 0; i < file.records.size(); ++i) {
    const Record& r = file.records[i];
    Outcome o{i, r.line, r.name, true, true};
    const std::vector<MaskMode> modes = is_fast(file.scheme)
                                            ? std::vector<MaskMode>{MaskMode::Precomputed}
                                            : std::vector<MaskMode>{MaskMode::Precomputed, MaskMode::OnTheFly};
    for(const auto mode : modes) {
      const SectorCipher cipher(file.scheme, r.key, r.fstr, mode);
      cipher.encrypt(r.tweak, r.pt, buf);
      o.encrypt_ok = o.encrypt_ok && buf == r.ct;
      cipher.decrypt(r.tweak, r.ct, buf);
      o.decrypt_ok = o.decrypt_ok && buf == r.pt;
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace diskenc::vectors

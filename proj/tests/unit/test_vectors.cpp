// Copyright 2026 The diskenc Authors. Licensed under the Apache License,
// Version 2.0. See http://www.apache.org/licenses/LICENSE-2.0

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "diskenc/vectors.hpp"
#include "oracles.hpp"

namespace v = diskenc::vectors;
using diskenc::Block;
using diskenc::Scheme;

namespace {

v::VectorFile parse_string(const std::string& s) {
  std::istringstream is(s);
  return v::parse(is);
}

std::size_t error_line(const std::string& s) {
  try {
    parse_string(s);
  } catch(const v::FormatError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Vectors, GenerateIsDeterministic) {
  EXPECT_EQ(v::to_string(v::generate(Scheme::FastBrw, 3, 7)), v::to_string(v::generate(Scheme::FastBrw, 3, 7)));
  EXPECT_NE(v::to_string(v::generate(Scheme::FastBrw, 3, 7)), v::to_string(v::generate(Scheme::FastBrw, 3, 8)));
}

TEST(Vectors, RoundTripThroughText) {
  for(const auto s : {Scheme::FastBrw, Scheme::FastHorner, Scheme::Aez}) {
    const auto file = v::generate(s, 4, 11);
    const auto parsed = parse_string(v::to_string(file));
    EXPECT_EQ(parsed.scheme, s);
    ASSERT_EQ(parsed.records.size(), 4u);
    EXPECT_EQ(parsed.records[0].line, 2u);
    for(const auto& o : v::verify(parsed)) {
      EXPECT_TRUE(o.ok()) << o.name;
    }
  }
}

TEST(Vectors, CorruptedDigitFailsOnlyThatRecord) {
  const auto text = v::to_string(v::generate(Scheme::FastHorner, 3, 5));
  std::istringstream in(text);
  std::string header, r0, r1, r2;
  std::getline(in, header);
  std::getline(in, r0);
  std::getline(in, r1);
  std::getline(in, r2);
  const auto pos = r1.find("ct=") + 10;
  r1[pos] = r1[pos] == '0' ? '1' : '0';
  const auto outcomes = v::verify(parse_string(header + "\n" + r0 + "\n" + r1 + "\n" + r2 + "\n"));
  ASSERT_EQ(outcomes.size(), 3u);
  EXPECT_TRUE(outcomes[0].ok());
  EXPECT_FALSE(outcomes[1].ok());
  EXPECT_FALSE(outcomes[1].encrypt_ok);
  EXPECT_EQ(outcomes[1].line, 3u);
  EXPECT_TRUE(outcomes[2].ok());
}

TEST(Vectors, CommentsAndBlankLines) {
  const auto text = "# leading comment\n\n" + v::to_string(v::generate(Scheme::Aez, 1, 1)) + "\n# trailing\n";
  const auto f = parse_string(text);
  ASSERT_EQ(f.records.size(), 1u);
  EXPECT_EQ(f.records[0].line, 4u);
}

TEST(Vectors, MalformedInputReportsLine) {
  const std::string z32(32, '0');
  const std::string z8k(8192, '0');
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("hello 1 aez\n"), 1u);
  EXPECT_EQ(error_line("diskenc-vectors 2 aez\n"), 1u);
  EXPECT_EQ(error_line("diskenc-vectors 1 xts\n"), 1u);
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\nkey=" + z32 + " pt=" + z8k + "\n"), 2u);
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\n\nkey=" + z32 + " pt=" + z8k + " ct=00\n"), 3u);
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\nkey=" + z32 + " pt=" + z8k + " ct=" + z8k + " bogus=1\n"), 2u);
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\nkey=zz pt=" + z8k + " ct=" + z8k + "\n"), 2u);
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\nnoequals\n"), 2u);
  // FAST records need a tweak
  EXPECT_EQ(error_line("diskenc-vectors 1 fast-brw\nkey=" + z32 + " pt=" + z8k + " ct=" + z8k + "\n"), 2u);
  // AEZ records must not carry one
  EXPECT_EQ(error_line("diskenc-vectors 1 aez\nkey=" + z32 + " tweak=" + z32 + " pt=" + z8k + " ct=" + z8k + "\n"),
            2u);
}

// The committed files were produced by the straight-line oracles; check the
// records against them directly so the library is not its own reference.
TEST(Vectors, CommittedFilesMatchOracles) {
  for(const std::string name : {"fast-brw", "fast-horner", "aez"}) {
    std::ifstream is(std::string(DISKENC_VECTOR_DIR) + "/" + name + ".vec");
    ASSERT_TRUE(is) << name;
    const auto file = v::parse(is);
    ASSERT_GE(file.records.size(), 17u) << name;
    for(const auto& r : file.records) {
      std::vector<std::uint8_t> expect;
      if(file.scheme == Scheme::Aez) {
        expect = oracle::aez_encrypt(r.key, r.pt);
      } else {
        expect = oracle::fast_encrypt(r.key, r.fstr, file.scheme == Scheme::FastBrw, r.tweak, r.pt);
      }
      EXPECT_EQ(r.ct, expect) << name << " line " << r.line;
    }
    for(const auto& o : v::verify(file)) {
      EXPECT_TRUE(o.ok()) << name << " line " << o.line;
    }
  }
}

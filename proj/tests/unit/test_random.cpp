// Copyright 2026 The evtlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "evtlab/random.hpp"

namespace evt {
namespace {

using Block = std::array<std::uint32_t, 4>;

// Known-answer vectors published with the Random123 reference code.
TEST(Philox, KnownAnswerZero) {
  const Block out = philox4x32_10({0, 0, 0, 0}, {0, 0});
  EXPECT_EQ(out, (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerAllOnes) {
  const Block out = philox4x32_10(
      {0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
      {0xffffffff, 0xffffffff});
  EXPECT_EQ(out, (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
  const Block out = philox4x32_10(
      {0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
      {0xa4093822, 0x299f31d0});
  EXPECT_EQ(out, (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RandomStream, SameSeedSameSequence) {
  RandomStream a(42), b(42);
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(a.next_u64(), b.next_u64());
}

TEST(RandomStream, FirstOutputsFollowFromThePhiloxBlock) {
  const std::uint64_t seed = 0x0123456789abcdefULL;
  RandomStream s(seed, 5);
  const Block block = philox4x32_10(
      {0, 0, 5, 0}, {static_cast<std::uint32_t>(seed),
                     static_cast<std::uint32_t>(seed >> 32)});
  const std::uint64_t lo = block[0] | (std::uint64_t{block[1]} << 32);
  const std::uint64_t hi = block[2] | (std::uint64_t{block[3]} << 32);
  EXPECT_EQ(s.next_u64(), lo);
  EXPECT_EQ(s.next_u64(), hi);
}

TEST(RandomStream, SubstreamsDiffer) {
  RandomStream base(7);
  RandomStream s1 = base.substream(1);
  RandomStream s2 = base.substream(2);
  EXPECT_EQ(s1.seed(), 7u);
  EXPECT_EQ(s1.stream_id(), 1u);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 500; ++i) {
    seen.insert(s1.next_u64());
    seen.insert(s2.next_u64());
    seen.insert(base.next_u64());
  }
  EXPECT_EQ(seen.size(), 1500u);
}

TEST(RandomStream, UniformStaysInOpenInterval) {
  RandomStream s(1);
  double lo = 1.0, hi = 0.0, sum = 0.0;
  constexpr int kN = 200000;
  for (int i = 0; i < kN; ++i) {
    const double u = s.uniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  EXPECT_LT(lo, 1e-4);
  EXPECT_GT(hi, 1.0 - 1e-4);
  // Mean of N uniforms has sd 1/sqrt(12 N) ~ 6.5e-4.
  EXPECT_NEAR(sum / kN, 0.5, 5 * 6.5e-4);
}

TEST(RandomStream, UniformUsesTheTop53Bits) {
  RandomStream a(99), b(99);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = b.next_u64();
    const double expected =
        (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
    ASSERT_EQ(a.uniform(), expected);
  }
}

TEST(RandomStream, ExponentialMatchesMinusLog1pOfUniform) {
  RandomStream a(3), b(3);
  double sum = 0.0;
  constexpr int kN = 100000;
  for (int i = 0; i < kN; ++i) {
    const double e = a.exponential();
    ASSERT_EQ(e, -std::log1p(-b.uniform()));
    ASSERT_GT(e, 0.0);
    sum += e;
  }
  EXPECT_NEAR(sum / kN, 1.0, 5.0 / std::sqrt(double{kN}));
}

TEST(RandomStream, SatisfiesUniformRandomBitGenerator) {
  static_assert(std::uniform_random_bit_generator<RandomStream>);
  RandomStream s(0);
  EXPECT_EQ(RandomStream::min(), 0u);
  EXPECT_EQ(RandomStream::max(), ~std::uint64_t{0});
  RandomStream t(0);
  EXPECT_EQ(s(), t.next_u64());
}

}  // namespace
}  // namespace evt

// Copyright 2026 The ecqc Authors.
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


#include "ecqc/bitvec.hpp"

#include <gtest/gtest.h>

#include "ecqc/error.hpp"

namespace ecqc {
namespace {

TEST(BitVec, StringIsLowBitFirst) {
  const BitVec v = BitVec::from_string("101");
  EXPECT_TRUE(v.get(0));
  EXPECT_FALSE(v.get(1));
  EXPECT_TRUE(v.get(2));
  EXPECT_EQ(v.to_string(), "101");
  EXPECT_EQ(v.to_hex(), "0x5");
}

TEST(BitVec, HexRoundTrip) {
  const BitVec v = BitVec::from_hex(200, "0x8000000000000000000000000000000000000000000000c9");
  EXPECT_EQ(v.size(), 200u);
  EXPECT_TRUE(v.get(191));
  EXPECT_EQ(v.popcount(), 5u);
  EXPECT_EQ(BitVec::from_hex(200, v.to_hex()), v);
  EXPECT_EQ(BitVec::from_hex(8, "1b"), BitVec::from_u64(8, 0x1b));
  EXPECT_EQ(BitVec(7).to_hex(), "0x0");
}

TEST(BitVec, HexRejectsOverflowAndJunk) {
  EXPECT_THROW(BitVec::from_hex(3, "0x8"), Error);
  EXPECT_THROW(BitVec::from_hex(8, "0xzz"), Error);
  EXPECT_THROW(BitVec::from_hex(8, ""), Error);
  EXPECT_NO_THROW(BitVec::from_hex(3, "0x07"));
}

TEST(BitVec, XorAndShift) {
  BitVec a = BitVec::from_string("1100");
  a ^= BitVec::from_string("0110");
  EXPECT_EQ(a.to_string(), "1010");
  EXPECT_EQ(a.shifted_up(1).to_string(), "0101");
  EXPECT_EQ(a.shifted_up(3).to_string(), "0001");
  EXPECT_EQ(a.highest_bit(), 2);
  EXPECT_EQ(BitVec(5).highest_bit(), -1);
  EXPECT_TRUE(BitVec(130).is_zero());
}

TEST(BitVec, ShiftAcrossWords) {
  BitVec v = BitVec::from_u64(130, 1);
  v = v.shifted_up(127);
  EXPECT_TRUE(v.get(127));
  EXPECT_EQ(v.popcount(), 1u);
  EXPECT_TRUE(v.shifted_up(3).is_zero());
  EXPECT_EQ(v.resized(128).popcount(), 1u);
  EXPECT_EQ(v.resized(100).popcount(), 0u);
}

}  // namespace
}  // namespace ecqc

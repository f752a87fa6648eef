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


#include "ecqc/curves.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ecqc/error.hpp"

namespace ecqc {
namespace {

FieldSpec gf2() { return make_field_spec(1, BitVec::from_string("11")); }
FieldElement bit(int v) { return FieldElement::from_u64(1, v); }
AffinePoint pt(int x, int y) { return AffinePoint::finite(bit(x), bit(y)); }

TEST(Weierstrass, TinyCurve) {
  const auto c = make_weierstrass(gf2(), bit(1), bit(1));
  EXPECT_TRUE(is_on_weierstrass(AffinePoint::at_infinity(), c));
  EXPECT_TRUE(is_on_weierstrass(pt(0, 1), c));
  EXPECT_FALSE(is_on_weierstrass(pt(1, 0), c));
  EXPECT_TRUE(weierstrass_add(pt(0, 1), pt(0, 1), c).infinity);
  EXPECT_EQ(weierstrass_add(AffinePoint::at_infinity(), pt(0, 1), c), pt(0, 1));
  EXPECT_EQ(weierstrass_add(pt(0, 1), AffinePoint::at_infinity(), c), pt(0, 1));
  EXPECT_EQ(weierstrass_sample_point(c, 1), pt(0, 1));
  EXPECT_EQ(weierstrass_sample_point(c, 99), pt(0, 1));
}

TEST(Weierstrass, GroupLaw) {
  const auto spec = default_field(5);
  const auto c = default_weierstrass(spec);
  const auto pts = weierstrass_points(c);
  ASSERT_GT(pts.size(), 4u);
  for (const auto& p : pts) {
    ASSERT_TRUE(is_on_weierstrass(p, c));
    EXPECT_TRUE(weierstrass_add(p, weierstrass_neg(p), c).infinity);
  }
  for (std::size_t i = 0; i < pts.size(); i += 3) {
    for (std::size_t j = 0; j < pts.size(); j += 5) {
      const auto s = weierstrass_add(pts[i], pts[j], c);
      EXPECT_TRUE(is_on_weierstrass(s, c));
      EXPECT_EQ(s, weierstrass_add(pts[j], pts[i], c));
      for (std::size_t k = 0; k < pts.size(); k += 7) {
        EXPECT_EQ(weierstrass_add(s, pts[k], c),
                  weierstrass_add(pts[i], weierstrass_add(pts[j], pts[k], c), c));
      }
    }
  }
}

TEST(Weierstrass, SamplingIsDeterministic) {
  const auto spec = default_field(9);
  const auto c = default_weierstrass(spec);
  const auto p = weierstrass_sample_point(c, 42);
  EXPECT_TRUE(is_on_weierstrass(p, c));
  EXPECT_FALSE(p.infinity);
  EXPECT_EQ(p, weierstrass_sample_point(c, 42));
}

TEST(Coordinates, EncodeDecode) {
  const auto spec = default_field(7);
  const auto c = default_weierstrass(spec);
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = weierstrass_sample_point(c, seed);
    const auto z = random_nonzero(spec, rng);
    EXPECT_EQ(ht_decode(spec, ht_encode(spec, p, z)), p);
    EXPECT_TRUE(is_on_ht(ht_encode(spec, p, z), c));
    EXPECT_EQ(proj_decode(spec, proj_encode(spec, p, z)), p);
    const auto one = ht_encode(spec, p, FieldElement::one(7));
    EXPECT_EQ(one.X, p.x);
    EXPECT_EQ(one.Y, p.y);
  }
  const auto zero = FieldElement::zero(7);
  EXPECT_TRUE(ht_decode(spec, {FieldElement::one(7), zero, zero}).infinity);
  EXPECT_TRUE(proj_decode(spec, {zero, FieldElement::one(7), zero}).infinity);
}

TEST(Edwards, TinyCurve) {
  const auto c = make_edwards(gf2(), bit(1), bit(1));
  const EdwardsPoint p01{bit(0), bit(1)};
  const EdwardsPoint p10{bit(1), bit(0)};
  const EdwardsPoint p11{bit(1), bit(1)};
  const EdwardsPoint id{bit(0), bit(0)};
  EXPECT_TRUE(is_on_edwards(id, c));
  EXPECT_TRUE(is_on_edwards(p11, c));
  EXPECT_TRUE(is_on_edwards(p10, c));
  EXPECT_EQ(edwards_add_affine(p01, p01, c), p11);
  EXPECT_EQ(edwards_add_affine(p01, p10, c), id);
  EXPECT_EQ(edwards_add_affine(id, p11, c), p11);
  EXPECT_EQ(edwards_points(c).size(), 4u);
  EXPECT_EQ(edwards_sample_point(c, 3), edwards_sample_point(c, 3));
}

TEST(Edwards, CompleteLaw) {
  const auto spec = default_field(4);
  const auto c = default_edwards(spec);
  const auto pts = edwards_points(c);
  const EdwardsPoint id{FieldElement::zero(4), FieldElement::zero(4)};
  for (const auto& p : pts) {
    EXPECT_EQ(edwards_add_affine(p, id, c), p);
    EXPECT_EQ(edwards_add_affine(p, {p.y, p.x}, c), id);
    for (const auto& q : pts) {
      const auto s = edwards_add_affine(p, q, c);
      EXPECT_TRUE(is_on_edwards(s, c));
      EXPECT_EQ(s, edwards_add_affine(q, p, c));
    }
  }
}

TEST(Edwards, RejectsBadParameters) {
  const auto spec = default_field(3);
  EXPECT_THROW(make_edwards(spec, FieldElement::zero(3), FieldElement::one(3)), Error);
}

}  // namespace
}  // namespace ecqc

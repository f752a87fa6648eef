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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecqc/gf2.hpp"

namespace ecqc {

// y^2 + xy = x^3 + a2 x^2 + a6 with a6 != 0.
struct WeierstrassCurve {
  FieldSpec spec;
  FieldElement a2;
  FieldElement a6;
};

WeierstrassCurve make_weierstrass(const FieldSpec& spec, FieldElement a2, FieldElement a6);

// Affine point or the point at infinity.
struct AffinePoint {
  bool infinity = true;
  FieldElement x;
  FieldElement y;

  static AffinePoint at_infinity() { return {}; }
  static AffinePoint finite(FieldElement x, FieldElement y) {
    return {false, std::move(x), std::move(y)};
  }
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

// Projective triple. Interpretation depends on the model: standard
// (x = X/Z, y = Y/Z), Higuchi-Takagi (x = X/Z, y = Y/Z^2) or Edwards
// projective (x = X/Z, y = Y/Z).
struct ProjPoint {
  FieldElement X;
  FieldElement Y;
  FieldElement Z;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

bool is_on_weierstrass(const AffinePoint& p, const WeierstrassCurve& curve);
AffinePoint weierstrass_neg(const AffinePoint& p);
// Throws Error(kPointNotOnCurve) if either operand is off the curve.
AffinePoint weierstrass_add(const AffinePoint& p1, const AffinePoint& p2,
                            const WeierstrassCurve& curve);
std::vector<AffinePoint> weierstrass_points(const WeierstrassCurve& curve);
AffinePoint weierstrass_sample_point(const WeierstrassCurve& curve, std::uint64_t seed);

// Higuchi-Takagi coordinates.
ProjPoint ht_encode(const FieldSpec& spec, const AffinePoint& p, const FieldElement& z);
AffinePoint ht_decode(const FieldSpec& spec, const ProjPoint& q);
bool is_on_ht(const ProjPoint& q, const WeierstrassCurve& curve);

// Standard projective decode. (0, Y, 0) with Y != 0 is infinity.
AffinePoint proj_decode(const FieldSpec& spec, const ProjPoint& q);
ProjPoint proj_encode(const FieldSpec& spec, const AffinePoint& p, const FieldElement& z);

// d1 (x + y) + d2 (x^2 + y^2) = xy + xy(x + y) + x^2 y^2, d1 != 0, Tr(d2) = 1.
struct EdwardsCurve {
  FieldSpec spec;
  FieldElement d1;
  FieldElement d2;
};

struct EdwardsPoint {
  FieldElement x;
  FieldElement y;
  friend bool operator==(const EdwardsPoint&, const EdwardsPoint&) = default;
};

// Throws Error(kInvalidCurve) when d1 == 0 or Tr(d2) == 0.
EdwardsCurve make_edwards(const FieldSpec& spec, FieldElement d1, FieldElement d2);
bool is_on_edwards(const EdwardsPoint& p, const EdwardsCurve& curve);
// Complete affine addition; a zero denominator raises kCompletenessViolation.
EdwardsPoint edwards_add_affine(const EdwardsPoint& p1, const EdwardsPoint& p2,
                                const EdwardsCurve& curve);
std::vector<EdwardsPoint> edwards_points(const EdwardsCurve& curve);
EdwardsPoint edwards_sample_point(const EdwardsCurve& curve, std::uint64_t seed);
// (X/Z, Y/Z); throws kInvalidProjective when Z == 0.
EdwardsPoint edwards_decode(const FieldSpec& spec, const ProjPoint& q);

// Defaults used by the CLI and tests: a2 = 1, a6 = 1 and d1 = 1, d2 = the
// first monomial x^k of trace one (falls back to a full scan).
WeierstrassCurve default_weierstrass(const FieldSpec& spec);
EdwardsCurve default_edwards(const FieldSpec& spec);

}  // namespace ecqc

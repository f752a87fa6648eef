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

#include <random>

#include "ecqc/error.hpp"

namespace ecqc {
namespace {

std::uint64_t attempt_budget(std::size_t n) {
  return n < 20 ? (std::uint64_t{4} << n) : (std::uint64_t{1} << 22);
}

// Roots y of a y^2 + b y + c = 0 (a, b, c in GF(2^n)).
std::vector<FieldElement> quadratic_roots(const FieldSpec& spec, const FieldElement& a,
                                          const FieldElement& b, const FieldElement& c) {
  const std::size_t n = spec.n();
  if (a.is_zero()) {
    if (b.is_zero()) {
      if (!c.is_zero()) return {};
      throw Error(Errc::kInvalidArgument, "degenerate quadratic");
    }
    return {fdiv(spec, c, b)};
  }
  if (b.is_zero()) return {fsqrt(spec, fdiv(spec, c, a))};
  // y = (b/a) z turns the equation into z^2 + z = a c / b^2.
  const FieldElement rhs = fdiv(spec, fmul(spec, a, c), fsquare(spec, b));
  auto z = solve_artin_schreier(spec, rhs);
  if (!z) return {};
  const FieldElement scale = fdiv(spec, b, a);
  return {fmul(spec, scale, *z), fmul(spec, scale, fadd(*z, FieldElement::one(n)))};
}

std::vector<AffinePoint> weierstrass_points_at(const WeierstrassCurve& curve,
                                               const FieldElement& x) {
  const auto& spec = curve.spec;
  const std::size_t n = spec.n();
  if (x.is_zero()) return {AffinePoint::finite(x, fsqrt(spec, curve.a6))};
  // y = x z: z^2 + z = (x^3 + a2 x^2 + a6) / x^2.
  const FieldElement x2 = fsquare(spec, x);
  const FieldElement rhs =
      fadd(fadd(fmul(spec, x2, x), fmul(spec, curve.a2, x2)), curve.a6);
  auto z = solve_artin_schreier(spec, fdiv(spec, rhs, x2));
  if (!z) return {};
  return {AffinePoint::finite(x, fmul(spec, x, *z)),
          AffinePoint::finite(x, fmul(spec, x, fadd(*z, FieldElement::one(n))))};
}

std::vector<EdwardsPoint> edwards_points_at(const EdwardsCurve& curve, const FieldElement& x) {
  const auto& spec = curve.spec;
  const FieldElement xx = fadd(x, fsquare(spec, x));
  const FieldElement a = fadd(curve.d2, xx);
  const FieldElement b = fadd(curve.d1, xx);
  const FieldElement c = fadd(fmul(spec, curve.d1, x), fmul(spec, curve.d2, fsquare(spec, x)));
  std::vector<EdwardsPoint> out;
  for (auto& y : quadratic_roots(spec, a, b, c)) out.push_back({x, y});
  return out;
}

template <typename Fn>
void for_each_element(std::size_t n, Fn&& fn) {
  if (n > 24) throw Error(Errc::kInvalidArgument, "exhaustive enumeration needs n <= 24");
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) fn(FieldElement::from_u64(n, v));
}

}  // namespace

WeierstrassCurve make_weierstrass(const FieldSpec& spec, FieldElement a2, FieldElement a6) {
  if (a2.size() != spec.n() || a6.size() != spec.n()) {
    throw Error(Errc::kSpecMismatch, "curve coefficients do not match the field");
  }
  if (a6.is_zero()) throw Error(Errc::kInvalidCurve, "a6 must be nonzero");
  return {spec, std::move(a2), std::move(a6)};
}

bool is_on_weierstrass(const AffinePoint& p, const WeierstrassCurve& curve) {
  if (p.infinity) return true;
  const auto& s = curve.spec;
  if (p.x.size() != s.n() || p.y.size() != s.n()) return false;
  const FieldElement x2 = fsquare(s, p.x);
  const FieldElement lhs = fadd(fsquare(s, p.y), fmul(s, p.x, p.y));
  const FieldElement rhs = fadd(fadd(fmul(s, x2, p.x), fmul(s, curve.a2, x2)), curve.a6);
  return lhs == rhs;
}

AffinePoint weierstrass_neg(const AffinePoint& p) {
  if (p.infinity) return p;
  return AffinePoint::finite(p.x, fadd(p.x, p.y));
}

AffinePoint weierstrass_add(const AffinePoint& p1, const AffinePoint& p2,
                            const WeierstrassCurve& curve) {
  if (!is_on_weierstrass(p1, curve) || !is_on_weierstrass(p2, curve)) {
    throw Error(Errc::kPointNotOnCurve, "operand of weierstrass_add is not on the curve");
  }
  if (p1.infinity) return p2;
  if (p2.infinity) return p1;
  const auto& s = curve.spec;
  const FieldElement one = FieldElement::one(s.n());
  if (p1.x == p2.x) {
    if (fadd(p1.y, p2.y) == p2.x) return AffinePoint::at_infinity();
    const FieldElement lambda = fadd(p2.x, fdiv(s, p2.y, p2.x));
    const FieldElement x3 = fadd(fadd(fsquare(s, lambda), lambda), curve.a2);
    const FieldElement y3 = fadd(fsquare(s, p2.x), fmul(s, fadd(lambda, one), x3));
    return AffinePoint::finite(x3, y3);
  }
  const FieldElement lambda = fdiv(s, fadd(p1.y, p2.y), fadd(p1.x, p2.x));
  const FieldElement x3 =
      fadd(fadd(fadd(fsquare(s, lambda), lambda), fadd(p1.x, p2.x)), curve.a2);
  const FieldElement y3 = fadd(fadd(fmul(s, fadd(p2.x, x3), lambda), x3), p2.y);
  return AffinePoint::finite(x3, y3);
}

std::vector<AffinePoint> weierstrass_points(const WeierstrassCurve& curve) {
  std::vector<AffinePoint> pts{AffinePoint::at_infinity()};
  for_each_element(curve.spec.n(), [&](const FieldElement& x) {
    for (auto& p : weierstrass_points_at(curve, x)) pts.push_back(std::move(p));
  });
  return pts;
}

AffinePoint weierstrass_sample_point(const WeierstrassCurve& curve, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t budget = attempt_budget(curve.spec.n());
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto pts = weierstrass_points_at(curve, random_element(curve.spec, rng));
    if (!pts.empty()) return pts.front();
  }
  throw Error(Errc::kSampleExhausted, "no Weierstrass point found");
}

ProjPoint ht_encode(const FieldSpec& spec, const AffinePoint& p, const FieldElement& z) {
  if (z.is_zero()) throw Error(Errc::kZeroScale, "HT encoding needs a nonzero Z");
  if (p.infinity) {
    return {FieldElement::one(spec.n()), FieldElement::zero(spec.n()), FieldElement::zero(spec.n())};
  }
  return {fmul(spec, p.x, z), fmul(spec, p.y, fsquare(spec, z)), z};
}

AffinePoint ht_decode(const FieldSpec& spec, const ProjPoint& q) {
  if (q.Z.is_zero()) {
    if (q.Y.is_zero() && !q.X.is_zero()) return AffinePoint::at_infinity();
    throw Error(Errc::kInvalidProjective, "HT triple with Z = 0 must be (X, 0, 0), X != 0");
  }
  return AffinePoint::finite(fdiv(spec, q.X, q.Z), fdiv(spec, q.Y, fsquare(spec, q.Z)));
}

bool is_on_ht(const ProjPoint& q, const WeierstrassCurve& curve) {
  const auto& s = curve.spec;
  const FieldElement x2 = fsquare(s, q.X);
  const FieldElement z2 = fsquare(s, q.Z);
  const FieldElement lhs = fadd(fsquare(s, q.Y), fmul(s, fmul(s, q.X, q.Y), q.Z));
  FieldElement rhs = fmul(s, fmul(s, x2, q.X), q.Z);
  rhs = fadd(rhs, fmul(s, curve.a2, fmul(s, x2, z2)));
  rhs = fadd(rhs, fmul(s, curve.a6, fsquare(s, z2)));
  return lhs == rhs;
}

AffinePoint proj_decode(const FieldSpec& spec, const ProjPoint& q) {
  if (!q.Z.is_zero()) {
    return AffinePoint::finite(fdiv(spec, q.X, q.Z), fdiv(spec, q.Y, q.Z));
  }
  if (q.X.is_zero() && !q.Y.is_zero()) return AffinePoint::at_infinity();
  throw Error(Errc::kInvalidProjective, "projective triple with Z = 0 must be (0, Y, 0)");
}

ProjPoint proj_encode(const FieldSpec& spec, const AffinePoint& p, const FieldElement& z) {
  if (z.is_zero()) throw Error(Errc::kZeroScale, "projective encoding needs a nonzero Z");
  if (p.infinity) {
    return {FieldElement::zero(spec.n()), FieldElement::one(spec.n()), FieldElement::zero(spec.n())};
  }
  return {fmul(spec, p.x, z), fmul(spec, p.y, z), z};
}

EdwardsCurve make_edwards(const FieldSpec& spec, FieldElement d1, FieldElement d2) {
  if (d1.size() != spec.n() || d2.size() != spec.n()) {
    throw Error(Errc::kSpecMismatch, "curve coefficients do not match the field");
  }
  if (d1.is_zero()) throw Error(Errc::kInvalidCurve, "d1 must be nonzero");
  if (!ftrace(spec, d2)) throw Error(Errc::kInvalidCurve, "Tr(d2) must be 1");
  return {spec, std::move(d1), std::move(d2)};
}

bool is_on_edwards(const EdwardsPoint& p, const EdwardsCurve& curve) {
  const auto& s = curve.spec;
  if (p.x.size() != s.n() || p.y.size() != s.n()) return false;
  const FieldElement sum = fadd(p.x, p.y);
  const FieldElement xy = fmul(s, p.x, p.y);
  const FieldElement lhs =
      fadd(fmul(s, curve.d1, sum), fmul(s, curve.d2, fadd(fsquare(s, p.x), fsquare(s, p.y))));
  const FieldElement rhs = fadd(fadd(xy, fmul(s, xy, sum)), fsquare(s, xy));
  return lhs == rhs;
}

EdwardsPoint edwards_add_affine(const EdwardsPoint& p1, const EdwardsPoint& p2,
                                const EdwardsCurve& curve) {
  if (!is_on_edwards(p1, curve) || !is_on_edwards(p2, curve)) {
    throw Error(Errc::kPointNotOnCurve, "operand of edwards_add_affine is not on the curve");
  }
  const auto& s = curve.spec;
  const FieldElement one = FieldElement::one(s.n());
  const auto& [x1, y1] = p1;
  const auto& [x2, y2] = p2;
  const FieldElement w = fmul(s, curve.d2, fmul(s, fadd(x1, y1), fadd(x2, y2)));
  const FieldElement sx1 = fadd(x1, fsquare(s, x1));
  const FieldElement sy1 = fadd(y1, fsquare(s, y1));
  const FieldElement s2 = fadd(x2, y2);

  const FieldElement x_num = fadd(
      fadd(fmul(s, curve.d1, fadd(x1, x2)), w),
      fmul(s, sx1, fadd(fmul(s, x2, fadd(fadd(y1, y2), one)), fmul(s, y1, y2))));
  const FieldElement x_den = fadd(curve.d1, fmul(s, sx1, s2));
  const FieldElement y_num = fadd(
      fadd(fmul(s, curve.d1, fadd(y1, y2)), w),
      fmul(s, sy1, fadd(fmul(s, y2, fadd(fadd(x1, x2), one)), fmul(s, x1, x2))));
  const FieldElement y_den = fadd(curve.d1, fmul(s, sy1, s2));
  if (x_den.is_zero() || y_den.is_zero()) {
    throw Error(Errc::kCompletenessViolation, "zero denominator in Edwards addition");
  }
  return {fdiv(s, x_num, x_den), fdiv(s, y_num, y_den)};
}

std::vector<EdwardsPoint> edwards_points(const EdwardsCurve& curve) {
  std::vector<EdwardsPoint> pts;
  for_each_element(curve.spec.n(), [&](const FieldElement& x) {
    for (auto& p : edwards_points_at(curve, x)) pts.push_back(std::move(p));
  });
  return pts;
}

EdwardsPoint edwards_sample_point(const EdwardsCurve& curve, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t budget = attempt_budget(curve.spec.n());
  for (std::uint64_t i = 0; i < budget; ++i) {
    auto pts = edwards_points_at(curve, random_element(curve.spec, rng));
    if (!pts.empty()) return pts.front();
  }
  throw Error(Errc::kSampleExhausted, "no Edwards point found");
}

EdwardsPoint edwards_decode(const FieldSpec& spec, const ProjPoint& q) {
  if (q.Z.is_zero()) throw Error(Errc::kInvalidProjective, "Edwards triple with Z = 0");
  return {fdiv(spec, q.X, q.Z), fdiv(spec, q.Y, q.Z)};
}

WeierstrassCurve default_weierstrass(const FieldSpec& spec) {
  const auto one = FieldElement::one(spec.n());
  return make_weierstrass(spec, one, one);
}

EdwardsCurve default_edwards(const FieldSpec& spec) {
  const std::size_t n = spec.n();
  for (std::size_t k = 0; k < n; ++k) {
    auto d2 = FieldElement::monomial(n, k);
    if (ftrace(spec, d2)) return make_edwards(spec, FieldElement::one(n), d2);
  }
  for (std::uint64_t v = 3; n < 64 && v < (std::uint64_t{1} << n); ++v) {
    auto d2 = FieldElement::from_u64(n, v);
    if (ftrace(spec, d2)) return make_edwards(spec, FieldElement::one(n), d2);
  }
  throw Error(Errc::kInvalidCurve, "no trace-one element found");
}

}  // namespace ecqc

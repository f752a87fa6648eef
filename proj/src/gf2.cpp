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

#include "ecqc/gf2.hpp"

#include <algorithm>
#include <vector>

#include "ecqc/error.hpp"

namespace ecqc {
namespace {

// a mod m for polynomials stored in equally sized bit vectors.
BitVec poly_mod(BitVec a, const BitVec& m) {
  const long dm = m.highest_bit();
  for (long da = a.highest_bit(); da >= dm; da = a.highest_bit()) {
    a ^= m.shifted_up(static_cast<std::size_t>(da - dm));
  }
  return a;
}

BitVec poly_gcd(BitVec a, BitVec b) {
  while (!b.is_zero()) {
    a = poly_mod(std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

// Carry-less product truncated to `out_bits` bits.
BitVec clmul(const BitVec& a, const BitVec& b, std::size_t out_bits) {
  BitVec wide_b = b.resized(out_bits);
  BitVec out(out_bits);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.get(i)) out ^= wide_b.shifted_up(i);
  }
  return out;
}

void check_size(const FieldSpec& spec, const FieldElement& a) {
  if (a.size() != spec.n()) {
    throw Error(Errc::kSpecMismatch, "element of length " + std::to_string(a.size()) +
                                         " used with GF(2^" + std::to_string(spec.n()) + ")");
  }
}

}  // namespace

bool is_irreducible(const BitVec& poly) {
  const long deg = poly.highest_bit();
  if (deg < 1) return false;
  if (deg == 1) return true;
  const auto n = static_cast<std::size_t>(deg);
  const std::size_t width = 2 * n + 1;
  const BitVec f = poly.resized(width);
  BitVec x(width);
  x.set(1, true);
  BitVec u = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    u = poly_mod(clmul(u, u, width), f);
    if (poly_gcd(f, u ^ x).highest_bit() != 0) return false;
  }
  return true;
}

FieldSpec make_field_spec(std::size_t n, const BitVec& modulus) {
  if (n < 1) throw Error(Errc::kDegreeTooSmall, "extension degree must be positive");
  if (modulus.size() != n + 1) {
    if (modulus.highest_bit() > static_cast<long>(n)) {
      throw Error(Errc::kWrongDegree, "modulus degree exceeds n");
    }
  }
  const BitVec f = modulus.resized(n + 1);
  if (!f.get(n)) throw Error(Errc::kWrongDegree, "leading coefficient f_n is zero");
  if (!f.get(0)) throw Error(Errc::kEvenConstant, "constant coefficient f_0 is zero");
  if (!is_irreducible(f)) {
    throw Error(Errc::kNotIrreducible, "modulus " + f.to_hex() + " is reducible");
  }
  return FieldSpec(n, f);
}

FieldSpec make_field_spec(std::size_t n, std::string_view modulus_hex) {
  return make_field_spec(n, BitVec::from_hex(n + 1, modulus_hex));
}

BitVec default_modulus(std::size_t n) {
  auto poly = [n](std::initializer_list<std::size_t> powers) {
    BitVec f(n + 1);
    for (auto p : powers) f.set(p, true);
    return f;
  };
  switch (n) {
    case 163: return poly({163, 7, 6, 3, 0});
    case 233: return poly({233, 74, 0});
    case 283: return poly({283, 12, 7, 5, 0});
    default: break;
  }
  if (n == 0) throw Error(Errc::kDegreeTooSmall, "extension degree must be positive");
  // Smallest integer encoding: scan the low coefficients in increasing order.
  const std::size_t low_bits = std::min<std::size_t>(n, 62);
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << low_bits); low += 2) {
    BitVec f = BitVec::from_u64(n + 1, low);
    f.set(n, true);
    if (is_irreducible(f)) return f;
  }
  throw Error(Errc::kNotIrreducible, "no irreducible polynomial found");
}

FieldSpec default_field(std::size_t n) { return make_field_spec(n, default_modulus(n)); }

FieldElement FieldElement::one(std::size_t n) { return monomial(n, 0); }

FieldElement FieldElement::monomial(std::size_t n, std::size_t k) {
  BitVec b(n);
  b.set(k, true);
  return FieldElement(std::move(b));
}

bool FieldElement::is_one() const {
  if (bits_.size() == 0 || !bits_.get(0)) return false;
  return bits_.popcount() == 1;
}

FieldElement fadd(const FieldElement& a, const FieldElement& b) {
  if (a.size() != b.size()) throw Error(Errc::kSpecMismatch, "operands from different fields");
  return FieldElement(a.bits() ^ b.bits());
}

FieldElement fmul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  check_size(spec, a);
  check_size(spec, b);
  const std::size_t n = spec.n();
  const std::size_t width = 2 * n;
  BitVec prod = clmul(a.bits(), b.bits(), width);
  const BitVec f = spec.modulus().resized(width);
  for (std::size_t i = width; i-- > n;) {
    if (prod.get(i)) prod ^= f.shifted_up(i - n);
  }
  return FieldElement(prod.resized(n));
}

FieldElement fsquare(const FieldSpec& spec, const FieldElement& a) { return fmul(spec, a, a); }

FieldElement fpow2k(const FieldSpec& spec, const FieldElement& a, std::size_t k) {
  check_size(spec, a);
  FieldElement r = a;
  for (std::size_t i = 0; i < k % spec.n(); ++i) r = fsquare(spec, r);
  return r;
}

FieldElement finv(const FieldSpec& spec, const FieldElement& a) {
  check_size(spec, a);
  if (a.is_zero()) throw Error(Errc::kZeroInverse, "zero has no inverse");
  const std::size_t n = spec.n();
  const std::size_t width = n + 1;
  BitVec u = a.bits().resized(width);
  BitVec v = spec.modulus();
  BitVec g1(width), g2(width);
  g1.set(0, true);
  // Invariant: g1 * a = u and g2 * a = v (mod f).
  while (u.highest_bit() != 0) {
    long j = u.highest_bit() - v.highest_bit();
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v.shifted_up(static_cast<std::size_t>(j));
    g1 ^= g2.shifted_up(static_cast<std::size_t>(j));
  }
  return FieldElement(poly_mod(g1, spec.modulus()).resized(n));
}

FieldElement fdiv(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  return fmul(spec, a, finv(spec, b));
}

FieldElement fsqrt(const FieldSpec& spec, const FieldElement& a) {
  return fpow2k(spec, a, spec.n() - 1);
}

bool ftrace(const FieldSpec& spec, const FieldElement& a) {
  check_size(spec, a);
  FieldElement acc = a;
  FieldElement term = a;
  for (std::size_t i = 1; i < spec.n(); ++i) {
    term = fsquare(spec, term);
    acc = fadd(acc, term);
  }
  return acc.coeff(0);
}

std::optional<FieldElement> solve_artin_schreier(const FieldSpec& spec, const FieldElement& c) {
  check_size(spec, c);
  const std::size_t n = spec.n();
  // Augmented rows: bits 0..n-1 are the coefficients of z, bit n is c.
  std::vector<BitVec> rows(n, BitVec(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    const FieldElement xj = FieldElement::monomial(n, j);
    const FieldElement img = fadd(fsquare(spec, xj), xj);
    for (std::size_t i = 0; i < n; ++i) {
      if (img.coeff(i)) rows[i].set(j, true);
    }
  }
  for (std::size_t i = 0; i < n; ++i) rows[i].set(n, c.coeff(i));

  std::vector<long> pivot_row_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && !rows[p].get(col)) ++p;
    if (p == n) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != r && rows[i].get(col)) rows[i] ^= rows[r];
    }
    pivot_row_of_col[col] = static_cast<long>(r);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i) {
    if (rows[i].get(n)) return std::nullopt;
  }
  BitVec z(n);
  for (std::size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) z.set(col, rows[pivot_row_of_col[col]].get(n));
  }
  // The two roots differ by 1; return the one with a zero constant term.
  if (z.get(0)) z.flip(0);
  return FieldElement(std::move(z));
}

FieldElement random_element(const FieldSpec& spec, std::mt19937_64& rng) {
  BitVec b(spec.n());
  for (auto& w : b.words()) w = rng();
  return FieldElement(b.resized(spec.n()));
}

FieldElement random_nonzero(const FieldSpec& spec, std::mt19937_64& rng) {
  for (;;) {
    FieldElement e = random_element(spec, rng);
    if (!e.is_zero()) return e;
  }
}

}  // namespace ecqc

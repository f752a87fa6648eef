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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "ecqc/bitvec.hpp"

namespace ecqc {

// GF(2^n) in a polynomial basis: F2[x]/(f) with f irreducible of degree n.
// The modulus holds f_0..f_n, index = power of x.
class FieldSpec {
 public:
  std::size_t n() const noexcept { return n_; }
  const BitVec& modulus() const noexcept { return modulus_; }
  // Number of nonzero coefficients of f, including f_0 and f_n.
  std::size_t modulus_weight() const noexcept { return modulus_.popcount(); }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend FieldSpec make_field_spec(std::size_t n, const BitVec& modulus);
  FieldSpec(std::size_t n, BitVec modulus) : n_(n), modulus_(std::move(modulus)) {}

  std::size_t n_;
  BitVec modulus_;
};

// Validates degree, constant term and irreducibility (distinct-degree test).
FieldSpec make_field_spec(std::size_t n, const BitVec& modulus);
FieldSpec make_field_spec(std::size_t n, std::string_view modulus_hex);

// NIST polynomials for n in {163, 233, 283}; otherwise the irreducible
// polynomial of degree n with the smallest integer encoding.
BitVec default_modulus(std::size_t n);
FieldSpec default_field(std::size_t n);
bool is_irreducible(const BitVec& poly);

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(BitVec bits) : bits_(std::move(bits)) {}

  static FieldElement zero(std::size_t n) { return FieldElement(BitVec(n)); }
  static FieldElement one(std::size_t n);
  // x^k for k < n.
  static FieldElement monomial(std::size_t n, std::size_t k);
  static FieldElement from_u64(std::size_t n, std::uint64_t v) {
    return FieldElement(BitVec::from_u64(n, v));
  }
  static FieldElement from_hex(std::size_t n, std::string_view hex) {
    return FieldElement(BitVec::from_hex(n, hex));
  }
  // Coefficient string, alpha_0 first: "010" is x.
  static FieldElement from_string(std::string_view bits) {
    return FieldElement(BitVec::from_string(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool coeff(std::size_t i) const { return bits_.get(i); }
  bool is_zero() const noexcept { return bits_.is_zero(); }
  bool is_one() const;
  const BitVec& bits() const noexcept { return bits_; }

  std::string to_hex() const { return bits_.to_hex(); }
  std::string to_string() const { return bits_.to_string(); }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  BitVec bits_;
};

FieldElement fadd(const FieldElement& a, const FieldElement& b);
FieldElement fmul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement fsquare(const FieldSpec& spec, const FieldElement& a);
FieldElement fpow2k(const FieldSpec& spec, const FieldElement& a, std::size_t k);
// Extended Euclid; throws Error(kZeroInverse) for a == 0.
FieldElement finv(const FieldSpec& spec, const FieldElement& a);
FieldElement fdiv(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
// Square root, a^(2^(n-1)).
FieldElement fsqrt(const FieldSpec& spec, const FieldElement& a);
bool ftrace(const FieldSpec& spec, const FieldElement& a);

// z with z^2 + z = c and z_0 = 0, or nullopt when Tr(c) = 1.
std::optional<FieldElement> solve_artin_schreier(const FieldSpec& spec,
                                                 const FieldElement& c);

FieldElement random_element(const FieldSpec& spec, std::mt19937_64& rng);
FieldElement random_nonzero(const FieldSpec& spec, std::mt19937_64& rng);

}  // namespace ecqc

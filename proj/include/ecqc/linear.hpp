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
#include <random>
#include <span>
#include <vector>

#include "ecqc/bitvec.hpp"
#include "ecqc/circuit.hpp"
#include "ecqc/gf2.hpp"

namespace ecqc {

// Dense F2 matrix, row-major, one BitVec per row.
class BinMatrix {
 public:
  BinMatrix() = default;
  BinMatrix(std::size_t rows, std::size_t cols);

  static BinMatrix identity(std::size_t n);
  // Uniformly random invertible matrix (rejection sampling).
  static BinMatrix random_invertible(std::size_t n, std::mt19937_64& rng);
  static BinMatrix random(std::size_t rows, std::size_t cols, std::mt19937_64& rng);

  std::size_t rows() const noexcept { return data_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return data_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_[r].set(c, v); }
  const BitVec& row(std::size_t r) const { return data_[r]; }
  BitVec& row(std::size_t r) { return data_[r]; }
  BitVec column(std::size_t c) const;

  BitVec apply(const BitVec& v) const;  // A v
  std::size_t weight() const;
  std::size_t rank() const;
  bool is_invertible() const { return rows() == cols() && rank() == rows(); }
  std::size_t max_row_weight() const;
  std::size_t max_col_weight() const;

  friend BinMatrix operator*(const BinMatrix& a, const BinMatrix& b);
  friend bool operator==(const BinMatrix&, const BinMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> data_;
};

// P A = L U with (P A) row i = A row perm[i].
struct LUPFactors {
  BinMatrix L;
  BinMatrix U;
  std::vector<std::uint32_t> perm;
};

// Pivot = lowest-index remaining row with a one in the pivot column.
// Throws Error(kSingularMatrix).
LUPFactors lup_decompose(const BinMatrix& a);

// A composition of F2-linear field maps applied left to right.
class LinearMap {
 public:
  static LinearMap const_mul(FieldElement gamma);
  static LinearMap square();
  static LinearMap pow2(std::size_t k);
  // this, then next.
  LinearMap then(const LinearMap& next) const;

  FieldElement apply(const FieldSpec& spec, const FieldElement& v) const;

 private:
  struct Step {
    enum class Kind { kConstMul, kPow2 } kind;
    FieldElement gamma;
    std::size_t k = 0;
  };
  std::vector<Step> steps_;
};

// Column j is the coefficient vector of map(x^j). A zero constant factor
// throws Error(kZeroConstant).
BinMatrix matrix_of_linear_map(const FieldSpec& spec, const LinearMap& map);

// In-place: CNOTs realizing U then L on `wires`; the row permutation is not
// emitted. Returns the output order: logical output bit k lives on
// wires[order[k]]. Throws kSingularMatrix.
std::vector<std::uint32_t> emit_linear_inplace(CircuitBuilder& b, const BinMatrix& a,
                                               std::span<const std::uint32_t> wires);
// Out-of-place: out ^= A in, one CNOT per nonzero entry, layered by a
// bipartite edge coloring so the depth is the maximum row/column weight.
void emit_linear_outofplace(CircuitBuilder& b, const BinMatrix& a,
                            std::span<const std::uint32_t> in,
                            std::span<const std::uint32_t> out);

// Standalone circuits. In place: one register "x" (out) carrying the output
// relabeling. Out of place: registers "in" (in) and "out" (out).
Circuit synth_linear_inplace(const BinMatrix& a);
Circuit synth_linear_outofplace(const BinMatrix& a);

}  // namespace ecqc

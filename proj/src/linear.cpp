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

#include "ecqc/linear.hpp"

#include <algorithm>
#include <utility>

#include "ecqc/error.hpp"

namespace ecqc {

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : cols_(cols), data_(rows, BitVec(cols)) {}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinMatrix BinMatrix::random(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BinMatrix m(rows, cols);
  for (auto& r : m.data_) {
    for (auto& w : r.words()) w = rng();
    r = r.resized(cols);  // clears the padding
  }
  return m;
}

BinMatrix BinMatrix::random_invertible(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    BinMatrix m = random(n, n, rng);
    if (m.is_invertible()) return m;
  }
}

BitVec BinMatrix::column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) v.set(r, get(r, c));
  return v;
}

BitVec BinMatrix::apply(const BitVec& v) const {
  if (v.size() != cols_) throw Error(Errc::kLengthMismatch, "matrix/vector size mismatch");
  BitVec out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    BitVec t = data_[r];
    t &= v;
    out.set(r, t.popcount() & 1U);
  }
  return out;
}

std::size_t BinMatrix::weight() const {
  std::size_t w = 0;
  for (const auto& r : data_) w += r.popcount();
  return w;
}

std::size_t BinMatrix::rank() const {
  std::vector<BitVec> m = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && !m[p].get(c)) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != rank && m[i].get(c)) m[i] ^= m[rank];
    }
    ++rank;
  }
  return rank;
}

std::size_t BinMatrix::max_row_weight() const {
  std::size_t w = 0;
  for (const auto& r : data_) w = std::max(w, r.popcount());
  return w;
}

std::size_t BinMatrix::max_col_weight() const {
  std::size_t w = 0;
  for (std::size_t c = 0; c < cols_; ++c) w = std::max(w, column(c).popcount());
  return w;
}

BinMatrix operator*(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::kLengthMismatch, "matrix product size mismatch");
  BinMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.get(i, k)) out.data_[i] ^= b.data_[k];
    }
  }
  return out;
}

LUPFactors lup_decompose(const BinMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error(Errc::kSingularMatrix, "matrix is not square");
  BinMatrix m = a;
  BinMatrix l = BinMatrix::identity(n);
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && !m.get(p, k)) ++p;
    if (p == n) throw Error(Errc::kSingularMatrix, "matrix is singular");
    if (p != k) {
      std::swap(m.row(p), m.row(k));
      std::swap(perm[p], perm[k]);
      for (std::size_t j = 0; j < k; ++j) {
        const bool t = l.get(p, j);
        l.set(p, j, l.get(k, j));
        l.set(k, j, t);
      }
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m.get(i, k)) {
        l.set(i, k, true);
        m.row(i) ^= m.row(k);
      }
    }
  }
  return {std::move(l), std::move(m), std::move(perm)};
}

LinearMap LinearMap::const_mul(FieldElement gamma) {
  LinearMap m;
  m.steps_.push_back({Step::Kind::kConstMul, std::move(gamma), 0});
  return m;
}

LinearMap LinearMap::square() { return pow2(1); }

LinearMap LinearMap::pow2(std::size_t k) {
  LinearMap m;
  m.steps_.push_back({Step::Kind::kPow2, FieldElement(), k});
  return m;
}

LinearMap LinearMap::then(const LinearMap& next) const {
  LinearMap m = *this;
  m.steps_.insert(m.steps_.end(), next.steps_.begin(), next.steps_.end());
  return m;
}

FieldElement LinearMap::apply(const FieldSpec& spec, const FieldElement& v) const {
  FieldElement r = v;
  for (const auto& s : steps_) {
    if (s.kind == Step::Kind::kConstMul) {
      if (s.gamma.is_zero()) throw Error(Errc::kZeroConstant, "constant factor is zero");
      r = fmul(spec, s.gamma, r);
    } else {
      r = fpow2k(spec, r, s.k);
    }
  }
  return r;
}

BinMatrix matrix_of_linear_map(const FieldSpec& spec, const LinearMap& map) {
  const std::size_t n = spec.n();
  BinMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const FieldElement img = map.apply(spec, FieldElement::monomial(n, j));
    for (std::size_t i = 0; i < n; ++i) m.set(i, j, img.coeff(i));
  }
  return m;
}

std::vector<std::uint32_t> emit_linear_inplace(CircuitBuilder& b, const BinMatrix& a,
                                               std::span<const std::uint32_t> wires) {
  const std::size_t n = a.rows();
  if (a.cols() != n || wires.size() != n) {
    throw Error(Errc::kLengthMismatch, "in-place linear map needs a square matrix");
  }
  const LUPFactors f = lup_decompose(a);

  // U: v_i ^= U_ij v_j (j > i). Controls are read before they are written
  // when the ops run in ascending i + j; equal sums touch disjoint wires.
  for (std::size_t s = 1; s + 1 < 2 * n; ++s) {
    for (std::size_t i = (s + 1 > n ? s + 1 - n : 0); 2 * i < s; ++i) {
      const std::size_t j = s - i;
      if (f.U.get(i, j)) b.cx(wires[j], wires[i]);
    }
  }
  // L: v_i ^= L_ij v_j (j < i), descending i + j.
  for (std::size_t s = 2 * n; s-- > 1;) {
    for (std::size_t j = (s + 1 > n ? s + 1 - n : 0); 2 * j < s; ++j) {
      const std::size_t i = s - j;
      if (f.L.get(i, j)) b.cx(wires[j], wires[i]);
    }
  }

  // Wire i now holds (A v)_{perm[i]}.
  std::vector<std::uint32_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[f.perm[i]] = static_cast<std::uint32_t>(i);
  return order;
}

void emit_linear_outofplace(CircuitBuilder& b, const BinMatrix& a,
                            std::span<const std::uint32_t> in,
                            std::span<const std::uint32_t> out) {
  if (in.size() != a.cols() || out.size() != a.rows()) {
    throw Error(Errc::kLengthMismatch, "out-of-place linear map size mismatch");
  }
  const std::size_t nin = a.cols();
  const std::size_t nout = a.rows();
  const std::size_t colors = std::max(a.max_row_weight(), a.max_col_weight());
  if (colors == 0) return;

  // König edge coloring; left vertices are inputs, right vertices outputs.
  std::vector<std::vector<int>> at_in(nin, std::vector<int>(colors, -1));
  std::vector<std::vector<int>> at_out(nout, std::vector<int>(colors, -1));
  auto free_color = [&](const std::vector<int>& slots) {
    for (std::size_t c = 0; c < colors; ++c) {
      if (slots[c] < 0) return c;
    }
    throw Error(Errc::kInvalidArgument, "edge coloring ran out of colors");
  };

  for (std::size_t k = 0; k < nout; ++k) {
    for (std::size_t j = 0; j < nin; ++j) {
      if (!a.get(k, j)) continue;
      const std::size_t ca = free_color(at_in[j]);
      if (at_out[k][ca] >= 0) {
        const std::size_t cb = free_color(at_out[k]);
        // Swap colors ca/cb along the alternating path leaving output k.
        struct Edge {
          std::size_t in, out, color;
        };
        std::vector<Edge> path;
        std::size_t v = k;
        bool on_out = true;
        std::size_t cur = ca;
        for (;;) {
          const int w = on_out ? at_out[v][cur] : at_in[v][cur];
          if (w < 0) break;
          const auto u = static_cast<std::size_t>(w);
          path.push_back(on_out ? Edge{u, v, cur} : Edge{v, u, cur});
          v = u;
          on_out = !on_out;
          cur = cur == ca ? cb : ca;
        }
        for (const auto& e : path) {
          at_in[e.in][e.color] = -1;
          at_out[e.out][e.color] = -1;
        }
        for (const auto& e : path) {
          const std::size_t c = e.color == ca ? cb : ca;
          at_in[e.in][c] = static_cast<int>(e.out);
          at_out[e.out][c] = static_cast<int>(e.in);
        }
      }
      at_in[j][ca] = static_cast<int>(k);
      at_out[k][ca] = static_cast<int>(j);
    }
  }

  for (std::size_t c = 0; c < colors; ++c) {
    for (std::size_t j = 0; j < nin; ++j) {
      if (at_in[j][c] >= 0) b.cx(in[j], out[static_cast<std::size_t>(at_in[j][c])]);
    }
  }
}

Circuit synth_linear_inplace(const BinMatrix& a) {
  CircuitBuilder b;
  const Wires x = b.add_register("x", static_cast<std::uint32_t>(a.rows()), RegisterRole::kOutput);
  std::vector<std::uint32_t> order = emit_linear_inplace(b, a, x);
  b.set_output_order("x", std::move(order));
  return std::move(b).build();
}

Circuit synth_linear_outofplace(const BinMatrix& a) {
  CircuitBuilder b;
  const Wires in = b.add_register("in", static_cast<std::uint32_t>(a.cols()), RegisterRole::kInput);
  const Wires out =
      b.add_register("out", static_cast<std::uint32_t>(a.rows()), RegisterRole::kOutput);
  emit_linear_outofplace(b, a, in, out);
  return std::move(b).build();
}

}  // namespace ecqc

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

#include "ecqc/field_circuits.hpp"

#include <string>
#include <utility>

#include "ecqc/error.hpp"

namespace ecqc {

namespace {

// Row start points s_0..s_n with s_0 = first, s_n = last and
// s_i != s_{i+1}. Row i begins on column s_i and ends on s_{i+1}, so
// consecutive rows share an accumulator wire and the compact multiplier is a
// single Toffoli chain.
std::vector<std::size_t> row_walk(std::size_t n, std::size_t first, std::size_t last) {
  if (first >= n || last >= n || (n == 2 && first != last)) {
    throw Error(Errc::kInvalidArgument, "no Toffoli walk with these end columns");
  }
  std::vector<std::size_t> s(n + 1);
  s[0] = first;
  s[n] = last;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t c = 0;
    while (c == s[i - 1] || (i == n - 1 && c == last)) ++c;
    s[i] = c;
  }
  return s;
}

// beta <- x * beta mod f on the logical order `perm`, by relabeling plus
// one CNOT per middle term of f.
void times_x(CircuitBuilder& b, const BitVec& f, std::vector<std::uint32_t>& perm) {
  const std::size_t n = perm.size();
  std::uint32_t top = perm[n - 1];
  for (std::size_t j = n - 1; j > 0; --j) perm[j] = perm[j - 1];
  perm[0] = top;
  for (std::size_t j = 1; j < n; ++j) {
    if (f.get(j)) b.cx(perm[0], perm[j]);
  }
}

void div_x(CircuitBuilder& b, const BitVec& f, std::vector<std::uint32_t>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t j = n - 1; j > 0; --j) {
    if (f.get(j)) b.cx(perm[0], perm[j]);
  }
  std::uint32_t bottom = perm[0];
  for (std::size_t j = 0; j + 1 < n; ++j) perm[j] = perm[j + 1];
  perm[n - 1] = bottom;
}

void check_sizes(std::size_t n, std::initializer_list<std::size_t> sizes) {
  for (std::size_t s : sizes) {
    if (s != n) throw Error(Errc::kLengthMismatch, "register size differs from n");
  }
}

}  // namespace

const char* schedule_name(MultSchedule s) {
  return s == MultSchedule::kCompact ? "compact" : "fanout";
}

MultSchedule parse_schedule(std::string_view s) {
  if (s == "compact") return MultSchedule::kCompact;
  if (s == "fanout") return MultSchedule::kFanout;
  throw Error(Errc::kInvalidArgument, "unknown schedule: " + std::string(s));
}

Placement parse_placement(std::string_view s) {
  if (s == "in" || s == "in_place" || s == "in-place") return Placement::kInPlace;
  if (s == "out" || s == "out_of_place" || s == "out-of-place") return Placement::kOutOfPlace;
  throw Error(Errc::kInvalidArgument, "unknown placement: " + std::string(s));
}

void emit_mult_accumulate(CircuitBuilder& b, const FieldSpec& spec,
                          std::span<const std::uint32_t> a,
                          std::span<const std::uint32_t> bb,
                          std::span<const std::uint32_t> acc, MultSchedule schedule,
                          std::span<const std::uint32_t> fan, ToffoliWalk walk) {
  const std::size_t n = spec.n();
  if (n < 2) throw Error(Errc::kDegreeTooSmall, "multiplier needs n >= 2");
  check_sizes(n, {a.size(), bb.size(), acc.size()});
  if (schedule == MultSchedule::kFanout && fan.size() != n - 1) {
    throw Error(Errc::kLengthMismatch, "fanout multiplier needs n-1 ancillae");
  }
  const BitVec& f = spec.modulus();
  std::vector<std::uint32_t> perm(bb.begin(), bb.end());

  if (schedule == MultSchedule::kCompact) {
    const std::vector<std::size_t> cols = row_walk(n, walk.first, walk.last);
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) times_x(b, f, perm);
      const std::size_t first = cols[i];
      const std::size_t last = cols[i + 1];
      b.ccx(a[i], perm[first], acc[first]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != first && j != last) b.ccx(a[i], perm[j], acc[j]);
      }
      b.ccx(a[i], perm[last], acc[last]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) times_x(b, f, perm);
      // Doubling tree: every holder of a_i copies it to a fresh ancilla.
      std::vector<std::uint32_t> holders{a[i]};
      std::vector<Gate> copies;
      std::size_t next = 0;
      while (next < n - 1) {
        const std::size_t have = holders.size();
        for (std::size_t k = 0; k < have && next < n - 1; ++k) {
          copies.push_back(Gate::cx(holders[k], fan[next]));
          holders.push_back(fan[next++]);
        }
      }
      b.append(copies);
      for (std::size_t j = 0; j < n; ++j) b.ccx(holders[j], perm[j], acc[j]);
      for (auto it = copies.rbegin(); it != copies.rend(); ++it) b.push(*it);
    }
  }
  for (std::size_t i = 1; i < n; ++i) div_x(b, f, perm);
}

void emit_linear_map(CircuitBuilder& b, const FieldSpec& spec, const LinearMap& map,
                     std::span<const std::uint32_t> in, std::span<const std::uint32_t> out) {
  BinMatrix m;
  try {
    m = matrix_of_linear_map(spec, map);
  } catch (const Error& e) {
    if (e.code() == Errc::kZeroConstant) return;
    throw;
  }
  emit_linear_outofplace(b, m, in, out);
}

Circuit synth_add_inplace(const FieldSpec& spec) {
  const auto n = static_cast<std::uint32_t>(spec.n());
  CircuitBuilder b;
  const Wires a = b.add_register("a", n, RegisterRole::kInput);
  const Wires t = b.add_register("b", n, RegisterRole::kOutput);
  b.add_into(a, t);
  return std::move(b).build();
}

Circuit synth_add_outofplace(const FieldSpec& spec) {
  const auto n = static_cast<std::uint32_t>(spec.n());
  CircuitBuilder b;
  const Wires a = b.add_register("a", n, RegisterRole::kInput);
  const Wires c = b.add_register("b", n, RegisterRole::kInput);
  const Wires s = b.add_register("sum", n, RegisterRole::kOutput);
  b.add_into(a, s);
  b.add_into(c, s);
  return std::move(b).build();
}

Circuit synth_mult_accumulate(const FieldSpec& spec, MultSchedule schedule) {
  const auto n = static_cast<std::uint32_t>(spec.n());
  if (n < 2) throw Error(Errc::kDegreeTooSmall, "multiplier needs n >= 2");
  CircuitBuilder b;
  const Wires a = b.add_register("a", n, RegisterRole::kInput);
  const Wires c = b.add_register("b", n, RegisterRole::kInput);
  const Wires acc = b.add_register("acc", n, RegisterRole::kOutput);
  Wires fan;
  if (schedule == MultSchedule::kFanout) fan = b.add_register("fan", n - 1, RegisterRole::kAncilla);
  emit_mult_accumulate(b, spec, a, c, acc, schedule, fan);
  return std::move(b).build();
}

Circuit synth_square(const FieldSpec& spec) {
  return synth_pow2k(spec, 1, Placement::kOutOfPlace);
}

namespace {

Circuit synth_linear_field_map(const FieldSpec& spec, const LinearMap& map,
                               Placement placement) {
  const auto n = static_cast<std::uint32_t>(spec.n());
  CircuitBuilder b;
  if (placement == Placement::kInPlace) {
    const BinMatrix m = matrix_of_linear_map(spec, map);
    const Wires x = b.add_register("x", n, RegisterRole::kOutput);
    std::vector<std::uint32_t> order = emit_linear_inplace(b, m, x);
    b.set_output_order("x", std::move(order));
  } else {
    const Wires a = b.add_register("a", n, RegisterRole::kInput);
    const Wires out = b.add_register("out", n, RegisterRole::kOutput);
    emit_linear_map(b, spec, map, a, out);
  }
  return std::move(b).build();
}

}  // namespace

Circuit synth_const_mult(const FieldSpec& spec, const FieldElement& gamma, Placement placement) {
  if (gamma.size() != spec.n()) throw Error(Errc::kSpecMismatch, "constant has the wrong size");
  return synth_linear_field_map(spec, LinearMap::const_mul(gamma), placement);
}

Circuit synth_pow2k(const FieldSpec& spec, std::size_t k, Placement placement) {
  return synth_linear_field_map(spec, LinearMap::pow2(k), placement);
}

}  // namespace ecqc

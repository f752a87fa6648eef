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
#include <span>
#include <string_view>
#include <vector>

#include "ecqc/circuit.hpp"
#include "ecqc/gf2.hpp"
#include "ecqc/linear.hpp"

namespace ecqc {

// compact: no ancillae, each multiplier row is serial on its alpha bit.
// fanout: n-1 ancillae hold copies of the alpha bit so a row is one
// Toffoli layer.
enum class MultSchedule { kCompact, kFanout };
enum class Placement { kInPlace, kOutOfPlace };

const char* schedule_name(MultSchedule s);
// Throws Error(kInvalidArgument).
MultSchedule parse_schedule(std::string_view s);
Placement parse_placement(std::string_view s);

// Accumulator columns hit by the first and the last Toffoli of a compact
// multiplier. The first Toffoli is (a_0, b_first, acc_first), the last is
// (a_{n-1}, b_{last+1 mod n}, acc_last). n = 2 needs first == last.
struct ToffoliWalk {
  std::size_t first = 0;
  std::size_t last = 0;
};

// acc ^= a * b by shift-and-add. b is rotated in place between rows and
// restored afterwards. `fan` must hold n-1 zero wires in fanout mode and is
// ignored otherwise. Throws kDegreeTooSmall for n < 2.
void emit_mult_accumulate(CircuitBuilder& b, const FieldSpec& spec,
                          std::span<const std::uint32_t> a,
                          std::span<const std::uint32_t> bb,
                          std::span<const std::uint32_t> acc, MultSchedule schedule,
                          std::span<const std::uint32_t> fan = {}, ToffoliWalk walk = {});

// out ^= map(in). A zero constant factor emits nothing (the map is zero).
void emit_linear_map(CircuitBuilder& b, const FieldSpec& spec, const LinearMap& map,
                     std::span<const std::uint32_t> in, std::span<const std::uint32_t> out);

// Register layouts:
//   add:         a (in), b (out)          b <- a + b
//   add-oop:     a, b (in), sum (out)
//   mult:        a, b (in), acc (out), fan (anc, fanout only)
//   square:      a (in), out (out)
//   const-mult / pow2k in place:      x (out)
//   const-mult / pow2k out of place:  a (in), out (out)
Circuit synth_add_inplace(const FieldSpec& spec);
Circuit synth_add_outofplace(const FieldSpec& spec);
Circuit synth_mult_accumulate(const FieldSpec& spec, MultSchedule schedule);
Circuit synth_square(const FieldSpec& spec);
// Throws kZeroConstant for gamma = 0 in place.
Circuit synth_const_mult(const FieldSpec& spec, const FieldElement& gamma, Placement placement);
Circuit synth_pow2k(const FieldSpec& spec, std::size_t k, Placement placement);

}  // namespace ecqc

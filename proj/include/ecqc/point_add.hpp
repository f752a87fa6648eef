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

#include "ecqc/circuit.hpp"
#include "ecqc/curves.hpp"
#include "ecqc/field_circuits.hpp"

namespace ecqc {

// Mixed addition of a fixed affine point (x2, y2) to a projective input.
// Registers: X1, Y1, Z1 (in), X3, Y3, Z3 (out), then named ancillae. In
// fanout mode the k-th multiplier of every stage borrows ancilla pool
// "poolk". Throws kPointNotOnCurve when (x2, y2) is off the curve.
//
// Standard projective coordinates, 15 multiplications in 6 stages.
Circuit synth_madd_projective(const WeierstrassCurve& curve, const FieldElement& x2,
                              const FieldElement& y2, MultSchedule schedule);
// Higuchi-Takagi coordinates (y = Y/Z^2), 13 multiplications in 4 stages.
Circuit synth_madd_ht(const WeierstrassCurve& curve, const FieldElement& x2,
                      const FieldElement& y2, MultSchedule schedule);
// Complete Edwards addition of two projective inputs X1..Z1, X2..Z2,
// 39 multiplications in 9 stages. Throws kInvalidCurve.
Circuit synth_edwards_add(const EdwardsCurve& curve, MultSchedule schedule);

// Multiplier stages (forward plus uncompute) of each circuit, i.e. the
// Toffoli-depth in units of one multiplier under the fanout schedule.
inline constexpr std::size_t kMaddProjectiveStages = 6;
inline constexpr std::size_t kMaddHtStages = 4;
inline constexpr std::size_t kEdwardsStages = 9;
inline constexpr std::size_t kMaddProjectiveMults = 15;
inline constexpr std::size_t kMaddHtMults = 13;
inline constexpr std::size_t kEdwardsMults = 39;

}  // namespace ecqc

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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ecqc/circuit.hpp"
#include "ecqc/curves.hpp"
#include "ecqc/field_circuits.hpp"
#include "ecqc/gf2.hpp"

namespace ecqc {

enum class CircuitKind {
  kAdd,
  kAddOop,
  kMult,
  kSquare,
  kConstMult,
  kPow2k,
  kInvert,
  kMaddProjective,
  kMaddHt,
  kEdwardsAdd,
};

const char* kind_name(CircuitKind kind);
// Throws Error(kInvalidArgument).
CircuitKind parse_kind(std::string_view name);
bool is_point_kind(CircuitKind kind);

// Everything needed to synthesize one circuit and to check it.
struct CircuitJob {
  CircuitJob(CircuitKind kind, FieldSpec spec) : kind(kind), spec(std::move(spec)) {}

  CircuitKind kind;
  FieldSpec spec;
  MultSchedule schedule = MultSchedule::kFanout;
  Placement placement = Placement::kOutOfPlace;
  std::optional<FieldElement> gamma;  // const-mult
  std::size_t k = 1;                  // pow2k
  std::optional<WeierstrassCurve> weierstrass;
  std::optional<EdwardsCurve> edwards;
  std::optional<AffinePoint> fixed_point;  // madd kinds
};

// Fills in defaults: gamma = x, the default curves, and a fixed point
// sampled with `seed`.
CircuitJob complete_job(CircuitJob job, std::uint64_t seed);
Circuit synthesize(const CircuitJob& job);

// Closed-form Toffoli count of the kind, and its printable form.
std::uint64_t expected_toffoli_count(const CircuitJob& job);
std::string toffoli_formula(CircuitKind kind);

struct VerifyOptions {
  std::uint64_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t exhaustive_max_n = 8;
};

struct VerifyResult {
  bool ok = true;
  bool exhaustive = false;
  std::uint64_t cases = 0;
  std::uint64_t toffoli = 0;
  std::uint64_t expected_toffoli = 0;
  std::string failure;         // empty when ok
  std::string counterexample;  // register values of the failing case
  std::vector<std::string> notes;
};

// Simulates `c` on the job's sweep (exhaustive for n <= exhaustive_max_n,
// seeded samples otherwise) and checks outputs against the field and curve
// oracles, ancilla restoration, input preservation, and the Toffoli count.
VerifyResult verify_circuit(const Circuit& c, const CircuitJob& job, const VerifyOptions& opts);

}  // namespace ecqc

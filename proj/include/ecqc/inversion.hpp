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
#include <vector>

#include "ecqc/circuit.hpp"
#include "ecqc/field_circuits.hpp"
#include "ecqc/gf2.hpp"

namespace ecqc {

// beta_{i+j} = beta_i * beta_j^(2^i), where beta_m = alpha^(2^m - 1).
struct ITEval {
  std::size_t i;
  std::size_t j;
};

struct ITPlan {
  std::size_t n = 0;
  std::vector<std::size_t> exponents;  // k_1 > k_2 > ..., n-1 = sum 2^k
  std::vector<ITEval> evals;
  std::size_t multiplications() const noexcept { return evals.size(); }
};

// Doubling steps up to 2^k_1, then one step per remaining exponent.
// Throws Error(kDegreeTooSmall) for n < 2.
ITPlan plan_itoh_tsujii(std::size_t n);

// floor(log2(n-1)) + HW(n-1) - 1; zero for n = 2.
std::size_t itoh_tsujii_mults(std::size_t n);
std::uint64_t inverter_toffoli_count(std::size_t n);
// 2 (floor(log2(n-1)) + HW(n-1) - 2) n^2, the published closed form, which
// undercounts by 2 n^2. Signed because it is negative for n = 2.
std::int64_t published_inverter_toffoli_count(std::size_t n);

// Registers: a (in), work (anc, 2nM), fan (anc, n-1, fanout only), out.
// out <- a^-1 (0 for a = 0), everything else restored.
Circuit synth_inverter(const FieldSpec& spec, MultSchedule schedule);

}  // namespace ecqc

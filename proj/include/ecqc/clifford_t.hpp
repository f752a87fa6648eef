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

#include <array>
#include <cstdint>
#include <vector>

#include "ecqc/circuit.hpp"

namespace ecqc {

enum class CliffordTKind : std::uint8_t { kH, kT, kTdg, kS, kSdg, kX, kCnot };

struct CliffordTGate {
  CliffordTKind kind;
  std::array<std::uint32_t, 2> wires;  // CNOT: control, target

  std::size_t arity() const noexcept { return kind == CliffordTKind::kCnot ? 2 : 1; }
  bool is_t_like() const noexcept {
    return kind == CliffordTKind::kT || kind == CliffordTKind::kTdg;
  }
  friend bool operator==(const CliffordTGate&, const CliffordTGate&) = default;
};

// The ancilla-free seven-T Toffoli network (T-depth 3) for controls a, b and
// target t: Hadamard-conjugated CCZ written as a phase polynomial over the
// parities a, b, c, a^b^c, a^b, a^c, b^c.
std::vector<CliffordTGate> toffoli_network(std::uint32_t a, std::uint32_t b, std::uint32_t t);

// Replaces every Toffoli by toffoli_network; NOT and CNOT pass through.
std::vector<CliffordTGate> toffoli_to_clifford_t(const Circuit& c);

std::uint64_t t_count(const std::vector<CliffordTGate>& gates);
// Number of T/T-dagger layers under ASAP wire-conflict scheduling.
std::uint64_t t_depth(const std::vector<CliffordTGate>& gates, std::uint32_t width);

}  // namespace ecqc

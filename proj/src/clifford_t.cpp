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

#include "ecqc/clifford_t.hpp"

#include <algorithm>

namespace ecqc {

std::vector<CliffordTGate> toffoli_network(std::uint32_t a, std::uint32_t b, std::uint32_t t) {
  using K = CliffordTKind;
  auto one = [](K k, std::uint32_t w) { return CliffordTGate{k, {w, 0}}; };
  auto cx = [](std::uint32_t c, std::uint32_t tg) { return CliffordTGate{K::kCnot, {c, tg}}; };
  // Wires (a, b, t) -> (a^b^t, a^b, a^t) -> T on a^b^t, Tdg on a^b and
  // a^t -> b^t on the target wire, Tdg -> undo.
  return {
      one(K::kH, t),
      one(K::kT, a), one(K::kT, b), one(K::kT, t),
      cx(a, b), cx(a, t), cx(b, a), cx(t, a),
      one(K::kT, a), one(K::kTdg, b), one(K::kTdg, t),
      cx(b, t),
      one(K::kTdg, t),
      cx(b, t),
      cx(t, a), cx(b, a), cx(a, t), cx(a, b),
      one(K::kH, t),
  };
}

std::vector<CliffordTGate> toffoli_to_clifford_t(const Circuit& c) {
  std::vector<CliffordTGate> out;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kNot: out.push_back({CliffordTKind::kX, {g.wires[0], 0}}); break;
      case GateKind::kCnot: out.push_back({CliffordTKind::kCnot, {g.wires[0], g.wires[1]}}); break;
      case GateKind::kToffoli: {
        auto net = toffoli_network(g.wires[0], g.wires[1], g.wires[2]);
        out.insert(out.end(), net.begin(), net.end());
        break;
      }
    }
  }
  return out;
}

std::uint64_t t_count(const std::vector<CliffordTGate>& gates) {
  return static_cast<std::uint64_t>(
      std::count_if(gates.begin(), gates.end(), [](const auto& g) { return g.is_t_like(); }));
}

std::uint64_t t_depth(const std::vector<CliffordTGate>& gates, std::uint32_t width) {
  // Clifford gates carry weight zero; a T gate starts a new T layer after
  // everything it depends on.
  std::vector<std::uint64_t> level(width, 0);
  std::uint64_t depth = 0;
  for (const auto& g : gates) {
    std::uint64_t l = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) l = std::max(l, level[g.wires[i]]);
    if (g.is_t_like()) ++l;
    for (std::size_t i = 0; i < g.arity(); ++i) level[g.wires[i]] = l;
    depth = std::max(depth, l);
  }
  return depth;
}

}  // namespace ecqc

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

#include "ecqc/circuit.hpp"

#include <algorithm>
#include <numeric>

#include "ecqc/error.hpp"

namespace ecqc {

const char* role_name(RegisterRole role) {
  switch (role) {
    case RegisterRole::kInput: return "in";
    case RegisterRole::kOutput: return "out";
    case RegisterRole::kAncilla: return "anc";
  }
  return "?";
}

Circuit::Circuit(std::uint32_t width, std::vector<Gate> gates, std::vector<Register> registers)
    : width_(width), gates_(std::move(gates)), registers_(std::move(registers)) {
  for (const auto& g : gates_) {
    const auto w = g.used();
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] >= width_) {
        throw Error(Errc::kInvalidArgument, "gate wire " + std::to_string(w[i]) +
                                                " outside width " + std::to_string(width_));
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (w[i] == w[j]) throw Error(Errc::kInvalidArgument, "gate repeats a wire");
      }
    }
  }
  std::vector<const Register*> sorted;
  for (const auto& r : registers_) {
    if (r.size == 0 || std::uint64_t{r.lo} + r.size > width_) {
      throw Error(Errc::kInvalidArgument, "register '" + r.name + "' outside the circuit");
    }
    if (!r.output_order.empty()) {
      auto order = r.output_order;
      std::sort(order.begin(), order.end());
      for (std::uint32_t i = 0; i < order.size(); ++i) {
        if (order.size() != r.size || order[i] != i) {
          throw Error(Errc::kInvalidArgument, "register '" + r.name + "' has a bad output order");
        }
      }
    }
    sorted.push_back(&r);
  }
  std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) { return a->lo < b->lo; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1]->lo + sorted[i - 1]->size > sorted[i]->lo) {
      throw Error(Errc::kWireCollision,
                  "registers '" + sorted[i - 1]->name + "' and '" + sorted[i]->name + "' overlap");
    }
  }
}

const Register* Circuit::find_register(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

const Register& Circuit::register_named(std::string_view name) const {
  if (const Register* r = find_register(name)) return *r;
  throw Error(Errc::kInvalidArgument, "no register named '" + std::string(name) + "'");
}

std::uint32_t Circuit::ancilla_count() const {
  std::uint32_t n = 0;
  for (const auto& r : registers_) {
    if (r.role == RegisterRole::kAncilla) n += r.size;
  }
  return n;
}

Wires CircuitBuilder::add_register(std::string name, std::uint32_t size, RegisterRole role) {
  Register r;
  r.name = std::move(name);
  r.role = role;
  r.lo = width_;
  r.size = size;
  registers_.push_back(std::move(r));
  Wires w(size);
  std::iota(w.begin(), w.end(), width_);
  width_ += size;
  return w;
}

void CircuitBuilder::set_output_order(std::string_view name, std::vector<std::uint32_t> order) {
  for (auto& r : registers_) {
    if (r.name == name) {
      bool identity = true;
      for (std::size_t i = 0; i < order.size(); ++i) identity = identity && order[i] == i;
      if (identity) order.clear();
      r.output_order = std::move(order);
      return;
    }
  }
  throw Error(Errc::kInvalidArgument, "no register named '" + std::string(name) + "'");
}

void CircuitBuilder::add_into(std::span<const std::uint32_t> from,
                              std::span<const std::uint32_t> to) {
  if (from.size() != to.size()) throw Error(Errc::kLengthMismatch, "register sizes differ");
  for (std::size_t i = 0; i < from.size(); ++i) cx(from[i], to[i]);
}

void CircuitBuilder::uncompute() {
  const auto entries = tape_;
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (!it->undo) continue;
    for (std::size_t g = it->end; g-- > it->begin;) gates_.push_back(gates_[g]);
  }
}

Circuit CircuitBuilder::build() && {
  return Circuit(width_, std::move(gates_), std::move(registers_));
}

BitVec simulate(const Circuit& c, const BitVec& input) {
  if (input.size() != c.width()) {
    throw Error(Errc::kLengthMismatch, "input has " + std::to_string(input.size()) +
                                           " bits, circuit has " + std::to_string(c.width()) +
                                           " wires");
  }
  BitVec s = input;
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kNot: s.flip(g.wires[0]); break;
      case GateKind::kCnot:
        if (s.get(g.wires[0])) s.flip(g.wires[1]);
        break;
      case GateKind::kToffoli:
        if (s.get(g.wires[0]) && s.get(g.wires[1])) s.flip(g.wires[2]);
        break;
    }
  }
  return s;
}

void simulate_lanes(const Circuit& c, std::span<std::uint64_t> state) {
  if (state.size() != c.width()) throw Error(Errc::kLengthMismatch, "lane state width differs");
  std::uint64_t* s = state.data();
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kNot: s[g.wires[0]] = ~s[g.wires[0]]; break;
      case GateKind::kCnot: s[g.wires[1]] ^= s[g.wires[0]]; break;
      case GateKind::kToffoli: s[g.wires[2]] ^= s[g.wires[0]] & s[g.wires[1]]; break;
    }
  }
}

void load_register(BitVec& state, const Register& reg, const BitVec& value) {
  if (value.size() != reg.size) {
    throw Error(Errc::kLengthMismatch, "value for register '" + reg.name + "' has wrong length");
  }
  for (std::uint32_t i = 0; i < reg.size; ++i) state.set(reg.input_wire(i), value.get(i));
}

BitVec read_register(const BitVec& state, const Register& reg) {
  BitVec v(reg.size);
  for (std::uint32_t i = 0; i < reg.size; ++i) v.set(i, state.get(reg.output_wire(i)));
  return v;
}

void load_register_lane(std::span<std::uint64_t> state, const Register& reg, int lane,
                        const BitVec& value) {
  if (value.size() != reg.size) {
    throw Error(Errc::kLengthMismatch, "value for register '" + reg.name + "' has wrong length");
  }
  const std::uint64_t m = std::uint64_t{1} << lane;
  for (std::uint32_t i = 0; i < reg.size; ++i) {
    auto& w = state[reg.input_wire(i)];
    w = value.get(i) ? (w | m) : (w & ~m);
  }
}

BitVec read_register_lane(std::span<const std::uint64_t> state, const Register& reg, int lane,
                          bool output_order) {
  BitVec v(reg.size);
  for (std::uint32_t i = 0; i < reg.size; ++i) {
    const std::uint32_t w = output_order ? reg.output_wire(i) : reg.input_wire(i);
    v.set(i, (state[w] >> lane) & 1U);
  }
  return v;
}

std::vector<std::uint64_t> asap_layers(const Circuit& c) {
  std::vector<std::uint64_t> last(c.width(), 0);
  std::vector<std::uint64_t> layer;
  layer.reserve(c.gates().size());
  for (const auto& g : c.gates()) {
    std::uint64_t l = 0;
    for (auto w : g.used()) l = std::max(l, last[w]);
    ++l;
    for (auto w : g.used()) last[w] = l;
    layer.push_back(l);
  }
  return layer;
}

std::vector<std::uint64_t> toffoli_layers(const Circuit& c) {
  std::vector<std::uint64_t> last(c.width(), 0);
  std::vector<std::uint64_t> layer;
  for (const auto& g : c.gates()) {
    if (g.kind != GateKind::kToffoli) continue;
    std::uint64_t l = 0;
    for (auto w : g.used()) l = std::max(l, last[w]);
    ++l;
    for (auto w : g.used()) last[w] = l;
    layer.push_back(l);
  }
  return layer;
}

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  r.width = c.width();
  r.ancillae = c.ancilla_count();
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kNot: ++r.x; break;
      case GateKind::kCnot: ++r.cx; break;
      case GateKind::kToffoli: ++r.ccx; break;
    }
  }
  for (auto l : asap_layers(c)) r.depth = std::max(r.depth, l);
  for (auto l : toffoli_layers(c)) r.toffoli_depth = std::max(r.toffoli_depth, l);
  r.t_count = 7 * r.ccx;
  r.t_depth = 3 * r.toffoli_depth;
  return r;
}

Circuit compose(const Circuit& a, const Circuit& b, std::span<const std::uint32_t> wire_map) {
  if (wire_map.size() != b.width()) {
    throw Error(Errc::kLengthMismatch, "wire map must cover every wire of the second circuit");
  }
  std::uint32_t width = a.width();
  for (auto w : wire_map) width = std::max(width, w + 1);
  {
    std::vector<std::uint32_t> seen(wire_map.begin(), wire_map.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw Error(Errc::kWireCollision, "wire map is not injective");
    }
  }
  std::vector<Register> regs = a.registers();
  for (const auto& r : b.registers()) {
    for (std::uint32_t i = 1; i < r.size; ++i) {
      if (wire_map[r.lo + i] != wire_map[r.lo] + i) {
        throw Error(Errc::kWireCollision, "register '" + r.name + "' is not mapped contiguously");
      }
    }
    Register moved = r;
    moved.lo = wire_map[r.lo];
    if (const Register* same = a.find_register(r.name)) {
      if (same->lo != moved.lo || same->size != moved.size) {
        throw Error(Errc::kWireCollision, "register '" + r.name + "' mapped onto different wires");
      }
      continue;
    }
    for (const auto& existing : regs) {
      const bool overlap = moved.lo < existing.lo + existing.size &&
                           existing.lo < moved.lo + moved.size;
      if (overlap) {
        throw Error(Errc::kWireCollision,
                    "register '" + r.name + "' overlaps '" + existing.name + "'");
      }
    }
    regs.push_back(std::move(moved));
  }
  std::vector<Gate> gates = a.gates();
  gates.reserve(a.gates().size() + b.gates().size());
  for (Gate g : b.gates()) {
    for (std::size_t i = 0; i < g.arity(); ++i) g.wires[i] = wire_map[g.wires[i]];
    gates.push_back(g);
  }
  return Circuit(width, std::move(gates), std::move(regs));
}

Circuit compose(const Circuit& a, const Circuit& b) {
  std::vector<std::uint32_t> identity(b.width());
  std::iota(identity.begin(), identity.end(), 0U);
  return compose(a, b, identity);
}

Circuit inverse(const Circuit& c) {
  std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
  return Circuit(c.width(), std::move(gates), c.registers());
}

}  // namespace ecqc

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
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ecqc/bitvec.hpp"

namespace ecqc {

enum class GateKind : std::uint8_t { kNot, kCnot, kToffoli };

// Controls first, target last. Unused wire slots are zero.
struct Gate {
  GateKind kind;
  std::array<std::uint32_t, 3> wires;

  static Gate x(std::uint32_t t) { return {GateKind::kNot, {t, 0, 0}}; }
  static Gate cx(std::uint32_t c, std::uint32_t t) { return {GateKind::kCnot, {c, t, 0}}; }
  static Gate ccx(std::uint32_t c1, std::uint32_t c2, std::uint32_t t) {
    return {GateKind::kToffoli, {c1, c2, t}};
  }

  std::size_t arity() const noexcept { return static_cast<std::size_t>(kind) + 1; }
  std::uint32_t target() const noexcept { return wires[arity() - 1]; }
  std::span<const std::uint32_t> used() const noexcept { return {wires.data(), arity()}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class RegisterRole { kInput, kOutput, kAncilla };

const char* role_name(RegisterRole role);  // "in", "out", "anc"

// A named block of consecutive wires [lo, lo + size). Logical bit i is read
// from wire lo + i on input; on output it is read from
// lo + output_order[i] when an output order is recorded (wire relabeling
// produced by in-place linear synthesis), else from lo + i.
struct Register {
  std::string name;
  RegisterRole role = RegisterRole::kInput;
  std::uint32_t lo = 0;
  std::uint32_t size = 0;
  std::vector<std::uint32_t> output_order;

  std::uint32_t hi() const noexcept { return lo + size - 1; }
  std::uint32_t input_wire(std::size_t i) const { return lo + static_cast<std::uint32_t>(i); }
  std::uint32_t output_wire(std::size_t i) const {
    return lo + (output_order.empty() ? static_cast<std::uint32_t>(i) : output_order[i]);
  }
  bool contains(std::uint32_t w) const noexcept { return w >= lo && w < lo + size; }

  friend bool operator==(const Register&, const Register&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  // Validates gate arity, wire bounds, distinct wires per gate, and that
  // registers are disjoint and inside [0, width).
  Circuit(std::uint32_t width, std::vector<Gate> gates, std::vector<Register> registers);

  std::uint32_t width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<Register>& registers() const noexcept { return registers_; }
  const Register* find_register(std::string_view name) const;
  const Register& register_named(std::string_view name) const;
  std::uint32_t ancilla_count() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::uint32_t width_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> registers_;
};

using Wires = std::vector<std::uint32_t>;

// Incremental construction with an undo tape: gates emitted inside an
// uncompute-tagged step are replayed in reverse by uncompute().
class CircuitBuilder {
 public:
  Wires add_register(std::string name, std::uint32_t size, RegisterRole role);
  // Records a wire relabeling for the named register's output.
  void set_output_order(std::string_view name, std::vector<std::uint32_t> order);

  void x(std::uint32_t t) { push(Gate::x(t)); }
  void cx(std::uint32_t c, std::uint32_t t) { push(Gate::cx(c, t)); }
  void ccx(std::uint32_t a, std::uint32_t b, std::uint32_t t) { push(Gate::ccx(a, b, t)); }
  // to[i] ^= from[i].
  void add_into(std::span<const std::uint32_t> from, std::span<const std::uint32_t> to);
  void push(const Gate& g) { gates_.push_back(g); }
  void append(std::span<const Gate> gates) { gates_.insert(gates_.end(), gates.begin(), gates.end()); }

  enum class Undo { kKeep, kUncompute };
  // Runs fn() and records the gates it emits as one step.
  template <typename Fn>
  void step(Undo undo, Fn&& fn) {
    const std::size_t begin = gates_.size();
    fn();
    tape_.push_back({begin, gates_.size(), undo == Undo::kUncompute});
  }
  // Appends the inverse of every uncompute-tagged step, last step first.
  void uncompute();

  std::uint32_t width() const noexcept { return width_; }
  std::size_t gate_count() const noexcept { return gates_.size(); }
  Circuit build() &&;

 private:
  struct TapeEntry {
    std::size_t begin;
    std::size_t end;
    bool undo;
  };
  std::uint32_t width_ = 0;
  std::vector<Gate> gates_;
  std::vector<Register> registers_;
  std::vector<TapeEntry> tape_;
};

// Applies every gate to a width-bit basis state. Throws kLengthMismatch.
BitVec simulate(const Circuit& c, const BitVec& input);

// Bit-sliced simulation: state[w] carries wire w for 64 independent lanes.
void simulate_lanes(const Circuit& c, std::span<std::uint64_t> state);

// Register-level access to a wire state.
void load_register(BitVec& state, const Register& reg, const BitVec& value);
BitVec read_register(const BitVec& state, const Register& reg);
void load_register_lane(std::span<std::uint64_t> state, const Register& reg, int lane,
                        const BitVec& value);
BitVec read_register_lane(std::span<const std::uint64_t> state, const Register& reg, int lane,
                          bool output_order = true);

struct ResourceReport {
  std::uint32_t width = 0;
  std::uint32_t ancillae = 0;
  std::uint64_t x = 0;
  std::uint64_t cx = 0;
  std::uint64_t ccx = 0;
  std::uint64_t depth = 0;
  std::uint64_t toffoli_depth = 0;
  std::uint64_t t_count = 0;
  std::uint64_t t_depth = 0;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

// ASAP layer (1-based) of every gate: a gate lands one layer after the
// latest earlier gate sharing a wire with it.
std::vector<std::uint64_t> asap_layers(const Circuit& c);
// The same layering applied to the Toffoli gates only (other gates are
// deleted first). Entry i belongs to the i-th Toffoli of the circuit.
std::vector<std::uint64_t> toffoli_layers(const Circuit& c);
ResourceReport resource_report(const Circuit& c);

// Gates of a followed by the gates of b relocated through wire_map
// (b-wire -> combined wire). Registers of b that share a name with a
// register of a must land on the same wires; any other overlap is a
// WireCollision.
Circuit compose(const Circuit& a, const Circuit& b, std::span<const std::uint32_t> wire_map);
Circuit compose(const Circuit& a, const Circuit& b);
// Reversed gate order; NOT/CNOT/Toffoli are self-inverse.
Circuit inverse(const Circuit& c);

}  // namespace ecqc

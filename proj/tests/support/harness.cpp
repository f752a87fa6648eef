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


#include "support/harness.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <set>
#include <utility>
#include <stdexcept>

namespace ecqc::testing {

RegisterValues run(const Circuit& c, const RegisterValues& inputs) {
  BitVec state(c.width());
  for (const auto& [name, value] : inputs) {
    load_register(state, c.register_named(name), value);
  }
  const BitVec out = simulate(c, state);
  RegisterValues result;
  for (const auto& reg : c.registers()) result[reg.name] = read_register(out, reg);
  return result;
}

FieldSpec random_field(std::size_t n, std::mt19937_64& rng) {
  const BitVec def = default_modulus(n);
  std::vector<BitVec> pool;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t low = 0; low < count && pool.size() < 64; ++low) {
    BitVec f = BitVec::from_u64(n + 1, (low << 1) | 1);
    f.set(n, true);
    if (f != def && is_irreducible(f)) pool.push_back(f);
  }
  if (pool.empty()) return make_field_spec(n, def);
  return make_field_spec(n, pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
}

Circuit random_circuit(std::uint32_t width, std::size_t gates, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> wire(0, width - 1);
  std::vector<Gate> out;
  while (out.size() < gates) {
    const int kind = static_cast<int>(rng() % (width >= 3 ? 3 : width));
    const std::uint32_t a = wire(rng), b = wire(rng), t = wire(rng);
    if (kind == 0) {
      out.push_back(Gate::x(a));
    } else if (kind == 1 && a != b) {
      out.push_back(Gate::cx(a, b));
    } else if (kind == 2 && a != b && a != t && b != t) {
      out.push_back(Gate::ccx(a, b, t));
    }
  }
  return Circuit(width, std::move(out), {Register{"q", RegisterRole::kInput, 0, width, {}}});
}

bool layers_wire_disjoint(const std::vector<Gate>& gates, const std::vector<std::uint64_t>& layer) {
  if (layer.size() != gates.size()) return false;
  std::set<std::pair<std::uint64_t, std::uint32_t>> seen;
  for (std::size_t i = 0; i < layer.size(); ++i) {
    for (auto w : gates[i].used()) {
      if (!seen.insert({layer[i], w}).second) return false;
    }
  }
  return true;
}

std::vector<Gate> toffolis_of(const Circuit& c) {
  std::vector<Gate> out;
  for (const auto& g : c.gates()) {
    if (g.kind == GateKind::kToffoli) out.push_back(g);
  }
  return out;
}

CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) throw std::runtime_error("popen failed: " + cmd);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace ecqc::testing

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

#include "ecqc/inversion.hpp"

#include <bit>
#include <map>

#include "ecqc/error.hpp"

namespace ecqc {

ITPlan plan_itoh_tsujii(std::size_t n) {
  if (n < 2) throw Error(Errc::kDegreeTooSmall, "inversion needs n >= 2");
  ITPlan plan;
  plan.n = n;
  const std::size_t m = n - 1;
  for (std::size_t k = std::bit_width(m); k-- > 0;) {
    if ((m >> k) & 1U) plan.exponents.push_back(k);
  }
  const std::size_t k1 = plan.exponents.front();
  for (std::size_t t = 1; t <= k1; ++t) {
    const std::size_t h = std::size_t{1} << (t - 1);
    plan.evals.push_back({h, h});
  }
  std::size_t acc = std::size_t{1} << k1;
  for (std::size_t e = 1; e < plan.exponents.size(); ++e) {
    const std::size_t p = std::size_t{1} << plan.exponents[e];
    plan.evals.push_back({acc, p});
    acc += p;
  }
  return plan;
}

std::size_t itoh_tsujii_mults(std::size_t n) { return plan_itoh_tsujii(n).multiplications(); }

std::uint64_t inverter_toffoli_count(std::size_t n) {
  return 2 * static_cast<std::uint64_t>(itoh_tsujii_mults(n)) * n * n;
}

std::int64_t published_inverter_toffoli_count(std::size_t n) {
  if (n < 2) throw Error(Errc::kDegreeTooSmall, "inversion needs n >= 2");
  const auto m = static_cast<std::int64_t>(std::bit_width(n - 1) - 1 + std::popcount(n - 1)) - 2;
  return 2 * m * static_cast<std::int64_t>(n * n);
}

Circuit synth_inverter(const FieldSpec& spec, MultSchedule schedule) {
  const ITPlan plan = plan_itoh_tsujii(spec.n());
  const auto n = static_cast<std::uint32_t>(spec.n());
  const auto mults = static_cast<std::uint32_t>(plan.multiplications());

  CircuitBuilder b;
  const Wires a = b.add_register("a", n, RegisterRole::kInput);
  Wires work;
  if (mults > 0) work = b.add_register("work", 2 * n * mults, RegisterRole::kAncilla);
  Wires fan;
  if (schedule == MultSchedule::kFanout && mults > 0) {
    fan = b.add_register("fan", n - 1, RegisterRole::kAncilla);
  }
  const Wires out = b.add_register("out", n, RegisterRole::kOutput);

  auto slot = [&](std::size_t k) { return std::span<const std::uint32_t>(work).subspan(k * n, n); };
  std::map<std::size_t, std::span<const std::uint32_t>> beta;
  beta[1] = a;
  for (std::size_t e = 0; e < plan.evals.size(); ++e) {
    const auto [i, j] = plan.evals[e];
    const auto frob = slot(2 * e);
    const auto prod = slot(2 * e + 1);
    b.step(CircuitBuilder::Undo::kUncompute, [&] {
      emit_linear_map(b, spec, LinearMap::pow2(i), beta.at(j), frob);
      emit_mult_accumulate(b, spec, beta.at(i), frob, prod, schedule, fan);
    });
    beta[i + j] = prod;
  }
  emit_linear_map(b, spec, LinearMap::square(), beta.at(spec.n() - 1), out);
  b.uncompute();
  return std::move(b).build();
}

}  // namespace ecqc

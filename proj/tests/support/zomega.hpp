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


// Exact state-vector simulation of Clifford+T gate lists over Z[w],
// w = exp(i*pi/4). Each H contributes an implicit factor 1/sqrt(2) that is
// tracked as a count instead of being applied.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ecqc/clifford_t.hpp"

namespace ecqc::testing {

// a[0] + a[1] w + a[2] w^2 + a[3] w^3, with w^4 = -1.
struct ZOmega {
  std::array<std::int64_t, 4> a{};

  static ZOmega integer(std::int64_t v) { return ZOmega{{v, 0, 0, 0}}; }
  ZOmega times_omega(int k) const;
  bool is_zero() const { return a == std::array<std::int64_t, 4>{}; }

  friend ZOmega operator+(const ZOmega& x, const ZOmega& y);
  friend ZOmega operator-(const ZOmega& x, const ZOmega& y);
  friend bool operator==(const ZOmega&, const ZOmega&) = default;
};

struct ExactState {
  std::uint32_t width = 0;
  std::vector<ZOmega> amp;  // index bit i is wire i
  int h_count = 0;          // overall scale is 1/sqrt(2)^h_count

  static ExactState basis(std::uint32_t width, std::uint64_t index);
  void apply(const CliffordTGate& g);
  void apply(const std::vector<CliffordTGate>& gates) {
    for (const auto& g : gates) apply(g);
  }
};

}  // namespace ecqc::testing

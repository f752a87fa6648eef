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


#include "ecqc/circuit_io.hpp"

#include <gtest/gtest.h>

#include <random>

#include "ecqc/error.hpp"
#include "ecqc/field_circuits.hpp"
#include "support/harness.hpp"

namespace ecqc {
namespace {

TEST(CircuitText, Format) {
  const Circuit c(3, {Gate::x(0), Gate::cx(0, 1), Gate::ccx(0, 1, 2)},
                  {Register{"a", RegisterRole::kInput, 0, 2, {1, 0}},
                   Register{"t", RegisterRole::kOutput, 2, 1, {}}});
  EXPECT_EQ(write_circuit_text(c),
            "qubits 3\n"
            "reg a 0 1 in\n"
            "reg t 2 2 out\n"
            "perm a 1 0\n"
            "x 0\n"
            "cx 0 1\n"
            "ccx 0 1 2\n");
  EXPECT_EQ(parse_circuit_text(write_circuit_text(c)), c);
}

TEST(CircuitText, CommentsAndBlankLines) {
  const Circuit c = parse_circuit_text("# header\n\nqubits 2   # width\n  cx 1 0\n\n");
  EXPECT_EQ(c.width(), 2u);
  ASSERT_EQ(c.gates().size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::cx(1, 0));
}

TEST(CircuitText, RejectsBadInput) {
  for (const char* text : {"", "cx 0 1\n", "qubits 2\ncx 0 2\n", "qubits 3\nccx 0 0 1\n",
                           "qubits 2\nfoo 1\n", "qubits 2\ncx 0\n", "qubits 2\nreg a 0 1 io\n",
                           "qubits 2\nperm a 0 1\n", "qubits 2\nreg a 0 1 in\nperm a 0\n",
                           "qubits x\n"}) {
    try {
      parse_circuit_text(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kParse) << text;
    }
  }
}

TEST(CircuitText, RoundTripSynthesized) {
  const auto spec = default_field(7);
  for (auto s : {MultSchedule::kCompact, MultSchedule::kFanout}) {
    const Circuit c = synth_mult_accumulate(spec, s);
    const Circuit back = parse_circuit_text(write_circuit_text(c));
    EXPECT_EQ(back, c);
    EXPECT_EQ(report_json(resource_report(back)), report_json(resource_report(c)));
  }
  const Circuit sq = synth_pow2k(spec, 3, Placement::kInPlace);
  EXPECT_EQ(parse_circuit_text(write_circuit_text(sq)), sq);
}

TEST(CircuitText, RandomRoundTrip) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    const Circuit c = testing::random_circuit(3 + i % 20, 50, rng);
    EXPECT_EQ(parse_circuit_text(write_circuit_text(c)), c);
  }
}

TEST(ReportJson, OneToffoli) {
  const Circuit c(3, {Gate::ccx(0, 1, 2)}, {});
  EXPECT_EQ(report_json(resource_report(c)),
            R"({"width":3,"ancillae":0,"x":0,"cx":0,"ccx":1,"depth":1,)"
            R"("toffoli_depth":1,"t_count":7,"t_depth":3})");
}

}  // namespace
}  // namespace ecqc

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

#include <iosfwd>
#include <string>
#include <string_view>

#include "ecqc/circuit.hpp"

namespace ecqc {

// Line-oriented circuit text:
//   qubits <N>                       first non-comment line
//   reg <name> <lo> <hi> <role>      inclusive range, role in {in, out, anc}
//   perm <name> <p_0> ... <p_k-1>    optional output relabeling of a register
//   x <t> | cx <c> <t> | ccx <c1> <c2> <t>
// '#' starts a comment. Parse failures throw Error(kParse) naming the line.
std::string write_circuit_text(const Circuit& c);
void write_circuit_text(std::ostream& os, const Circuit& c);
Circuit parse_circuit_text(std::string_view text);
Circuit read_circuit_file(const std::string& path);
void write_circuit_file(const std::string& path, const Circuit& c);

// {"width", "ancillae", "x", "cx", "ccx", "depth", "toffoli_depth",
//  "t_count", "t_depth"} in that key order, no whitespace.
std::string report_json(const ResourceReport& r);

}  // namespace ecqc

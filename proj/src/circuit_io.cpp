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

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "ecqc/error.hpp"
#include "json.hpp"

namespace ecqc {
namespace {

void append_uint(std::string& out, std::uint64_t v) {
  char buf[24];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, end);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(Errc::kParse, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint32_t parse_u32(std::string_view tok, std::size_t line_no) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line_no, "expected an unsigned integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

void write_circuit_text(std::ostream& os, const Circuit& c) { os << write_circuit_text(c); }

std::string write_circuit_text(const Circuit& c) {
  std::string out;
  out.reserve(c.gates().size() * 12 + 256);
  out += "qubits ";
  append_uint(out, c.width());
  out += '\n';
  for (const auto& r : c.registers()) {
    out += "reg " + r.name + ' ';
    append_uint(out, r.lo);
    out += ' ';
    append_uint(out, r.hi());
    out += ' ';
    out += role_name(r.role);
    out += '\n';
  }
  for (const auto& r : c.registers()) {
    if (r.output_order.empty()) continue;
    out += "perm " + r.name;
    for (auto p : r.output_order) {
      out += ' ';
      append_uint(out, p);
    }
    out += '\n';
  }
  static constexpr const char* kNames[] = {"x", "cx", "ccx"};
  for (const auto& g : c.gates()) {
    out += kNames[static_cast<int>(g.kind)];
    for (auto w : g.used()) {
      out += ' ';
      append_uint(out, w);
    }
    out += '\n';
  }
  return out;
}

Circuit parse_circuit_text(std::string_view text) {
  std::optional<std::uint32_t> width;
  std::vector<Register> regs;
  std::vector<Gate> gates;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    const std::string_view op = tok[0];
    if (!width) {
      if (op != "qubits" || tok.size() != 2) fail(line_no, "expected 'qubits <N>' first");
      width = parse_u32(tok[1], line_no);
      continue;
    }
    if (op == "reg") {
      if (tok.size() != 5) fail(line_no, "expected 'reg <name> <lo> <hi> <role>'");
      Register r;
      r.name = std::string(tok[1]);
      r.lo = parse_u32(tok[2], line_no);
      const std::uint32_t hi = parse_u32(tok[3], line_no);
      if (hi < r.lo) fail(line_no, "register range is empty");
      r.size = hi - r.lo + 1;
      if (tok[4] == "in") {
        r.role = RegisterRole::kInput;
      } else if (tok[4] == "out") {
        r.role = RegisterRole::kOutput;
      } else if (tok[4] == "anc") {
        r.role = RegisterRole::kAncilla;
      } else {
        fail(line_no, "unknown role '" + std::string(tok[4]) + "'");
      }
      regs.push_back(std::move(r));
    } else if (op == "perm") {
      if (tok.size() < 2) fail(line_no, "expected 'perm <name> <p>...'");
      Register* target = nullptr;
      for (auto& r : regs) {
        if (r.name == tok[1]) target = &r;
      }
      if (!target) fail(line_no, "perm for undeclared register");
      if (tok.size() - 2 != target->size) fail(line_no, "perm length differs from register size");
      target->output_order.clear();
      for (std::size_t i = 2; i < tok.size(); ++i) {
        target->output_order.push_back(parse_u32(tok[i], line_no));
      }
    } else if (op == "x" || op == "cx" || op == "ccx") {
      const std::size_t arity = op.size();
      if (tok.size() != arity + 1) fail(line_no, "wrong operand count for '" + std::string(op) + "'");
      Gate g{static_cast<GateKind>(arity - 1), {0, 0, 0}};
      for (std::size_t i = 0; i < arity; ++i) {
        g.wires[i] = parse_u32(tok[i + 1], line_no);
        if (g.wires[i] >= *width) fail(line_no, "wire index out of range");
        for (std::size_t j = 0; j < i; ++j) {
          if (g.wires[i] == g.wires[j]) fail(line_no, "gate repeats a wire");
        }
      }
      gates.push_back(g);
    } else {
      fail(line_no, "unknown statement '" + std::string(op) + "'");
    }
  }
  if (!width) throw Error(Errc::kParse, "missing 'qubits' line");
  try {
    return Circuit(*width, std::move(gates), std::move(regs));
  } catch (const Error& e) {
    throw Error(Errc::kParse, e.what());
  }
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_circuit_text(ss.str());
}

void write_circuit_file(const std::string& path, const Circuit& c) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::kInvalidArgument, "cannot write '" + path + "'");
  out << write_circuit_text(c);
}

std::string report_json(const ResourceReport& r) {
  nlohmann::ordered_json j;
  j["width"] = r.width;
  j["ancillae"] = r.ancillae;
  j["x"] = r.x;
  j["cx"] = r.cx;
  j["ccx"] = r.ccx;
  j["depth"] = r.depth;
  j["toffoli_depth"] = r.toffoli_depth;
  j["t_count"] = r.t_count;
  j["t_depth"] = r.t_depth;
  return j.dump();
}

}  // namespace ecqc

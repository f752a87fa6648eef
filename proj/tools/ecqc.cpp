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

// ecqc: synthesize, simulate, verify and cost reversible circuits for
// GF(2^n) arithmetic and binary elliptic-curve point addition.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecqc/circuit.hpp"
#include "ecqc/circuit_io.hpp"
#include "ecqc/curves.hpp"
#include "ecqc/error.hpp"
#include "ecqc/field_circuits.hpp"
#include "ecqc/gf2.hpp"
#include "ecqc/inversion.hpp"
#include "ecqc/point_add.hpp"
#include "ecqc/verify.hpp"
#include "json.hpp"

namespace {

using namespace ecqc;

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kBadConfig = 2,
  kSynthesisFailed = 3,
  kBadCircuit = 4,
  kBadInput = 5,
};

// Carries an exit status out of a command.
struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string kind;
  std::size_t n = 0;
  std::string modulus;
  std::string curve_path;
  std::string schedule = "fanout";
  std::string out_path;
  std::string report_path;
  std::string file;
  std::string gamma;
  std::size_t k = 1;
  std::string placement = "out";
  std::uint64_t seed = 1;
  std::uint64_t samples = 200;
  std::vector<std::string> inputs;
  std::vector<std::size_t> n_list;
};

[[noreturn]] void config_error(const std::string& msg) { throw Failure{kBadConfig, msg}; }

FieldElement element_from_json(const nlohmann::json& cfg, const char* key, std::size_t n) {
  if (!cfg.contains(key)) config_error(std::string("curve config lacks \"") + key + "\"");
  return FieldElement::from_hex(n, cfg.at(key).get<std::string>());
}

// Resolves field, curve and kind parameters. Library errors raised here are
// configuration problems.
CircuitJob build_job(const Options& o, bool require_modulus) {
  try {
    CircuitKind kind;
    try {
      kind = parse_kind(o.kind);
    } catch (const Error& e) {
      config_error(e.what());
    }
    nlohmann::json cfg;
    if (!o.curve_path.empty()) {
      std::ifstream in(o.curve_path);
      if (!in) config_error("cannot open curve config '" + o.curve_path + "'");
      try {
        cfg = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        config_error(std::string("bad curve config: ") + e.what());
      }
    }
    std::size_t n = o.n;
    if (cfg.contains("n")) {
      const auto cn = cfg.at("n").get<std::size_t>();
      if (n != 0 && n != cn) config_error("--n disagrees with the curve config");
      n = cn;
    }
    if (n == 0) config_error("--n is required");
    std::string modulus = o.modulus;
    if (modulus.empty() && cfg.contains("modulus")) modulus = cfg.at("modulus").get<std::string>();
    if (modulus.empty() && require_modulus) config_error("--modulus is required");
    const FieldSpec spec = modulus.empty() ? default_field(n) : make_field_spec(n, modulus);

    CircuitJob job{kind, spec};
    job.schedule = parse_schedule(o.schedule);
    job.placement = parse_placement(o.placement);
    job.k = o.k;
    if (!o.gamma.empty()) job.gamma = FieldElement::from_hex(n, o.gamma);

    if (!cfg.is_null()) {
      const std::string model =
          cfg.value("model", kind == CircuitKind::kEdwardsAdd ? "edwards" : "weierstrass");
      if (model == "weierstrass") {
        job.weierstrass = make_weierstrass(spec, element_from_json(cfg, "a2", n),
                                           element_from_json(cfg, "a6", n));
        if (cfg.contains("x2") || cfg.contains("y2")) {
          job.fixed_point = AffinePoint::finite(element_from_json(cfg, "x2", n),
                                                element_from_json(cfg, "y2", n));
          if (!is_on_weierstrass(*job.fixed_point, *job.weierstrass)) {
            config_error("fixed point (x2, y2) is not on the curve");
          }
        }
      } else if (model == "edwards") {
        job.edwards = make_edwards(spec, element_from_json(cfg, "d1", n),
                                   element_from_json(cfg, "d2", n));
      } else {
        config_error("unknown curve model '" + model + "'");
      }
      if (kind == CircuitKind::kEdwardsAdd && !job.edwards) config_error("edwards-add needs an Edwards curve");
      if ((kind == CircuitKind::kMaddHt || kind == CircuitKind::kMaddProjective) && !job.weierstrass) {
        config_error("mixed addition needs a Weierstrass curve");
      }
    }
    return complete_job(std::move(job), o.seed);
  } catch (const Error& e) {
    config_error(e.what());
  } catch (const nlohmann::json::exception& e) {
    config_error(std::string("bad curve config: ") + e.what());
  }
}

Circuit load_circuit(const std::string& path) {
  try {
    return read_circuit_file(path);
  } catch (const Error& e) {
    throw Failure{kBadCircuit, e.what()};
  }
}

Circuit synthesize_or_fail(const CircuitJob& job) {
  try {
    return synthesize(job);
  } catch (const Error& e) {
    throw Failure{kSynthesisFailed, e.what()};
  }
}

int cmd_synth(const Options& o) {
  const CircuitJob job = build_job(o, true);
  const Circuit c = synthesize_or_fail(job);
  const std::string report = report_json(resource_report(c));
  if (o.out_path.empty()) {
    write_circuit_text(std::cout, c);
  } else {
    write_circuit_file(o.out_path, c);
    std::cout << report << '\n';
  }
  if (!o.report_path.empty()) {
    std::ofstream(o.report_path) << report << '\n';
  }
  return kOk;
}

int cmd_simulate(const Options& o) {
  const Circuit c = load_circuit(o.file);
  BitVec state(c.width());
  for (const auto& item : o.inputs) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Failure{kBadInput, "input '" + item + "' is not name=hex"};
    const std::string name = item.substr(0, eq);
    const Register* reg = c.find_register(name);
    if (reg == nullptr) throw Failure{kBadInput, "no register named '" + name + "'"};
    if (reg->role == RegisterRole::kAncilla) {
      throw Failure{kBadInput, "ancilla register '" + name + "' starts at zero"};
    }
    BitVec value;
    try {
      value = BitVec::from_hex(reg->size, item.substr(eq + 1));
    } catch (const Error& e) {
      throw Failure{kBadInput, "register '" + name + "': " + e.what()};
    }
    load_register(state, *reg, value);
  }
  const BitVec out = simulate(c, state);
  for (const auto& reg : c.registers()) {
    std::cout << reg.name << '=' << read_register(out, reg).to_hex() << '\n';
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  const CircuitJob job = build_job(o, false);
  const Circuit c = o.file.empty() ? synthesize_or_fail(job) : load_circuit(o.file);
  VerifyOptions vo;
  vo.samples = o.samples;
  vo.seed = o.seed;
  const VerifyResult r = verify_circuit(c, job, vo);

  std::cout << "verify " << kind_name(job.kind) << " n=" << job.spec.n()
            << " modulus=" << job.spec.modulus().to_hex() << " schedule=" << schedule_name(job.schedule)
            << ": " << r.cases << " cases, "
            << (r.exhaustive ? std::string("exhaustive") : "sampled (seed " + std::to_string(o.seed) + ")")
            << '\n';
  std::cout << toffoli_formula(job.kind) << '=' << r.expected_toffoli << " Toffoli "
            << (r.toffoli == r.expected_toffoli ? "✓" : "✗ (circuit has " + std::to_string(r.toffoli) + ")")
            << '\n';
  for (const auto& note : r.notes) std::cout << note << '\n';
  if (!r.ok) {
    std::cout << "FAIL: " << r.failure << '\n';
    if (!r.counterexample.empty()) std::cout << "counterexample: " << r.counterexample << '\n';
    return kVerifyFailed;
  }
  std::cout << "PASS\n";
  return kOk;
}

int cmd_report(const Options& o) {
  std::cout << report_json(resource_report(load_circuit(o.file))) << '\n';
  return kOk;
}

std::string ratio_text(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return "-";
  if (num % den == 0) return std::to_string(num / den);
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << static_cast<double>(num) / static_cast<double>(den);
  return s.str();
}

int cmd_table(const Options& o) {
  const MultSchedule schedule = parse_schedule(o.schedule);
  std::cout << std::left << std::setw(6) << "n" << std::setw(17) << "circuit" << std::right
            << std::setw(12) << "toffoli" << std::setw(14) << "t_count" << std::setw(14)
            << "closed_form" << std::setw(15) << "toffoli_depth" << std::setw(8) << "ratio"
            << std::setw(10) << "width" << '\n';
  for (std::size_t n : o.n_list) {
    FieldSpec spec = default_field(n);
    CircuitJob mult{CircuitKind::kMult, spec};
    mult.schedule = schedule;
    const std::uint64_t mult_depth = resource_report(synthesize_or_fail(mult)).toffoli_depth;
    std::uint64_t ht_t = 0;
    std::uint64_t proj_t = 0;
    for (CircuitKind kind : {CircuitKind::kMaddProjective, CircuitKind::kMaddHt,
                             CircuitKind::kEdwardsAdd, CircuitKind::kInvert}) {
      CircuitJob job{kind, spec};
      job.schedule = schedule;
      job = complete_job(std::move(job), o.seed);
      ResourceReport r = resource_report(synthesize_or_fail(job));
      const std::uint64_t closed = 7 * expected_toffoli_count(job);
      if (kind == CircuitKind::kMaddHt) ht_t = r.t_count;
      if (kind == CircuitKind::kMaddProjective) proj_t = r.t_count;
      std::cout << std::left << std::setw(6) << n << std::setw(17) << kind_name(kind) << std::right
                << std::setw(12) << r.ccx << std::setw(14) << r.t_count << std::setw(12) << closed
                << (closed == r.t_count ? " ✓" : " ✗") << std::setw(15) << r.toffoli_depth
                << std::setw(8) << ratio_text(r.toffoli_depth, mult_depth) << std::setw(10)
                << r.width << '\n';
    }
    std::cout << std::left << std::setw(6) << n << "multiplier toffoli_depth " << mult_depth
              << ", madd-ht/madd-projective t_count " << ratio_text(ht_t * 15, proj_t) << "/15\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible GF(2^n) and elliptic-curve circuit synthesis"};
  app.require_subcommand(1);
  Options o;

  auto add_field = [&](CLI::App* cmd) {
    cmd->add_option("--circuit,--circuit-kind", o.kind,
                    "add, add-oop, mult, square, const-mult, pow2k, invert, madd-projective, "
                    "madd-ht, edwards-add")
        ->required();
    cmd->add_option("--n", o.n, "extension degree");
    cmd->add_option("--modulus", o.modulus, "reduction polynomial as hex (0x11b is x^8+x^4+x^3+x+1)");
    cmd->add_option("--curve", o.curve_path, "curve config JSON");
    cmd->add_option("--schedule", o.schedule, "multiplier schedule: compact or fanout")
        ->capture_default_str();
    cmd->add_option("--gamma", o.gamma, "const-mult constant as hex (default x)");
    cmd->add_option("--k", o.k, "pow2k exponent")->capture_default_str();
    cmd->add_option("--placement", o.placement, "in or out (const-mult, pow2k)")->capture_default_str();
    cmd->add_option("--seed", o.seed, "seed for sampling")->capture_default_str();
  };

  auto* synth = app.add_subcommand("synth", "write a circuit and its resource report");
  add_field(synth);
  synth->add_option("--out", o.out_path, "circuit file (stdout when omitted)");
  synth->add_option("--report", o.report_path, "also write the JSON report here");

  auto* sim = app.add_subcommand("simulate", "run a circuit file on one basis state");
  sim->add_option("--file", o.file, "circuit file")->required();
  sim->add_option("--input", o.inputs, "register value as name=hex (repeatable)");

  auto* ver = app.add_subcommand("verify", "check a circuit against the field and curve oracles");
  add_field(ver);
  ver->add_option("--file", o.file, "verify this circuit file instead of a fresh synthesis");
  ver->add_option("--samples", o.samples, "cases when n > 8")->capture_default_str();

  auto* rep = app.add_subcommand("report", "print the JSON resource report of a circuit file");
  rep->add_option("--file", o.file, "circuit file")->required();

  auto* table = app.add_subcommand("table", "point addition and inversion costs across sizes");
  table->add_option("--n-list", o.n_list, "comma-separated degrees")->delimiter(',')->required();
  table->add_option("--schedule", o.schedule, "multiplier schedule")->capture_default_str();
  table->add_option("--seed", o.seed, "seed for the fixed point")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadConfig;
  }

  try {
    if (*synth) return cmd_synth(o);
    if (*sim) return cmd_simulate(o);
    if (*ver) return cmd_verify(o);
    if (*rep) return cmd_report(o);
    if (*table) return cmd_table(o);
  } catch (const Failure& f) {
    std::cerr << "ecqc: " << f.message << '\n';
    return f.code;
  } catch (const Error& e) {
    std::cerr << "ecqc: " << e.what() << '\n';
    return e.code() == Errc::kInvalidArgument ? kBadConfig : kSynthesisFailed;
  }
  return kOk;
}

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


// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ecqc/circuit_io.hpp"
#include "ecqc/clifford_t.hpp"
#include "ecqc/curves.hpp"
#include "ecqc/field_circuits.hpp"
#include "ecqc/inversion.hpp"
#include "ecqc/linear.hpp"
#include "ecqc/point_add.hpp"
#include "ecqc/verify.hpp"
#include "support/harness.hpp"
#include "support/zomega.hpp"

namespace ecqc {
namespace {

constexpr MultSchedule kSchedules[] = {MultSchedule::kCompact, MultSchedule::kFanout};

class Outcome {
 public:
  void expect(bool cond, const std::string& what) {
    if (cond) return;
    if (failures_++ < 5) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    if (ok()) return notes_;
    return std::to_string(failures_) + " failure(s): " + detail_;
  }

 private:
  std::size_t failures_ = 0;
  std::string detail_;
  std::string notes_;
};

std::string sched(MultSchedule s) { return schedule_name(s); }
std::string at(std::size_t n, MultSchedule s) { return "n=" + std::to_string(n) + " " + sched(s); }

VerifyResult check(Outcome& out, CircuitJob job, const VerifyOptions& opts,
                   const std::string& label) {
  job = complete_job(std::move(job), opts.seed);
  const VerifyResult r = verify_circuit(synthesize(job), job, opts);
  out.expect(r.ok, label + ": " + r.failure + " [" + r.counterexample + "]");
  return r;
}

std::uint64_t mult_depth(const FieldSpec& spec, MultSchedule s) {
  return resource_report(synth_mult_accumulate(spec, s)).toffoli_depth;
}

// 1
Outcome field_oracle() {
  Outcome out;
  std::mt19937_64 rng(2026);
  std::uint64_t cases = 0;
  std::size_t circuits = 0;
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const FieldSpec& spec : {default_field(n), testing::random_field(n, rng)}) {
      const std::string label = "n=" + std::to_string(n) + " f=" + spec.modulus().to_hex();
      std::vector<CircuitJob> jobs;
      jobs.emplace_back(CircuitKind::kAdd, spec);
      jobs.emplace_back(CircuitKind::kAddOop, spec);
      jobs.emplace_back(CircuitKind::kSquare, spec);
      for (auto s : kSchedules) {
        jobs.emplace_back(CircuitKind::kMult, spec);
        jobs.back().schedule = s;
      }
      for (auto p : {Placement::kInPlace, Placement::kOutOfPlace}) {
        jobs.emplace_back(CircuitKind::kConstMult, spec);
        jobs.back().placement = p;
        jobs.back().gamma = random_nonzero(spec, rng);
        for (std::size_t k = 1; k <= n; ++k) {
          jobs.emplace_back(CircuitKind::kPow2k, spec);
          jobs.back().placement = p;
          jobs.back().k = k;
        }
      }
      for (const auto& job : jobs) {
        const auto r = check(out, job, {}, label + " " + kind_name(job.kind));
        out.expect(r.exhaustive, label + " " + kind_name(job.kind) + " not exhaustive");
        cases += r.cases;
        ++circuits;
      }
    }
  }
  out.note(std::to_string(circuits) + " circuits, " + std::to_string(cases) + " exhaustive cases");
  return out;
}

// 2
Outcome multiplier_counts() {
  Outcome out;
  std::string depths;
  for (std::size_t n : {3, 8, 16, 163, 233, 283}) {
    const auto spec = default_field(n);
    for (auto s : kSchedules) {
      const auto r = resource_report(synth_mult_accumulate(spec, s));
      out.expect(r.ccx == n * n, at(n, s) + " ccx " + std::to_string(r.ccx));
      if (n >= 163) {
        depths += " " + std::to_string(n) + "/" + sched(s) + ": depth " + std::to_string(r.depth) +
                  ", toffoli_depth " + std::to_string(r.toffoli_depth) + ";";
      }
      if (n >= 163 && s == MultSchedule::kCompact) {
        out.expect(r.cx <= n * n - 1, at(n, s) + " cx " + std::to_string(r.cx));
      }
    }
  }
  out.note("ccx = n² at 3/8/16/163/233/283, compact cx <= n²-1 at NIST sizes;" + depths);
  return out;
}

// 3
Outcome inverter() {
  Outcome out;
  std::string delta;
  for (std::size_t n = 3; n <= 16; ++n) {
    const auto spec = default_field(n);
    const std::uint64_t m = itoh_tsujii_mults(n);
    const std::uint64_t want =
        2 * (std::bit_width(n - 1) - 1 + std::popcount(n - 1) - 1) * n * n;
    for (auto s : kSchedules) {
      CircuitJob job(CircuitKind::kInvert, spec);
      job.schedule = s;
      VerifyOptions opts;
      opts.samples = 200;
      opts.seed = n;
      const auto r = check(out, job, opts, at(n, s));
      out.expect(r.exhaustive == (n <= 8), at(n, s) + " sweep mode");
      out.expect(r.toffoli == want && r.expected_toffoli == want,
                 at(n, s) + " toffoli " + std::to_string(r.toffoli));
      if (s == MultSchedule::kCompact) {
        const auto rep = resource_report(synthesize(complete_job(job, 1)));
        out.expect(rep.cx <= 4 * m * (n * n + n), at(n, s) + " cx " + std::to_string(rep.cx));
      }
      const bool noted = !r.notes.empty() &&
                         r.notes[0].find("delta " + std::to_string(2 * n * n)) != std::string::npos;
      out.expect(noted, at(n, s) + " missing published-formula delta note");
      if (n == 16 && s == MultSchedule::kFanout && noted) delta = r.notes[0];
    }
  }
  out.note("n=3..8 exhaustive, 9..16 200 samples, both schedules; compact cx <= 4M(n²+n); " + delta);
  return out;
}

struct PointCounts {
  std::size_t mults;
  std::size_t stages;
  std::uint64_t t_per_n2;
};

void point_counts(Outcome& out, CircuitKind kind, PointCounts pc) {
  for (std::size_t n : {3, 4, 5, 6, 7, 8, 16}) {
    const auto spec = default_field(n);
    for (auto s : kSchedules) {
      CircuitJob job(kind, spec);
      job.schedule = s;
      const auto r = resource_report(synthesize(complete_job(job, 1)));
      const std::uint64_t d = mult_depth(spec, s);
      out.expect(r.ccx == pc.mults * n * n, at(n, s) + " ccx " + std::to_string(r.ccx));
      out.expect(r.t_count == pc.t_per_n2 * n * n, at(n, s) + " t_count " + std::to_string(r.t_count));
      out.expect(r.toffoli_depth == pc.stages * d,
                 at(n, s) + " toffoli_depth " + std::to_string(r.toffoli_depth) + " vs " +
                     std::to_string(pc.stages) + "x" + std::to_string(d));
    }
  }
}

// Sweeps fixed points P2 until at least 100 (P1, P2) pairs are covered or
// every P2 has been used.
Outcome mixed_addition(CircuitKind kind, PointCounts pc) {
  Outcome out;
  point_counts(out, kind, pc);
  std::string sizes;
  for (std::size_t n = 3; n <= 8; ++n) {
    const auto spec = default_field(n);
    const auto curve = default_weierstrass(spec);
    const auto pts = weierstrass_points(curve);
    std::size_t pairs = 0;
    std::size_t total = 0;
    for (const auto& p2 : pts) {
      if (p2.infinity) continue;
      for (const auto& p1 : pts) total += !p1.infinity && !(p1.x == p2.x);
    }
    std::size_t used = 0;
    for (const auto& p2 : pts) {
      if (p2.infinity) continue;
      if (pairs >= 100) break;
      CircuitJob job(kind, spec);
      job.schedule = kSchedules[used % 2];
      job.weierstrass = curve;
      job.fixed_point = p2;
      const auto r = check(out, job, {}, "n=" + std::to_string(n) + " P2 #" + std::to_string(used));
      out.expect(r.exhaustive, "n=" + std::to_string(n) + " not exhaustive over P1");
      for (const auto& p1 : pts) pairs += !p1.infinity && !(p1.x == p2.x);
      ++used;
    }
    out.expect(pairs >= 100 || pairs == total, "n=" + std::to_string(n) + " only " +
                                                   std::to_string(pairs) + " pairs");
    sizes += " " + std::to_string(n) + ":" + std::to_string(pairs);
  }
  out.note("counts and depth ratio at n=3..8,16 both schedules; generic pairs per n" + sizes);
  return out;
}

// 6
Outcome edwards() {
  Outcome out;
  point_counts(out, CircuitKind::kEdwardsAdd, {kEdwardsMults, kEdwardsStages, 273});
  std::string sizes;
  for (std::size_t n = 3; n <= 6; ++n) {
    const auto spec = default_field(n);
    const auto curve = default_edwards(spec);
    const std::size_t all = edwards_points(curve).size();
    for (auto s : kSchedules) {
      CircuitJob job(CircuitKind::kEdwardsAdd, spec);
      job.schedule = s;
      job.edwards = curve;
      const auto r = check(out, job, {}, at(n, s));
      out.expect(r.exhaustive && r.cases == all * all,
                 at(n, s) + " covered " + std::to_string(r.cases) + " of " +
                     std::to_string(all * all) + " pairs");
    }
    sizes += " " + std::to_string(n) + ":" + std::to_string(all * all);
  }
  out.note("all point pairs, no filtering, Z3 != 0;" + sizes);
  return out;
}

// 7
Outcome linear_synthesis() {
  Outcome out;
  std::mt19937_64 rng(77);
  std::string worst;
  for (std::size_t n : {8, 32, 64}) {
    const std::size_t vectors = n <= 8 ? (std::size_t{1} << n) : 1000;
    std::uint64_t max_cx = 0;
    std::uint64_t max_depth = 0;
    for (int m = 0; m < 1000; ++m) {
      const BinMatrix a = BinMatrix::random_invertible(n, rng);
      const Circuit c = synth_linear_inplace(a);
      const auto r = resource_report(c);
      max_cx = std::max(max_cx, r.cx);
      max_depth = std::max(max_depth, r.depth);
      out.expect(r.cx <= n * n + n, "n=" + std::to_string(n) + " cx " + std::to_string(r.cx));
      out.expect(r.depth <= 4 * n, "n=" + std::to_string(n) + " depth " + std::to_string(r.depth));
      const Register& x = c.register_named("x");
      for (std::size_t base = 0; base < vectors; base += 64) {
        std::vector<std::uint64_t> lanes(c.width(), 0);
        std::vector<BitVec> in;
        for (int lane = 0; lane < 64 && base + lane < vectors; ++lane) {
          BitVec v(n);
          if (n <= 8) {
            v = BitVec::from_u64(n, base + lane);
          } else {
            for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
          }
          load_register_lane(lanes, x, lane, v);
          in.push_back(v);
        }
        simulate_lanes(c, lanes);
        for (std::size_t lane = 0; lane < in.size(); ++lane) {
          if (read_register_lane(lanes, x, static_cast<int>(lane)) != a.apply(in[lane])) {
            out.expect(false, "n=" + std::to_string(n) + " matrix " + std::to_string(m) +
                                  " disagrees on " + in[lane].to_hex());
          }
        }
      }
    }
    worst += " n=" + std::to_string(n) + " max cx " + std::to_string(max_cx) + "/" +
             std::to_string(n * n + n) + " depth " + std::to_string(max_depth) + "/" +
             std::to_string(4 * n) + ";";
  }
  out.note("1000 matrices per n;" + worst);
  return out;
}

// 8
Outcome toffoli_decomposition() {
  Outcome out;
  const auto net = toffoli_network(0, 1, 2);
  out.expect(t_count(net) == 7, "network T-count " + std::to_string(t_count(net)));
  out.expect(t_depth(net, 3) <= 3, "network T-depth " + std::to_string(t_depth(net, 3)));
  for (std::uint64_t x = 0; x < 8; ++x) {
    testing::ExactState s = testing::ExactState::basis(3, x);
    s.apply(net);
    const std::uint64_t want = (x & 3) == 3 ? x ^ 4 : x;
    bool column_ok = s.h_count == 2;
    for (std::uint64_t y = 0; y < 8; ++y) {
      column_ok = column_ok && s.amp[y] == testing::ZOmega::integer(y == want ? 2 : 0);
    }
    out.expect(column_ok, "unitary column " + std::to_string(x) + " differs");
  }
  const auto spec = default_field(5);
  for (auto kind : {CircuitKind::kMult, CircuitKind::kInvert, CircuitKind::kEdwardsAdd}) {
    const Circuit c = synthesize(complete_job(CircuitJob(kind, spec), 1));
    const auto gates = toffoli_to_clifford_t(c);
    const auto r = resource_report(c);
    out.expect(t_count(gates) == 7 * r.ccx, std::string(kind_name(kind)) + " decomposed T-count");
    out.expect(t_depth(gates, c.width()) <= r.t_depth,
               std::string(kind_name(kind)) + " decomposed T-depth above 3 x toffoli_depth");
  }
  out.note("7 T per Toffoli, T-depth " + std::to_string(t_depth(net, 3)) +
           ", exact Z[w] unitary equality on all 8 columns");
  return out;
}

// 9
Outcome resource_table() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = testing::run_command(std::string(ECQC_CLI) + " table --n-list 163,233,283");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.expect(r.status == 0, "table exit " + std::to_string(r.status));
  out.expect(secs < 60.0, "table took " + std::to_string(secs) + " s");
  std::map<std::pair<std::size_t, std::string>, std::uint64_t> t_counts;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    std::istringstream row(line);
    std::size_t n;
    std::string circuit;
    std::uint64_t toffoli, tc;
    if (row >> n >> circuit >> toffoli >> tc) t_counts[{n, circuit}] = tc;
  }
  for (std::uint64_t n : {163, 233, 283}) {
    const std::map<std::string, std::uint64_t> want = {
        {"madd-projective", 105 * n * n},
        {"madd-ht", 91 * n * n},
        {"edwards-add", 273 * n * n},
        {"invert", 14 * itoh_tsujii_mults(n) * n * n},
    };
    for (const auto& [name, value] : want) {
      const auto it = t_counts.find({n, name});
      out.expect(it != t_counts.end() && it->second == value,
                 name + " n=" + std::to_string(n) + " t_count " +
                     (it == t_counts.end() ? std::string("missing") : std::to_string(it->second)) +
                     " expected " + std::to_string(value));
    }
  }
  out.expect(t_counts.size() == 12, "expected 12 table rows, parsed " + std::to_string(t_counts.size()));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.1f s", secs);
  out.note(std::string(buf) + ", n=163 madd-ht t_count " +
           std::to_string(t_counts[{163, "madd-ht"}]));
  return out;
}

// 10
Outcome round_trip_and_metrics() {
  Outcome out;
  const std::string dir = testing::run_command("mktemp -d").out;
  const std::string tmp = dir.substr(0, dir.find('\n'));
  struct Spec {
    const char* args;
    CircuitKind kind;
    std::size_t n;
    MultSchedule s;
  };
  const Spec specs[] = {
      {"--circuit mult --n 8 --modulus 0x11b --schedule compact", CircuitKind::kMult, 8, MultSchedule::kCompact},
      {"--circuit invert --n 12 --modulus 0x1009", CircuitKind::kInvert, 12, MultSchedule::kFanout},
      {"--circuit madd-ht --n 7 --modulus 0x83", CircuitKind::kMaddHt, 7, MultSchedule::kFanout},
      {"--circuit madd-projective --n 6 --modulus 0x43 --schedule compact", CircuitKind::kMaddProjective, 6,
       MultSchedule::kCompact},
      {"--circuit edwards-add --n 163 --modulus 0x800000000000000000000000000000000000000c9",
       CircuitKind::kEdwardsAdd, 163, MultSchedule::kFanout},
  };
  std::vector<Circuit> circuits;
  for (const auto& sp : specs) {
    const std::string file = tmp + "/c.rqc";
    const auto syn = testing::run_command(std::string(ECQC_CLI) + " synth " + sp.args + " --out " + file);
    const auto rep = testing::run_command(std::string(ECQC_CLI) + " report --file " + file);
    CircuitJob job(sp.kind, default_field(sp.n));
    job.schedule = sp.s;
    const Circuit mem = synthesize(complete_job(job, 1));
    const std::string want = report_json(resource_report(mem)) + "\n";
    out.expect(syn.status == 0 && rep.status == 0, std::string(sp.args) + " failed");
    out.expect(rep.out == want, std::string(sp.args) + " report differs from in-memory report");
    out.expect(syn.out == rep.out, std::string(sp.args) + " synth report differs from report");
    out.expect(read_circuit_file(file) == mem, std::string(sp.args) + " file differs from synthesis");
    circuits.push_back(mem);
  }
  testing::run_command("rm -rf " + tmp);

  std::mt19937_64 rng(10);
  for (int i = 0; i < 100; ++i) circuits.push_back(testing::random_circuit(3 + i % 30, 200, rng));
  for (const auto& c : circuits) {
    out.expect(testing::layers_wire_disjoint(c.gates(), asap_layers(c)), "gate layering overlaps");
    out.expect(testing::layers_wire_disjoint(testing::toffolis_of(c), toffoli_layers(c)),
               "Toffoli layering overlaps");
  }

  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t w = 3 + static_cast<std::uint32_t>(rng() % 40);
    const Circuit c = testing::random_circuit(w, 1 + rng() % 300, rng);
    BitVec s(w);
    for (std::uint32_t k = 0; k < w; ++k) s.set(k, rng() & 1U);
    if (simulate(compose(c, inverse(c)), s) != s) {
      out.expect(false, "compose(c, inverse(c)) moved a state at trial " + std::to_string(i));
    }
  }
  out.note("5 CLI round trips byte-identical, " + std::to_string(circuits.size()) +
           " layerings wire-disjoint, 1000 compose/inverse trials");
  return out;
}

}  // namespace
}  // namespace ecqc

int main() {
  using namespace ecqc;
  struct Row {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const Row rows[] = {
      {1, "field-circuit oracle equivalence", field_oracle},
      {2, "multiplier counts", multiplier_counts},
      {3, "inverter", inverter},
      {4, "madd-projective",
       [] { return mixed_addition(CircuitKind::kMaddProjective, {kMaddProjectiveMults, kMaddProjectiveStages, 105}); }},
      {5, "madd-ht", [] { return mixed_addition(CircuitKind::kMaddHt, {kMaddHtMults, kMaddHtStages, 91}); }},
      {6, "edwards-add completeness", edwards},
      {7, "linear synthesis", linear_synthesis},
      {8, "toffoli decomposition", toffoli_decomposition},
      {9, "resource table", resource_table},
      {10, "round trip and metric soundness", round_trip_and_metrics},
  };
  int failed = 0;
  for (const auto& row : rows) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = row.run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d %s (%.1fs): %s\n", o.ok() ? "PASS" : "FAIL", row.id, row.name, secs,
                o.summary().c_str());
    std::fflush(stdout);
    failed += !o.ok();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(rows)) - failed, std::size(rows));
  return failed == 0 ? 0 : 1;
}

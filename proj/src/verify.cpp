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

#include "ecqc/verify.hpp"

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <utility>

#include "ecqc/error.hpp"
#include "ecqc/inversion.hpp"
#include "ecqc/linear.hpp"
#include "ecqc/point_add.hpp"

namespace ecqc {

namespace {

using Values = std::map<std::string, BitVec>;
// Returns an error description, or an empty string when the case passes.
using Oracle = std::function<std::string(const Values& in, const Values& out)>;

struct KindInfo {
  CircuitKind kind;
  const char* name;
  const char* formula;
};

constexpr KindInfo kKinds[] = {
    {CircuitKind::kAdd, "add", "0"},
    {CircuitKind::kAddOop, "add-oop", "0"},
    {CircuitKind::kMult, "mult", "n²"},
    {CircuitKind::kSquare, "square", "0"},
    {CircuitKind::kConstMult, "const-mult", "0"},
    {CircuitKind::kPow2k, "pow2k", "0"},
    {CircuitKind::kInvert, "invert", "2M(n)n²"},
    {CircuitKind::kMaddProjective, "madd-projective", "15n²"},
    {CircuitKind::kMaddHt, "madd-ht", "13n²"},
    {CircuitKind::kEdwardsAdd, "edwards-add", "39n²"},
};

const KindInfo& info(CircuitKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw Error(Errc::kInvalidArgument, "unknown circuit kind");
}

std::string values_text(const Values& v) {
  std::string s;
  for (const auto& [name, bits] : v) {
    if (!s.empty()) s += ' ';
    s += name + '=' + bits.to_hex();
  }
  return s;
}

std::string mismatch(const std::string& reg, const BitVec& got, const BitVec& want) {
  return reg + " is " + got.to_hex() + ", expected " + want.to_hex();
}

FieldElement el(const Values& v, const std::string& name) { return FieldElement(v.at(name)); }

// Every element for small n, otherwise `samples` seeded draws.
std::vector<FieldElement> elements(const FieldSpec& spec, bool exhaustive, std::uint64_t samples,
                                   std::mt19937_64& rng) {
  std::vector<FieldElement> out;
  if (exhaustive) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << spec.n()); ++v) {
      out.push_back(FieldElement::from_u64(spec.n(), v));
    }
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) out.push_back(random_element(spec, rng));
  }
  return out;
}

// Pairs (a, b): the full square when exhaustive, else `samples` draws.
std::vector<std::pair<FieldElement, FieldElement>> element_pairs(const FieldSpec& spec,
                                                                 bool exhaustive,
                                                                 std::uint64_t samples,
                                                                 std::mt19937_64& rng) {
  std::vector<std::pair<FieldElement, FieldElement>> out;
  if (exhaustive) {
    const auto all = elements(spec, true, 0, rng);
    for (const auto& a : all) {
      for (const auto& b : all) out.emplace_back(a, b);
    }
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) {
      FieldElement a = random_element(spec, rng);
      out.emplace_back(std::move(a), random_element(spec, rng));
    }
  }
  return out;
}

struct Sweep {
  std::vector<Values> cases;
  Oracle oracle;
};

Sweep field_sweep(const CircuitJob& job, bool exhaustive, std::uint64_t samples,
                  std::mt19937_64& rng) {
  const FieldSpec& spec = job.spec;
  Sweep s;
  switch (job.kind) {
    case CircuitKind::kAdd:
      for (auto& [a, b] : element_pairs(spec, exhaustive, samples, rng)) {
        s.cases.push_back({{"a", a.bits()}, {"b", b.bits()}});
      }
      s.oracle = [](const Values& in, const Values& out) {
        const BitVec want = in.at("a") ^ in.at("b");
        return out.at("b") == want ? std::string() : mismatch("b", out.at("b"), want);
      };
      break;
    case CircuitKind::kAddOop:
      for (auto& [a, b] : element_pairs(spec, exhaustive, samples, rng)) {
        s.cases.push_back({{"a", a.bits()}, {"b", b.bits()}});
      }
      s.oracle = [](const Values& in, const Values& out) {
        const BitVec want = in.at("a") ^ in.at("b");
        return out.at("sum") == want ? std::string() : mismatch("sum", out.at("sum"), want);
      };
      break;
    case CircuitKind::kMult:
      for (auto& [a, b] : element_pairs(spec, exhaustive, samples, rng)) {
        s.cases.push_back({{"a", a.bits()}, {"b", b.bits()}, {"acc", random_element(spec, rng).bits()}});
      }
      s.oracle = [spec](const Values& in, const Values& out) {
        const BitVec want = in.at("acc") ^ fmul(spec, el(in, "a"), el(in, "b")).bits();
        return out.at("acc") == want ? std::string() : mismatch("acc", out.at("acc"), want);
      };
      break;
    case CircuitKind::kSquare:
    case CircuitKind::kConstMult:
    case CircuitKind::kPow2k:
    case CircuitKind::kInvert: {
      const bool in_place = job.kind != CircuitKind::kSquare && job.kind != CircuitKind::kInvert &&
                            job.placement == Placement::kInPlace;
      const std::string src = in_place ? "x" : "a";
      const std::string dst = in_place ? "x" : "out";
      for (auto& a : elements(spec, exhaustive, samples, rng)) s.cases.push_back({{src, a.bits()}});
      std::function<FieldElement(const FieldElement&)> f;
      if (job.kind == CircuitKind::kSquare) {
        f = [spec](const FieldElement& a) { return fsquare(spec, a); };
      } else if (job.kind == CircuitKind::kConstMult) {
        const FieldElement g = *job.gamma;
        f = [spec, g](const FieldElement& a) { return fmul(spec, g, a); };
      } else if (job.kind == CircuitKind::kPow2k) {
        const std::size_t k = job.k;
        f = [spec, k](const FieldElement& a) { return fpow2k(spec, a, k); };
      } else {
        f = [spec](const FieldElement& a) { return a.is_zero() ? a : finv(spec, a); };
      }
      s.oracle = [f, src, dst](const Values& in, const Values& out) {
        const BitVec want = f(el(in, src)).bits();
        return out.at(dst) == want ? std::string() : mismatch(dst, out.at(dst), want);
      };
      break;
    }
    default:
      throw Error(Errc::kInvalidArgument, "not a field circuit kind");
  }
  return s;
}

std::string point_text(const AffinePoint& p) {
  return p.infinity ? std::string("O") : "(" + p.x.to_hex() + ", " + p.y.to_hex() + ")";
}

Sweep madd_sweep(const CircuitJob& job, bool exhaustive, std::uint64_t samples,
                 std::mt19937_64& rng) {
  const WeierstrassCurve& curve = *job.weierstrass;
  const FieldSpec& spec = curve.spec;
  const AffinePoint p2 = *job.fixed_point;
  const bool ht = job.kind == CircuitKind::kMaddHt;

  std::vector<AffinePoint> p1s;
  if (exhaustive) {
    p1s = weierstrass_points(curve);
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) p1s.push_back(weierstrass_sample_point(curve, rng()));
  }
  const AffinePoint neg2 = weierstrass_neg(p2);
  Sweep s;
  auto push = [&](const AffinePoint& p, const FieldElement& z) {
    const ProjPoint q = ht ? ht_encode(spec, p, z) : proj_encode(spec, p, z);
    s.cases.push_back({{"X1", q.X.bits()}, {"Y1", q.Y.bits()}, {"Z1", q.Z.bits()}});
  };
  for (const auto& p : p1s) {
    if (p.infinity || p == p2 || p == neg2) continue;  // generic case only
    if (exhaustive) push(p, FieldElement::one(spec.n()));
    push(p, random_nonzero(spec, rng));
  }

  s.oracle = [curve, p2, ht](const Values& in, const Values& out) -> std::string {
    const FieldSpec& sp = curve.spec;
    const ProjPoint q1{el(in, "X1"), el(in, "Y1"), el(in, "Z1")};
    const ProjPoint q3{el(out, "X3"), el(out, "Y3"), el(out, "Z3")};
    const AffinePoint p1 = ht ? ht_decode(sp, q1) : proj_decode(sp, q1);
    const AffinePoint want = weierstrass_add(p1, p2, curve);
    AffinePoint got;
    try {
      got = ht ? ht_decode(sp, q3) : proj_decode(sp, q3);
    } catch (const Error& e) {
      return std::string("output does not decode: ") + e.what();
    }
    if (!(got == want)) return "sum decodes to " + point_text(got) + ", expected " + point_text(want);
    if (ht && !is_on_ht(q3, curve)) return "output violates the Higuchi-Takagi curve equation";
    return {};
  };
  return s;
}

Sweep edwards_sweep(const CircuitJob& job, bool exhaustive, std::uint64_t samples,
                    std::mt19937_64& rng) {
  const EdwardsCurve& curve = *job.edwards;
  const FieldSpec& spec = curve.spec;
  const std::size_t n = spec.n();
  Sweep s;
  auto push = [&](const EdwardsPoint& p, const EdwardsPoint& q, const FieldElement& z1,
                  const FieldElement& z2) {
    s.cases.push_back({{"X1", fmul(spec, p.x, z1).bits()},
                       {"Y1", fmul(spec, p.y, z1).bits()},
                       {"Z1", z1.bits()},
                       {"X2", fmul(spec, q.x, z2).bits()},
                       {"Y2", fmul(spec, q.y, z2).bits()},
                       {"Z2", z2.bits()}});
  };
  if (exhaustive) {
    const auto pts = edwards_points(curve);
    const FieldElement one = FieldElement::one(n);
    for (const auto& p : pts) {
      for (const auto& q : pts) push(p, q, one, one);
    }
  } else {
    for (std::uint64_t i = 0; i < samples; ++i) {
      const EdwardsPoint p = edwards_sample_point(curve, rng());
      // Every fourth case adds a point to itself, its inverse, or the identity.
      EdwardsPoint q = edwards_sample_point(curve, rng());
      if (i % 4 == 1) q = p;
      if (i % 4 == 2) q = {p.y, p.x};
      if (i % 4 == 3) q = {FieldElement::zero(n), FieldElement::zero(n)};
      push(p, q, random_nonzero(spec, rng), random_nonzero(spec, rng));
    }
  }
  s.oracle = [curve](const Values& in, const Values& out) -> std::string {
    const FieldSpec& sp = curve.spec;
    const EdwardsPoint p1 = edwards_decode(sp, {el(in, "X1"), el(in, "Y1"), el(in, "Z1")});
    const EdwardsPoint p2 = edwards_decode(sp, {el(in, "X2"), el(in, "Y2"), el(in, "Z2")});
    const EdwardsPoint want = edwards_add_affine(p1, p2, curve);
    if (out.at("Z3").is_zero()) return "Z3 is zero";
    const EdwardsPoint got = edwards_decode(sp, {el(out, "X3"), el(out, "Y3"), el(out, "Z3")});
    if (!(got == want)) {
      return "sum decodes to (" + got.x.to_hex() + ", " + got.y.to_hex() + "), expected (" +
             want.x.to_hex() + ", " + want.y.to_hex() + ")";
    }
    return {};
  };
  return s;
}

// Runs the cases 64 at a time; stops at the first failure.
void run_sweep(const Circuit& c, const Sweep& sweep, VerifyResult& r) {
  std::vector<std::uint64_t> state(c.width());
  for (std::size_t base = 0; base < sweep.cases.size(); base += 64) {
    const std::size_t lanes = std::min<std::size_t>(64, sweep.cases.size() - base);
    std::fill(state.begin(), state.end(), 0);
    for (std::size_t l = 0; l < lanes; ++l) {
      for (const auto& [name, value] : sweep.cases[base + l]) {
        const Register& reg = c.register_named(name);
        if (reg.size != value.size()) {
          throw Error(Errc::kLengthMismatch, "register '" + name + "' has the wrong size");
        }
        load_register_lane(state, reg, static_cast<int>(l), value);
      }
    }
    simulate_lanes(c, state);
    for (std::size_t l = 0; l < lanes; ++l) {
      const Values& in = sweep.cases[base + l];
      const int lane = static_cast<int>(l);
      Values out;
      std::string err;
      for (const auto& reg : c.registers()) {
        if (reg.role == RegisterRole::kOutput) {
          out[reg.name] = read_register_lane(state, reg, lane);
          continue;
        }
        const BitVec got = read_register_lane(state, reg, lane, false);
        if (reg.role == RegisterRole::kAncilla) {
          if (!got.is_zero() && err.empty()) err = "ancilla " + reg.name + " left at " + got.to_hex();
        } else {
          auto it = in.find(reg.name);
          const BitVec want = it == in.end() ? BitVec(reg.size) : it->second;
          if (got != want && err.empty()) err = "input " + mismatch(reg.name, got, want);
        }
      }
      if (err.empty()) err = sweep.oracle(in, out);
      ++r.cases;
      if (!err.empty()) {
        r.ok = false;
        r.failure = err;
        r.counterexample = "input " + values_text(in) + "; output " + values_text(out);
        return;
      }
    }
  }
}

}  // namespace

const char* kind_name(CircuitKind kind) { return info(kind).name; }

std::string toffoli_formula(CircuitKind kind) { return info(kind).formula; }

CircuitKind parse_kind(std::string_view name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw Error(Errc::kInvalidArgument, "unknown circuit kind: " + std::string(name));
}

bool is_point_kind(CircuitKind kind) {
  return kind == CircuitKind::kMaddProjective || kind == CircuitKind::kMaddHt ||
         kind == CircuitKind::kEdwardsAdd;
}

CircuitJob complete_job(CircuitJob job, std::uint64_t seed) {
  const std::size_t n = job.spec.n();
  if (job.kind == CircuitKind::kConstMult && !job.gamma) {
    job.gamma = n >= 2 ? FieldElement::monomial(n, 1) : FieldElement::one(n);
  }
  if (job.kind == CircuitKind::kMaddProjective || job.kind == CircuitKind::kMaddHt) {
    if (!job.weierstrass) job.weierstrass = default_weierstrass(job.spec);
    if (!job.fixed_point) job.fixed_point = weierstrass_sample_point(*job.weierstrass, seed);
  }
  if (job.kind == CircuitKind::kEdwardsAdd && !job.edwards) job.edwards = default_edwards(job.spec);
  return job;
}

Circuit synthesize(const CircuitJob& job) {
  const FieldSpec& spec = job.spec;
  switch (job.kind) {
    case CircuitKind::kAdd:
      return synth_add_inplace(spec);
    case CircuitKind::kAddOop:
      return synth_add_outofplace(spec);
    case CircuitKind::kMult:
      return synth_mult_accumulate(spec, job.schedule);
    case CircuitKind::kSquare:
      return synth_square(spec);
    case CircuitKind::kConstMult:
      if (!job.gamma) throw Error(Errc::kInvalidArgument, "const-mult needs a constant");
      return synth_const_mult(spec, *job.gamma, job.placement);
    case CircuitKind::kPow2k:
      return synth_pow2k(spec, job.k, job.placement);
    case CircuitKind::kInvert:
      return synth_inverter(spec, job.schedule);
    case CircuitKind::kMaddProjective:
    case CircuitKind::kMaddHt: {
      if (!job.weierstrass || !job.fixed_point || job.fixed_point->infinity) {
        throw Error(Errc::kInvalidArgument, "mixed addition needs a curve and a finite fixed point");
      }
      const auto& p = *job.fixed_point;
      return job.kind == CircuitKind::kMaddHt
                 ? synth_madd_ht(*job.weierstrass, p.x, p.y, job.schedule)
                 : synth_madd_projective(*job.weierstrass, p.x, p.y, job.schedule);
    }
    case CircuitKind::kEdwardsAdd:
      if (!job.edwards) throw Error(Errc::kInvalidArgument, "edwards-add needs a curve");
      return synth_edwards_add(*job.edwards, job.schedule);
  }
  throw Error(Errc::kInvalidArgument, "unknown circuit kind");
}

std::uint64_t expected_toffoli_count(const CircuitJob& job) {
  const std::uint64_t n2 = static_cast<std::uint64_t>(job.spec.n()) * job.spec.n();
  switch (job.kind) {
    case CircuitKind::kMult:
      return n2;
    case CircuitKind::kInvert:
      return inverter_toffoli_count(job.spec.n());
    case CircuitKind::kMaddProjective:
      return kMaddProjectiveMults * n2;
    case CircuitKind::kMaddHt:
      return kMaddHtMults * n2;
    case CircuitKind::kEdwardsAdd:
      return kEdwardsMults * n2;
    default:
      return 0;
  }
}

VerifyResult verify_circuit(const Circuit& c, const CircuitJob& job, const VerifyOptions& opts) {
  VerifyResult r;
  const std::size_t n = job.spec.n();
  r.exhaustive = n <= opts.exhaustive_max_n;
  r.expected_toffoli = expected_toffoli_count(job);
  r.toffoli = resource_report(c).ccx;
  if (job.kind == CircuitKind::kInvert) {
    const std::int64_t published = published_inverter_toffoli_count(n);
    std::ostringstream note;
    note << "published closed form 2(floor(log2(n-1))+HW(n-1)-2)n² = " << published
         << ", delta " << static_cast<std::int64_t>(r.expected_toffoli) - published
         << " = 2n²";
    r.notes.push_back(note.str());
  }

  std::mt19937_64 rng(opts.seed);
  try {
    Sweep sweep;
    if (job.kind == CircuitKind::kMaddProjective || job.kind == CircuitKind::kMaddHt) {
      sweep = madd_sweep(job, r.exhaustive, opts.samples, rng);
    } else if (job.kind == CircuitKind::kEdwardsAdd) {
      sweep = edwards_sweep(job, r.exhaustive, opts.samples, rng);
    } else {
      sweep = field_sweep(job, r.exhaustive, opts.samples, rng);
    }
    run_sweep(c, sweep, r);
  } catch (const Error& e) {
    r.ok = false;
    r.failure = std::string("circuit does not fit the job: ") + e.what();
    return r;
  }
  if (r.ok && r.toffoli != r.expected_toffoli) {
    r.ok = false;
    r.failure = "Toffoli count " + std::to_string(r.toffoli) + " differs from " +
                toffoli_formula(job.kind) + " = " + std::to_string(r.expected_toffoli);
  }
  return r;
}

}  // namespace ecqc

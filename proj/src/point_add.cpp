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

#include "ecqc/point_add.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ecqc/error.hpp"
#include "ecqc/linear.hpp"

namespace ecqc {

namespace {

using Undo = CircuitBuilder::Undo;
constexpr Undo kUndo = Undo::kUncompute;
constexpr Undo kKeep = Undo::kKeep;

struct Mult {
  std::reference_wrapper<const Wires> a;
  std::reference_wrapper<const Wires> b;
  std::reference_wrapper<const Wires> acc;
  Undo undo;
  ToffoliWalk walk = {};
};

// Register allocation plus stage bookkeeping shared by the three circuits.
class PointSynth {
 public:
  PointSynth(const FieldSpec& spec, MultSchedule schedule) : spec_(spec), schedule_(schedule) {
    if (spec.n() < 2) throw Error(Errc::kDegreeTooSmall, "point addition needs n >= 2");
  }

  Wires in(std::string name) { return reg(std::move(name), RegisterRole::kInput); }
  Wires out(std::string name) { return reg(std::move(name), RegisterRole::kOutput); }
  Wires anc(std::string name) { return reg(std::move(name), RegisterRole::kAncilla); }

  // to ^= from.
  void add(const Wires& from, const Wires& to, Undo undo = kUndo) {
    b_.step(undo, [&] { b_.add_into(from, to); });
  }
  // to ^= map(from).
  void linear(const LinearMap& map, const Wires& from, const Wires& to) {
    b_.step(kUndo, [&] { emit_linear_map(b_, spec_, map, from, to); });
  }
  // Multipliers on pairwise disjoint wires. Uncomputed ones come first so
  // pool 0 always belongs to a multiplier that is replayed in reverse.
  void stage(std::vector<Mult> mults) {
    std::stable_partition(mults.begin(), mults.end(),
                          [](const Mult& m) { return m.undo == kUndo; });
    for (std::size_t k = 0; k < mults.size(); ++k) {
      const Mult& m = mults[k];
      const Wires& fan = pool(k);
      b_.step(m.undo, [&] { emit_mult_accumulate(b_, spec_, m.a.get(), m.b.get(), m.acc.get(), schedule_, fan,
                             m.walk); });
    }
  }

  Circuit finish() && {
    b_.uncompute();
    return std::move(b_).build();
  }

 private:
  Wires reg(std::string name, RegisterRole role) {
    return b_.add_register(std::move(name), static_cast<std::uint32_t>(spec_.n()), role);
  }
  const Wires& pool(std::size_t k) {
    static const Wires kNone;
    if (schedule_ != MultSchedule::kFanout) return kNone;
    while (pools_.size() <= k) {
      pools_.push_back(b_.add_register("pool" + std::to_string(pools_.size()),
                                       static_cast<std::uint32_t>(spec_.n() - 1),
                                       RegisterRole::kAncilla));
    }
    return pools_[k];
  }

  const FieldSpec& spec_;
  MultSchedule schedule_;
  CircuitBuilder b_;
  std::vector<Wires> pools_;
};

void check_fixed_point(const WeierstrassCurve& curve, const FieldElement& x2,
                       const FieldElement& y2) {
  if (!is_on_weierstrass(AffinePoint::finite(x2, y2), curve)) {
    throw Error(Errc::kPointNotOnCurve, "fixed point is not on the curve");
  }
}

LinearMap mul(const FieldElement& c) { return LinearMap::const_mul(c); }

}  // namespace

Circuit synth_madd_projective(const WeierstrassCurve& curve, const FieldElement& x2,
                              const FieldElement& y2, MultSchedule schedule) {
  check_fixed_point(curve, x2, y2);
  PointSynth s(curve.spec, schedule);
  const Wires X1 = s.in("X1"), Y1 = s.in("Y1"), Z1 = s.in("Z1");
  const Wires X3 = s.out("X3"), Y3 = s.out("Y3"), Z3 = s.out("Z3");

  const Wires Z1c = s.anc("Z1c");
  s.add(Z1, Z1c);
  const Wires A = s.anc("A"), B = s.anc("B");
  s.linear(mul(y2), Z1, A);
  s.linear(mul(x2), Z1c, B);
  s.add(Y1, A);
  s.add(X1, B);
  const Wires AB = s.anc("AB"), Ac = s.anc("Ac"), Bc = s.anc("Bc");
  s.add(A, AB);
  s.add(B, AB);
  s.add(A, Ac);
  s.add(B, Bc);

  const Wires C = s.anc("C");
  s.linear(LinearMap::square(), B, C);
  const bool has_a2 = !curve.a2.is_zero();
  Wires a2C;
  if (has_a2) {
    a2C = s.anc("a2C");
    s.linear(LinearMap::square().then(mul(curve.a2)), Bc, a2C);
  }

  // S holds A*AB + a2*C, Q holds A*X1 + B*Y1.
  const Wires E = s.anc("E"), S = s.anc("S"), P = s.anc("P"), Q = s.anc("Q");
  s.stage({{B, C, E, kUndo}, {A, AB, S, kUndo}, {Ac, X1, P, kUndo}, {Bc, Y1, Q, kUndo}});
  s.add(P, Q);
  if (has_a2) s.add(a2C, S);

  // F = S Z1 + E is formed in place on the S Z1 product, so the AB F
  // multiplier continues the Toffoli chain of S Z1.
  const Wires F = s.anc("F");
  s.stage({{S, Z1c, F, kUndo}, {C, Q, Y3, kKeep}, {E, Z1, Z3, kKeep}});
  s.add(E, F);
  const Wires Fc = s.anc("Fc");
  s.add(F, Fc);

  const Wires ABF = s.anc("ABF");
  s.stage({{F, AB, ABF, kUndo}, {B, Fc, X3, kKeep}});
  s.add(ABF, Y3, kKeep);
  return std::move(s).finish();
}

Circuit synth_madd_ht(const WeierstrassCurve& curve, const FieldElement& x2,
                      const FieldElement& y2, MultSchedule schedule) {
  check_fixed_point(curve, x2, y2);
  PointSynth s(curve.spec, schedule);
  const Wires X1 = s.in("X1"), Y1 = s.in("Y1"), Z1 = s.in("Z1");
  const Wires X3 = s.out("X3"), Y3 = s.out("Y3"), Z3 = s.out("Z3");

  const Wires X1c = s.anc("X1c"), Z1c = s.anc("Z1c"), Z1cc = s.anc("Z1cc"),
              Z1ccc = s.anc("Z1ccc");
  s.add(X1, X1c);
  s.add(Z1, Z1c);
  s.add(Z1, Z1cc);
  s.add(Z1, Z1ccc);

  const Wires A = s.anc("A"), B1 = s.anc("B1"), B2 = s.anc("B2"), E = s.anc("E"),
              B1sq = s.anc("B1sq"), B2sq = s.anc("B2sq");
  s.linear(mul(x2), Z1, A);
  s.linear(LinearMap::square(), X1, B1);
  s.linear(mul(x2).then(LinearMap::square()), Z1c, B2);
  s.linear(LinearMap::square().then(mul(y2)), Z1cc, E);
  s.linear(LinearMap::pow2(2), X1c, B1sq);
  s.linear(mul(x2).then(LinearMap::pow2(2)), Z1ccc, B2sq);

  const Wires C = s.anc("C"), D = s.anc("D"), Dc = s.anc("Dc"), F = s.anc("F"),
              EB2 = s.anc("EB2"), YB1 = s.anc("YB1"), D2 = s.anc("D2");
  s.add(X1, C);
  s.add(A, C);
  s.add(B1, D);
  s.add(B2, D);
  s.add(D, Dc);
  s.add(Y1, F);
  s.add(E, F);
  s.add(E, EB2);
  s.add(B2, EB2);
  s.add(Y1, YB1);
  s.add(B1, YB1);
  s.add(B1sq, D2);
  s.add(B2sq, D2);

  // P1 = X1 (E + B2), P3 = X1 D, P4 = Y1 D^2; A (Y1 + B1) lands in X3.
  const Wires G = s.anc("G"), P1 = s.anc("P1"), P3 = s.anc("P3"), P4 = s.anc("P4");
  s.stage({{F, C, G, kUndo},
           {X1, EB2, P1, kUndo},
           {X1c, Dc, P3, kUndo},
           {Y1, D2, P4, kUndo},
           {Z1, D, Z3, kKeep},
           {A, YB1, X3, kKeep}});
  s.add(P1, X3, kKeep);
  const Wires GZ = s.anc("GZ");
  s.add(G, GZ);
  s.add(Z3, GZ);

  const Wires Q1 = s.anc("Q1");
  s.stage({{P3, G, Q1, kUndo}, {GZ, X3, Y3, kKeep}});
  s.add(Q1, Y3, kKeep);
  s.add(P4, Y3, kKeep);
  return std::move(s).finish();
}

Circuit synth_edwards_add(const EdwardsCurve& curve, MultSchedule schedule) {
  if (curve.d1.is_zero() || !ftrace(curve.spec, curve.d2)) {
    throw Error(Errc::kInvalidCurve, "Edwards curve needs d1 != 0 and Tr(d2) = 1");
  }
  PointSynth s(curve.spec, schedule);
  const Wires X1 = s.in("X1"), Y1 = s.in("Y1"), Z1 = s.in("Z1");
  const Wires X2 = s.in("X2"), Y2 = s.in("Y2"), Z2 = s.in("Z2");
  const Wires X3 = s.out("X3"), Y3 = s.out("Y3"), Z3 = s.out("Z3");

  const Wires W1 = s.anc("W1"), W2 = s.anc("W2"), XZ1 = s.anc("XZ1"), YZ1 = s.anc("YZ1"),
              YZ2 = s.anc("YZ2"), XZ2 = s.anc("XZ2");
  s.add(X1, W1);
  s.add(Y1, W1);
  s.add(X2, W2);
  s.add(Y2, W2);
  s.add(X1, XZ1);
  s.add(Z1, XZ1);
  s.add(Y1, YZ1);
  s.add(Z1, YZ1);
  s.add(Y2, YZ2);
  s.add(Z2, YZ2);
  s.add(X2, XZ2);
  s.add(Z2, XZ2);
  const Wires W2c = s.anc("W2c"), Z1c = s.anc("Z1c"), Z2c = s.anc("Z2c"), Z2cc = s.anc("Z2cc");
  s.add(W2, W2c);
  s.add(Z1, Z1c);
  s.add(Z2, Z2c);
  s.add(Z2, Z2cc);

  const Wires A = s.anc("A"), B = s.anc("B"), C = s.anc("C"), D = s.anc("D");
  s.stage({{X1, XZ1, A, kUndo}, {Y1, YZ1, B, kUndo}, {Z1, Z2, C, kUndo}, {W2, Z2c, D, kUndo}});
  // K = d1 Z2 + d2 W2.
  const Wires K = s.anc("K");
  s.linear(mul(curve.d1), Z2cc, K);
  s.linear(mul(curve.d2), W2c, K);
  const Wires Ac = s.anc("Ac"), Bc = s.anc("Bc"), Cc = s.anc("Cc"), Dc = s.anc("Dc");
  s.add(A, Ac);
  s.add(B, Bc);
  s.add(C, Cc);
  s.add(D, Dc);

  const Wires E = s.anc("E"), d1Z1 = s.anc("d1Z1");
  s.linear(LinearMap::square().then(mul(curve.d1)), C, E);
  s.linear(mul(curve.d1), Z1, d1Z1);
  // U and V first hold A D and B D; AY and BX later absorb I.
  const Wires WC = s.anc("WC"), U = s.anc("U"), V = s.anc("V"), AY = s.anc("AY"),
              BX = s.anc("BX");
  s.stage({{W1, Cc, WC, kUndo},
           {A, D, U, kUndo},
           {B, Dc, V, kUndo},
           {Ac, YZ2, AY, kUndo},
           {Bc, XZ2, BX, kUndo}});
  s.add(E, U);
  s.add(E, V);
  const Wires Uc = s.anc("Uc"), Vc = s.anc("Vc");
  s.add(U, Uc);
  s.add(V, Vc);

  const Wires H = s.anc("H"), I = s.anc("I"), S = s.anc("S"), UZ = s.anc("UZ"),
              VZ = s.anc("VZ");
  s.stage({{K, WC, H, kUndo},
           {d1Z1, C, I, kUndo},
           {U, V, S, kUndo},
           {Uc, Z1c, UZ, kUndo},
           {Vc, Z1, VZ, kUndo}});
  s.add(I, AY);
  s.add(I, BX);
  const Wires Sc = s.anc("Sc");
  s.add(S, Sc);

  // HX and HY first hold X2 (I + A (Y2 + Z2)) and Y2 (I + B (X2 + Z2)).
  const Wires HX = s.anc("HX"), HY = s.anc("HY"), SX = s.anc("SX"), SY = s.anc("SY");
  s.stage({{X2, AY, HX, kUndo}, {Y2, BX, HY, kUndo}, {S, X1, SX, kUndo}, {Sc, Y1, SY, kUndo}});
  s.add(H, HX);
  s.add(H, HY);

  // Z3 = S Z1 starts on S_{n-1}, where S X1 ends, and ends on S_{n-1},
  // where the reversed S X1 starts, so one compact Toffoli chain runs
  // through all nine stages.
  const std::size_t n = curve.spec.n();
  const ToffoliWalk z3_walk = n >= 3 ? ToffoliWalk{n - 1, n - 2} : ToffoliWalk{};
  s.stage({{HX, VZ, X3, kKeep}, {HY, UZ, Y3, kKeep}, {Z1, S, Z3, kKeep, z3_walk}});
  s.add(SY, X3, kKeep);
  s.add(SX, Y3, kKeep);
  return std::move(s).finish();
}

}  // namespace ecqc

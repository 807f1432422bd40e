#pragma once

#include <string>
#include <vector>

#include "slope/engine.hpp"
#include "slope/profile.hpp"

// Slopes of projectivized bundles over a polarized curve base and the
// destabilizing test against projective subbundles.

namespace slope {

// Polarized base (B, O_B(1)).  Only one-dimensional bases are supported with
// exact Hilbert data: a0B is the leading coefficient (the degree) and muB the
// base slope a1(0)/a0(0) = (1 - genus)/degree.
struct BaseData {
  int b = 1;
  Rational a0B;
  Rational muB;
};

BaseData curve_base(long genus, const Rational& deg);

// A locally free sheaf on the base, described by its rank and degree.
struct SheafData {
  long rank = 0;
  Rational deg;
};

struct SubsheafEntry {
  SheafData F;
  bool not_direct_summand = false;  // asserted by the user; drives polystability notes
  std::string label;
};

// P(E) over the base, polarized by L_m = O_{P(E)}(1) + m (pullback of O_B(1)).
struct BundleScenario {
  BaseData base;
  SheafData E;
  std::vector<SubsheafEntry> subsheaves;
  Rational m;
};

void validate(const BaseData& d);
void validate(const BaseData& base, const SheafData& s);
void validate(const BundleScenario& scn);

// mu(sheaf) = deg / (a0B (b-1)! rank) + muB.
Rational mu_sheaf(const BaseData& base, const SheafData& s);

// Functorial (rank, deg) arithmetic used by the slope identities.
SheafData sym_power_dual(const SheafData& e, unsigned k);
SheafData tensor_sheaf(const SheafData& e, const SheafData& f);
SheafData direct_sum(const SheafData& e, const SheafData& f);

// Checks mu(S^k E^*) = (1+k) mu(B) - k mu(E),
//        mu(E (x) F)  = mu(E) + mu(F) - mu(B),
//        rk(E+F) mu(E+F) = rk(E) mu(E) + rk(F) mu(F).
bool slope_identities(const BaseData& base, const SheafData& e, const SheafData& f, unsigned k);

// Effective twist after absorbing the base slope: m + (mu(B) - mu(E)) / b.
Rational tilde_m(const BundleScenario& scn);

// Leading Hilbert pair of (P(E), L_m):
//   a0 = (a0B / r!) m~,  a1 = (a0B / r!) (r(r+1)/2 m~ + mu(B)),  r = rk E - 1.
std::pair<Rational, Rational> projbundle_a0a1(const BundleScenario& scn);

// deg L_m = a0B (r+1) m~ (equals n! a0 with n = r + 1).
Rational bundle_degL(const BundleScenario& scn);

Rational bundle_muX(const BundleScenario& scn);

// Non-fatal notes: non-ample twist, subsheaf slope at the boundary, etc.
std::vector<std::string> bundle_warnings(const BundleScenario& scn);

// Weight densities of the filtration by powers of the ideal of P(F):
//   alpha1(x) = (a0B / s! t!) (1-x)^s x^t (m~ + gamma(x)),
//   alpha2(x) = (a0B / s! t!) [ delta(x) (m~ + gamma(x)) + mu(B) (1-x)^s x^t ],
// with gamma(x) = (mu(E) - mu(F)) (1 - x (r+1)/(t+1)),
// 2 delta(x) = s(s+1)(1-x)^{s-1} x^t + t(t+1)(1-x)^s x^{t-1},
// s + 1 = rk F, t + 1 = rk E - rk F.
std::pair<Polynomial, Polynomial> bundle_alphas(const BundleScenario& scn, const SubsheafEntry& sub);

struct GapResult {
  Rational gap;        // mu_1(O_{P(F)}) - mu(P(E)), negative iff destabilizing
  Rational futaki;     // F1 of the configuration at c = 1
  Rational margin;     // N(1) = -a0(0)^2 F1(1)
  Rational weight_b0;  // normal-cone weights at c = 1
  Rational weight_b1;
};

// Closed form gap = C(m~) (mu(E) - mu(F)) ((r+1) m~ - mu(B)), cross-checked
// against the explicit polynomial integrals (internal_error on mismatch).
GapResult subbundle_slope_gap(const BundleScenario& scn, const SubsheafEntry& sub);

// Full Hilbert profile of the filtration on [0, 1]; the bound c = 1 is exact
// and its boundary configuration (degeneration to the normal cone of P(F),
// or the product when F splits off) is genuine.
SlopeProfile profile_from_bundle(const BundleScenario& scn, const SubsheafEntry& sub);

struct SubsheafVerdict {
  std::string label;
  Rational muF;
  GapResult gap;
  Verdict verdict;
  std::string note;  // polystability remark when equality holds
};

struct BundleVerdict {
  Rational muE;
  Rational muX;
  std::vector<SubsheafVerdict> subs;
  Verdict overall;
};

BundleVerdict bundle_verdict(const BundleScenario& scn);

}  // namespace slope

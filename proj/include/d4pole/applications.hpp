/*
   Copyright 2026 the d4pole contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef D4POLE_APPLICATIONS_HPP
#define D4POLE_APPLICATIONS_HPP

#include "d4pole/poles.hpp"

namespace d4pole {

// Borel induction datum on the rank-two torus: mu_i = eta_i |.|^{z_i},
// normalized into the Weyl chamber 0 <= z2 <= z1 <= 2 z2.
struct BorelInductionDatum {
  Rat z1{0}, z2{0};
  FiniteClass eta1, eta2;

  BorelInductionDatum(Rat z1_, Rat z2_, FiniteClass e1, FiniteClass e2);
  std::string str() const;
};

// The seven-factor standard L-function of the induced datum, twisted by chi:
// L(mu1 chi) L(mu1^-1 chi) L(mu2 chi) L(mu2^-1 chi)
// L((mu1/mu2) chi) L((mu2/mu1) chi) L(chi), exponents folded into shifts.
LExpr standard_l_factorization(const BorelInductionDatum& datum, const FiniteClass& chi);

// Partial-pole arithmetic of the theta-lift L-expression
// z^S(s-1)^2 z^S(s+1)^2 z^S(s)^3 and the double-pole bound it yields.
struct GHReport {
  int s_size = 0;
  LExpr expr;
  int order_at_one = 0;           // 3 - 2(|S|-1)
  bool contradiction_fires = false;  // order-3 assumption refuted once |S| > 1
  int max_order_right_halfplane = 0;
  bool at_most_double = false;
  std::vector<std::string> trace;
};

GHReport ginzburg_hundley_check(int s_size);

// CAP case analysis: enumerate the induction data compatible with the pole
// gate at 3/2, eliminate via order comparisons against the Eisenstein bounds,
// return the survivors with full contradiction traces.
struct CapTest {
  FiniteClass chi;
  Rat l_point;       // point in the L-variable; Eisenstein point is l_point - 1/2
  bool conclusive = false;  // no factor argument vanishes: order is S-robust
  int order = 0;            // complete order (|S| = 0 reading)
  int bound = 0;
  bool violated = false;
  std::string note;
};

struct CapBranch {
  BorelInductionDatum datum;
  bool eliminated = false;
  std::string elimination;  // "order O > bound B at chi=..., s=..."
  std::vector<CapTest> tests;
};

struct CapAnalysis {
  FormKind form;
  std::vector<std::string> gate_trace;  // candidate derivation
  std::vector<CapBranch> branches;
  std::vector<BorelInductionDatum> survivors;
  std::vector<std::string> assumptions;
};

// Runs the full enumeration; `fixed` restricts to a single datum when given.
CapAnalysis cap_analysis(const EtaleForm& form,
                         const std::optional<BorelInductionDatum>& fixed = std::nullopt);

} // namespace d4pole

#endif

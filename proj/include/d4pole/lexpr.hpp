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

#ifndef D4POLE_LEXPR_HPP
#define D4POLE_LEXPR_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "d4pole/laurent.hpp"
#include "d4pole/rootdatum.hpp"
#include "d4pole/symbols.hpp"

namespace d4pole {

// One completed-L factor: L_field(argument, class)^exp. The argument is an
// affine form in s, optionally remembering the lambda-coordinate form it was
// specialized from. The class is stored unreduced; triviality over the field
// is resolved against a scenario at analysis time.
struct LFactor {
  FieldLabel field = FieldLabel::F;
  Affine arg;
  std::optional<LinForm> lambda_arg;
  FiniteClass cls;
  int exp = 1;

  std::string str(bool lambda_view, const EtaleForm* form) const;
};

// Formal product of completed Hecke L-functions. Cancellation-reduced under
// structural (field, argument, raw class) identity.
class LExpr {
public:
  LExpr() = default;

  static LExpr one() { return LExpr(); }
  // completed zeta of L at the given affine argument
  static LExpr zeta(FieldLabel field, const Affine& arg, int exp = 1);
  static LExpr lfun(FieldLabel field, const Affine& arg, const FiniteClass& cls, int exp = 1);

  LExpr& mul(const LFactor& f);
  LExpr operator*(const LExpr& o) const;
  LExpr inverse() const;

  const std::vector<LFactor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  // structural equality after reduction (multiset of factors)
  bool operator==(const LExpr& o) const;

  // drop lambda forms and re-reduce: the substitution lambda -> lambda_s
  LExpr to_sline() const;

  // exact total pole order at s0: sum of factor orders under the scenario
  int order_at(const Scenario& scen, const Rat& s0) const;

  // Laurent expansion; every factor contributes nterms coefficients from its
  // own leading degree. `unramified_fe` identifies L(p, c) with L(1-p, c^{-1})
  // for nontrivial classes (exact for everywhere-unramified characters whose
  // global epsilon factor is 1).
  LaurentSeries expand_at(const Scenario& scen, const Rat& s0, int nterms,
                          bool unramified_fe = false) const;

  // Pole order of the partial product with `removed[field]` finite places
  // removed per field. Local factors are (1 - q^{-arg})^{-1}; a removed place
  // shifts the order by -1 exactly when the trivial-class argument hits 0.
  // Archimedean removal is not modeled; factors with nontrivial class whose
  // argument vanishes at s0 make the local order ambiguous and throw.
  int partial_order_at(const Scenario& scen, const std::map<FieldLabel, int>& removed,
                       const Rat& s0) const;

  std::string str(bool lambda_view = false, const EtaleForm* form = nullptr) const;

private:
  std::vector<LFactor> factors_;
  void sort_factors();
};

// series of one factor, exposed for the tests' brute-force cross-checks
LaurentSeries expand_factor(const Scenario& scen, const LFactor& f, const Rat& s0, int nterms,
                            bool unramified_fe);

} // namespace d4pole

#endif

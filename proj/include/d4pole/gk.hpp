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

#ifndef D4POLE_GK_HPP
#define D4POLE_GK_HPP

#include "d4pole/characters.hpp"
#include "d4pole/lexpr.hpp"
#include "d4pole/weyl.hpp"

namespace d4pole {

// The scalar by which the intertwining operator attached to w rescales the
// spherical vector: a product over the positive-root orbits flipped by w^{-1}
// of rank-one ratios L(x, chi^k) / L(x+1, chi^k) over the orbit field.
struct GKFactor {
  WeylWord word;
  LExpr expr;                  // cancellation-reduced product
  std::vector<int> flipped;    // orbit indices, |flipped| = relative length
};

// GK factor of w against an arbitrary torus character (SLine or General mode);
// the cocycle J(w'w'') = J(w'', w'^{-1}.mu) J(w', mu) holds for length-additive
// factorizations.
LExpr gk_expr(const WeylWord& w, const TorusCharacter& mu);

// against the inducing character chi_s on the s-line
GKFactor gk_sline(const WeylWord& w, ChiKind chi = ChiKind::Quad);

// against the general-lambda inducing character; factors carry lambda forms
GKFactor gk_general(const WeylWord& w, ChiKind chi = ChiKind::Quad);

} // namespace d4pole

#endif

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

#include "d4pole/gk.hpp"

#include <optional>

namespace d4pole {

LExpr gk_expr(const WeylWord& w, const TorusCharacter& mu) {
  const EtaleForm& form = w.form();
  const auto& pos = positive_roots_d4();
  LExpr out;
  for (int oi : flipped_orbits(w)) {
    const RootOrbit& orb = form.orbits()[oi];
    // pairing against one member's coroot; Galois stability makes all members
    // agree, which we assert
    std::optional<LinForm> arg_general;
    std::optional<int> power;
    for (int m : orb.members) {
      LinForm f;
      f.coeff.assign(form.coord_dim(), Rat(0));
      int p = 0;
      for (int i = 1; i <= 4; ++i) {
        int c = pos[m][i - 1];
        if (c == 0) continue;
        const LinForm& e = mu.exp_general(i);
        for (int v = 0; v < form.coord_dim(); ++v) f.coeff[v] += Rat(c) * e.coeff[v];
        f.cst += Rat(c) * e.cst;
        p += c * mu.chi_power(i);
      }
      if (arg_general && !(*arg_general == f))
        throw std::logic_error("orbit members pair differently against the character");
      if (power && *power != p) throw std::logic_error("orbit members carry different chi powers");
      arg_general = f;
      power = p;
    }
    FiniteClass cls = FiniteClass::chi(*power);
    LFactor numer{orb.field, {}, std::nullopt, cls, 1};
    LFactor denom{orb.field, {}, std::nullopt, cls, -1};
    LinForm shifted = *arg_general;
    shifted.cst += Rat(1);
    numer.arg = arg_general->on_sline(form);
    denom.arg = shifted.on_sline(form);
    if (mu.mode() == TorusCharacter::Mode::General) {
      numer.lambda_arg = *arg_general;
      denom.lambda_arg = shifted;
    }
    out.mul(numer);
    out.mul(denom);
  }
  return out;
}

GKFactor gk_sline(const WeylWord& w, ChiKind chi) {
  TorusCharacter mu = TorusCharacter::inducing(w.form(), chi, TorusCharacter::Mode::SLine);
  return GKFactor{w, gk_expr(w, mu), flipped_orbits(w)};
}

GKFactor gk_general(const WeylWord& w, ChiKind chi) {
  TorusCharacter mu = TorusCharacter::inducing(w.form(), chi, TorusCharacter::Mode::General);
  return GKFactor{w, gk_expr(w, mu), flipped_orbits(w)};
}

} // namespace d4pole

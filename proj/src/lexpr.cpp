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

#include "d4pole/lexpr.hpp"

#include <algorithm>

namespace d4pole {

namespace {

// exact rational power a^k for integer k (a nonzero for k < 0)
Rat rat_pow(const Rat& a, int k) {
  Rat out(1);
  Rat base = k >= 0 ? a : Rat(1) / a;
  for (int i = 0; i < std::abs(k); ++i) out *= base;
  return out;
}

std::tuple<FieldLabel, std::string, std::string, std::string> factor_key(const LFactor& f) {
  std::string lam;
  if (f.lambda_arg) {
    lam = "L";
    for (const auto& c : f.lambda_arg->coeff) lam += to_string(c) + ",";
    lam += ";" + to_string(f.lambda_arg->cst);
  }
  return {f.field, to_string_affine(f.arg), f.cls.str(), lam};
}

// structural identity: lambda forms when both factors carry one, otherwise
// the affine argument (distinct lambda forms may coincide on the s-line)
bool same_site(const LFactor& a, const LFactor& b) {
  if (a.field != b.field || !(a.cls == b.cls)) return false;
  if (a.lambda_arg.has_value() != b.lambda_arg.has_value()) return false;
  if (a.lambda_arg) return *a.lambda_arg == *b.lambda_arg;
  return a.arg == b.arg;
}

} // namespace

std::string LFactor::str(bool lambda_view, const EtaleForm* form) const {
  std::string argstr;
  if (lambda_view && lambda_arg && form) argstr = lambda_arg->str(*form);
  else argstr = to_string_affine(arg);
  std::string name = cls.trivial() ? "Z_" + to_string(field) : "L_" + to_string(field);
  std::string out = name + "(" + argstr;
  if (!cls.trivial()) {
    out += "," + cls.str();
    if (field != FieldLabel::F) out += ".Nm";
  }
  out += ")";
  if (exp != 1) out += "^" + std::to_string(exp);
  return out;
}

LExpr LExpr::zeta(FieldLabel field, const Affine& arg, int exp) {
  return lfun(field, arg, FiniteClass(), exp);
}

LExpr LExpr::lfun(FieldLabel field, const Affine& arg, const FiniteClass& cls, int exp) {
  LExpr e;
  e.mul(LFactor{field, arg, std::nullopt, cls, exp});
  return e;
}

LExpr& LExpr::mul(const LFactor& f) {
  if (f.exp == 0) return *this;
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (same_site(*it, f)) {
      it->exp += f.exp;
      if (it->exp == 0) factors_.erase(it);
      sort_factors();
      return *this;
    }
  }
  factors_.push_back(f);
  sort_factors();
  return *this;
}

void LExpr::sort_factors() {
  std::sort(factors_.begin(), factors_.end(), [](const LFactor& x, const LFactor& y) {
    return factor_key(x) < factor_key(y);
  });
}

LExpr LExpr::operator*(const LExpr& o) const {
  LExpr out = *this;
  for (const auto& f : o.factors_) out.mul(f);
  return out;
}

LExpr LExpr::inverse() const {
  LExpr out = *this;
  for (auto& f : out.factors_) f.exp = -f.exp;
  out.sort_factors();
  return out;
}

bool LExpr::operator==(const LExpr& o) const {
  if (factors_.size() != o.factors_.size()) return false;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const auto& a = factors_[i];
    const auto& b = o.factors_[i];
    if (!same_site(a, b) || !(a.arg == b.arg) || a.exp != b.exp) return false;
  }
  return true;
}

LExpr LExpr::to_sline() const {
  LExpr out;
  for (auto f : factors_) {
    f.lambda_arg = std::nullopt;
    out.mul(f);
  }
  return out;
}

int LExpr::order_at(const Scenario& scen, const Rat& s0) const {
  int order = 0;
  for (const auto& f : factors_) {
    FiniteClass cls = f.cls.over(scen, f.field);
    if (!cls.trivial()) continue;  // entire and nonvanishing
    Rat u = f.arg(s0);
    if (u == Rat(0) || u == Rat(1)) order += f.exp;
  }
  return order;
}

LaurentSeries expand_factor(const Scenario& scen, const LFactor& f, const Rat& s0, int nterms,
                            bool unramified_fe) {
  FiniteClass cls = f.cls.over(scen, f.field);
  Rat a = f.arg.a;
  Rat u = f.arg(s0);
  std::vector<Poly> c(static_cast<size_t>(nterms));
  int first = 0;

  if (cls.trivial() && (u == Rat(0) || u == Rat(1))) {
    if (a == Rat(0)) throw std::invalid_argument("constant argument sits on a zeta pole");
    // at 1: series in Res; at 0: rewrite through z(x) = z(1-x)
    Rat slope = (u == Rat(1)) ? a : -a;
    first = -1;
    for (int k = -1; k < nterms - 1; ++k)
      c[static_cast<size_t>(k + 1)] =
          Poly::symbol(Sym::res(f.field, k)) * rat_pow(slope, k);
  } else {
    // regular point: canonicalize through the functional equation
    Rat p = u;
    Rat slope = a;
    FiniteClass ccls = cls;
    bool apply_fe = cls.trivial() || unramified_fe;
    if (apply_fe) {
      if (Rat(1) - u > u || (Rat(1) - u == u && cls.inverse().normalized(scen) < cls)) {
        p = Rat(1) - u;
        slope = -a;
        ccls = cls.inverse().normalized(scen);
      }
    }
    bool self_dual_point = apply_fe && p == Rat(1) - p && ccls == ccls.inverse().normalized(scen);
    for (int k = 0; k < nterms; ++k) {
      if (self_dual_point && k % 2 == 1) continue;  // even function of t at 1/2
      c[static_cast<size_t>(k)] = Poly::symbol(Sym::val(f.field, p, ccls, k)) * rat_pow(slope, k);
    }
  }

  LaurentSeries s(s0, first, std::move(c));
  if (f.exp == 1) return s;
  LaurentSeries out = LaurentSeries::one(s0, nterms);
  LaurentSeries base = f.exp > 0 ? s : s.inverse();
  for (int i = 0; i < std::abs(f.exp); ++i) out = out * base;
  return out;
}

LaurentSeries LExpr::expand_at(const Scenario& scen, const Rat& s0, int nterms,
                               bool unramified_fe) const {
  LaurentSeries out = LaurentSeries::one(s0, nterms);
  for (const auto& f : factors_) out = out * expand_factor(scen, f, s0, nterms, unramified_fe);
  return out;
}

int LExpr::partial_order_at(const Scenario& scen, const std::map<FieldLabel, int>& removed,
                            const Rat& s0) const {
  int order = order_at(scen, s0);
  for (const auto& f : factors_) {
    auto it = removed.find(f.field);
    int count = it == removed.end() ? 0 : it->second;
    if (count < 0) throw std::invalid_argument("negative removed-place count");
    if (count == 0) continue;
    Rat u = f.arg(s0);
    if (u != Rat(0)) continue;  // local factor regular and nonzero on the real line
    FiniteClass cls = f.cls.over(scen, f.field);
    if (!cls.trivial())
      throw std::invalid_argument(
          "removed local factor with nontrivial class at a vanishing argument is ambiguous");
    order -= f.exp * count;
  }
  return order;
}

std::string LExpr::str(bool lambda_view, const EtaleForm* form) const {
  if (factors_.empty()) return "1";
  std::string num, den;
  for (const auto& f : factors_) {
    LFactor g = f;
    g.exp = std::abs(f.exp);
    std::string piece = g.str(lambda_view, form);
    auto& side = f.exp > 0 ? num : den;
    if (!side.empty()) side += " ";
    side += piece;
  }
  if (num.empty()) num = "1";
  if (den.empty()) return num;
  return num + " / [" + den + "]";
}

} // namespace d4pole

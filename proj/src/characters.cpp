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

#include "d4pole/characters.hpp"

#include <algorithm>
#include <sstream>

namespace d4pole {

std::string to_string(ChiKind k) {
  switch (k) {
    case ChiKind::Id: return "id";
    case ChiKind::ClassField: return "chi_E";
    case ChiKind::Quad: return "quad";
  }
  return "?";
}

namespace {
int mod(int x, int m) { return ((x % m) + m) % m; }
}

FiniteClass FiniteClass::operator*(const FiniteClass& o) const {
  return FiniteClass(a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_, e_ + o.e_);
}

FiniteClass FiniteClass::inverse() const { return FiniteClass(-a_, -b_, -c_, -d_, -e_); }

FiniteClass FiniteClass::power(int k) const {
  return FiniteClass(a_ * k, b_ * k, c_ * k, d_ * k, e_ * k);
}

FiniteClass FiniteClass::normalized(const Scenario& scen) const {
  FiniteClass f = *this;
  // substitute the declared identity of chi
  switch (scen.chi) {
    case ChiKind::Id:
      f.a_ = 0;
      break;
    case ChiKind::ClassField:
      switch (scen.form) {
        case FormKind::Split: f.a_ = 0; break;                       // chi_E = Id
        case FormKind::QuadTimesF: f.b_ += f.a_; f.a_ = 0; break;    // chi_E = chi_K
        case FormKind::CubicGalois: f.c_ += f.a_; f.a_ = 0; break;
        case FormKind::CubicNonGalois:
          throw std::invalid_argument("chi_E is not defined for the non-Galois cubic form");
      }
      break;
    case ChiKind::Quad:
      f.a_ = mod(f.a_, 2);
      break;
  }
  // form-level identifications of the auxiliary generators
  switch (scen.form) {
    case FormKind::Split:
      if (f.b_ != 0) throw std::invalid_argument("chi_K is not defined for the split form");
      f.c_ = 0;  // chi_E = Id
      break;
    case FormKind::QuadTimesF:
      f.b_ += f.c_;  // chi_E = chi_K
      f.c_ = 0;
      f.b_ = mod(f.b_, 2);
      break;
    case FormKind::CubicGalois:
      if (f.b_ != 0) throw std::invalid_argument("chi_K is not defined for cubic forms");
      f.c_ = mod(f.c_, 3);
      break;
    case FormKind::CubicNonGalois:
      if (f.b_ != 0) throw std::invalid_argument("chi_K is not defined for cubic forms");
      if (f.c_ != 0)
        throw std::invalid_argument("chi_E is not defined for the non-Galois cubic form");
      break;
  }
  f.d_ = mod(f.d_, 2);
  f.e_ = mod(f.e_, 2);
  return f;
}

FiniteClass FiniteClass::over(const Scenario& scen, FieldLabel field) const {
  FiniteClass f = normalized(scen);
  switch (field) {
    case FieldLabel::F: break;
    case FieldLabel::K: f.b_ = 0; break;  // chi_K composed with Nm_{K/F} is trivial
    case FieldLabel::E: f.c_ = 0; break;  // chi_E composed with Nm_{E/F} is trivial
  }
  return f;
}

bool FiniteClass::is_quadratic() const { return mod(c_, 3) == 0; }

std::string FiniteClass::str() const {
  std::vector<std::string> parts;
  auto add = [&](const std::string& name, int p, int order) {
    int q = order ? mod(p, order) : p;
    if (q == 0) return;
    if (q == 1) parts.push_back(name);
    else parts.push_back(name + "^" + std::to_string(q));
  };
  add("chi", a_, 0);
  add("chi_K", b_, 2);
  add("chi_E", c_, 3);
  add("eta1", d_, 2);
  add("eta2", e_, 2);
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

FiniteClass FiniteClass::parse(const std::string& text) {
  FiniteClass out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    int pow = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
      pow = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    FiniteClass g;
    if (tok == "id" || tok == "1") g = FiniteClass();
    else if (tok == "chi" || tok == "quad") g = FiniteClass::chi();
    else if (tok == "chi_K" || tok == "chi_k") g = FiniteClass::chi_K();
    else if (tok == "chi_E" || tok == "chi_e") g = FiniteClass::chi_E();
    else if (tok == "eta1") g = FiniteClass::eta1();
    else if (tok == "eta2") g = FiniteClass::eta2();
    else throw std::invalid_argument("unknown character token: '" + tok + "'");
    out = out * g.power(pow);
  }
  return out;
}

FiniteClass inducing_class(const Scenario& scen) {
  switch (scen.chi) {
    case ChiKind::Id: return FiniteClass();
    case ChiKind::ClassField:
      switch (scen.form) {
        case FormKind::Split: return FiniteClass();
        case FormKind::QuadTimesF: return FiniteClass::chi_K();
        case FormKind::CubicGalois: return FiniteClass::chi_E();
        case FormKind::CubicNonGalois:
          throw std::invalid_argument("chi_E is not defined for the non-Galois cubic form");
      }
      break;
    case ChiKind::Quad: return FiniteClass::chi();
  }
  throw std::logic_error("bad chi kind");
}

ChiKind parse_chi(const EtaleForm& form, const std::string& text) {
  FiniteClass c = FiniteClass::parse(text);
  // classify the requested class relative to the form
  Scenario probe{form.kind(), ChiKind::Quad};
  FiniteClass n = c.normalized(probe);  // throws for unavailable generators
  if (n.trivial()) return ChiKind::Id;
  // the form's class-field character?
  FiniteClass cf = inducing_class({form.kind(), ChiKind::ClassField}).normalized(probe);
  if (n == cf) return ChiKind::ClassField;
  if (!n.is_quadratic())
    throw std::invalid_argument("character class '" + text + "' is not quadratic and not chi_E");
  return ChiKind::Quad;
}

TorusCharacter TorusCharacter::inducing(const EtaleForm& form, ChiKind chi, Mode mode) {
  if (chi == ChiKind::ClassField && !form.has_class_character())
    throw std::invalid_argument("chi_E is not defined for the non-Galois cubic form");
  TorusCharacter t;
  t.form_ = &form;
  t.chi_ = chi;
  t.mode_ = mode == Mode::At ? Mode::SLine : mode;  // specialize separately
  for (int i = 1; i <= 4; ++i) {
    LinForm f;
    f.coeff.assign(form.coord_dim(), Rat(0));
    f.coeff[form.slot(i)] = Rat(1);
    t.exps_[i - 1] = f;
  }
  // chi o det_M: the highest root pairs (0,1,0,0) against the coroots
  const Root omega = highest_root_d4();
  const auto& a = cartan_d4();
  for (int i = 0; i < 4; ++i) {
    int p = 0;
    for (int u = 0; u < 4; ++u) p += omega[u] * a(u, i);
    t.chi_pow_[i] = p;
  }
  return t;
}

TorusCharacter TorusCharacter::acted(const WeylWord& w) const {
  if (&w.form() != form_) throw std::invalid_argument("form mismatch");
  TorusCharacter out = *this;
  const LatticeMat& m = w.matrix();
  // (w^{-1}.mu) on coordinate i reads off mu on the transported coroot
  for (int i = 0; i < 4; ++i) {
    LinForm f;
    f.coeff.assign(form_->coord_dim(), Rat(0));
    int p = 0;
    for (int j = 0; j < 4; ++j) {
      int c = m(j, i);
      if (c == 0) continue;
      for (int v = 0; v < form_->coord_dim(); ++v) f.coeff[v] += Rat(c) * exps_[j].coeff[v];
      f.cst += Rat(c) * exps_[j].cst;
      p += c * chi_pow_[j];
    }
    out.exps_[i] = f;
    out.chi_pow_[i] = p;
  }
  return out;
}

TorusCharacter TorusCharacter::specialized(const Rat& s0) const {
  if (mode_ == Mode::General)
    throw std::logic_error("specialize applies to s-line characters");
  TorusCharacter out = *this;
  out.mode_ = Mode::At;
  out.s0_ = s0;
  return out;
}

Affine TorusCharacter::exp_sline(int i) const { return exps_[i - 1].on_sline(*form_); }

Rat TorusCharacter::exp_at(int i) const {
  if (mode_ != Mode::At) throw std::logic_error("character not specialized");
  Affine f = exp_sline(i);
  return f(s0_);
}

std::vector<TorusCharacter::SlotData> TorusCharacter::slots() const {
  std::vector<SlotData> out;
  Scenario scen = scenario();
  for (int s = 0; s < form_->coord_dim(); ++s) {
    SlotData d;
    d.field = form_->slot_field(s);
    std::optional<Affine> exp;
    std::optional<int> pow;
    for (int i = 1; i <= 4; ++i) {
      if (form_->slot(i) != s) continue;
      Affine e = exp_sline(i);
      if (mode_ == Mode::At) e = Affine{Rat(0), e(s0_)};
      if (exp && !(*exp == e)) throw std::logic_error("slot exponents inconsistent");
      if (pow && *pow != chi_pow_[i - 1]) throw std::logic_error("slot chi powers inconsistent");
      exp = e;
      pow = chi_pow_[i - 1];
    }
    d.exp = *exp;
    d.chi_pow = *pow;
    d.cls = inducing_class(scen).power(*pow).over(scen, d.field);
    out.push_back(d);
  }
  return out;
}

bool TorusCharacter::same_character(const TorusCharacter& o) const {
  return key() == o.key();
}

std::string TorusCharacter::key() const {
  std::string out;
  for (const auto& s : slots()) {
    out += to_string(s.field) + ":" + to_string_affine(s.exp) + ":" + s.cls.str() + ";";
  }
  return out;
}

std::string TorusCharacter::str() const {
  auto sl = slots();
  // finite part
  std::string num, den;
  for (size_t s = 0; s < sl.size(); ++s) {
    if (sl[s].chi_pow == 0) continue;
    std::string var = "t" + std::to_string(s + 1);
    if (sl[s].field != FieldLabel::F) var = "Nm(" + var + ")";
    int p = sl[s].chi_pow;
    std::string piece = var;
    if (std::abs(p) != 1) piece += "^" + std::to_string(std::abs(p));
    (p > 0 ? num : den) += (p > 0 ? (num.empty() ? "" : "*") : (den.empty() ? "" : "*")) + piece;
  }
  std::string fin;
  if (!num.empty() || !den.empty()) {
    if (num.empty()) num = "1";
    fin = "chi(" + num + (den.empty() ? "" : "/" + den) + ")";
  }
  // absolute value part
  std::string pos, neg;
  for (size_t s = 0; s < sl.size(); ++s) {
    Affine e = sl[s].exp;
    if (e.a == Rat(0) && e.b == Rat(0)) continue;
    std::string var = "|t" + std::to_string(s + 1) + "|_" + to_string(sl[s].field);
    bool negative = e.a == Rat(0) ? e.b < Rat(0) : e.a < Rat(0);
    Affine shown = negative ? Affine{-e.a, -e.b} : e;
    std::string piece = var;
    if (!(shown.a == Rat(0) && shown.b == Rat(1))) piece += "^(" + to_string_affine(shown) + ")";
    auto& side = negative ? neg : pos;
    side += (side.empty() ? "" : " ") + piece;
  }
  std::string out = fin;
  if (!pos.empty()) out += (out.empty() ? "" : " ") + pos;
  if (!neg.empty()) {
    if (out.empty()) out = "1";
    out += " / " + neg;
  }
  if (out.empty()) out = "1";
  return out;
}

bool TorusCharacter::ExponentVector::all_negative() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c < Rat(0); });
}

std::string TorusCharacter::ExponentVector::str() const {
  std::string out = "[";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += to_string(coords[i]);
    if (fields[i] != FieldLabel::F) out += "(Nm)";
  }
  return out + "]";
}

TorusCharacter::ExponentVector TorusCharacter::real_exponent() const {
  if (mode_ != Mode::At) throw std::logic_error("real_exponent needs a specialized character");
  // solve A x = e over Q: the exponent vector in the simple-root basis
  std::array<std::array<Rat, 5>, 4> m{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m[i][j] = Rat(cartan_d4()(i, j));
    m[i][4] = exp_at(i + 1);
  }
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    while (piv < 4 && m[piv][col] == Rat(0)) ++piv;
    if (piv == 4) throw std::logic_error("Cartan matrix singular?");
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c <= 4; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::array<Rat, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = m[i][4] / m[i][i];

  ExponentVector out;
  for (int s = 0; s < form_->coord_dim(); ++s) {
    std::optional<Rat> v;
    for (int i = 1; i <= 4; ++i) {
      if (form_->slot(i) != s) continue;
      if (v && *v != x[i - 1]) throw std::logic_error("exponent not Galois-invariant");
      v = x[i - 1];
    }
    out.coords.push_back(*v);
    out.fields.push_back(form_->slot_field(s));
  }
  return out;
}

} // namespace d4pole

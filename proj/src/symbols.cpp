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

#include "d4pole/symbols.hpp"

#include <stdexcept>

namespace d4pole {

std::string Sym::str() const {
  if (kind == Kind::Res) {
    std::string base;
    switch (field) {
      case FieldLabel::F: base = "gamma"; break;
      case FieldLabel::K: base = "delta"; break;
      case FieldLabel::E: base = "eps"; break;
    }
    return base + "[" + std::to_string(k) + "]";
  }
  std::string name = cls.trivial() ? "Z_" + to_string(field) : "L_" + to_string(field);
  std::string out = name;
  if (k == 1) out += "'";
  else if (k == 2) out += "''";
  else if (k > 2) out += "^(" + std::to_string(k) + ")";
  out += "(" + to_string(p);
  if (!cls.trivial()) out += "," + cls.str();
  out += ")";
  return out;
}

bool Sym::axiom_positive() const {
  if (kind == Kind::Res) return k == -1;  // class number formula
  return k == 0 && cls.trivial() && p > Rat(1);  // Euler product
}

bool Sym::axiom_nonzero() const {
  if (kind == Kind::Res) return k == -1;
  return k == 0;  // completed Hecke L nonvanishing at the points in play
}

Mono Mono::operator*(const Mono& o) const {
  Mono out = *this;
  for (const auto& [s, e] : o.powers) {
    int v = (out.powers[s] += e);
    if (v == 0) out.powers.erase(s);
  }
  return out;
}

Mono Mono::inverse() const {
  Mono out;
  for (const auto& [s, e] : powers) out.powers[s] = -e;
  return out;
}

std::string Mono::str() const {
  if (powers.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : powers) {
    if (!out.empty()) out += "*";
    out += s.str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) {
    Rat v = (out.terms_[m] += c);
    if (v == Rat(0)) out.terms_.erase(m);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_[m] = -c;
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      Mono m = m1 * m2;
      Rat v = (out.terms_[m] += c1 * c2);
      if (v == Rat(0)) out.terms_.erase(m);
    }
  return out;
}

Poly Poly::operator*(const Rat& c) const {
  Poly out;
  if (c == Rat(0)) return out;
  for (const auto& [m, v] : terms_) out.terms_[m] = v * c;
  return out;
}

bool Poly::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat Poly::rational_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_rational()) throw std::logic_error("polynomial is not a constant");
  return terms_.begin()->second;
}

Poly Poly::inverse() const {
  if (!invertible()) throw std::logic_error("only monomials invert");
  const auto& [m, c] = *terms_.begin();
  return Poly(m.inverse(), Rat(1) / c);
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string coeff = to_string(c);
    std::string piece;
    if (m.is_one()) piece = coeff;
    else if (c == Rat(1)) piece = m.str();
    else if (c == Rat(-1)) piece = "-" + m.str();
    else piece = coeff + "*" + m.str();
    if (!out.empty() && piece[0] != '-') out += " + ";
    else if (!out.empty()) { out += " - "; piece = piece.substr(1); }
    out += piece;
  }
  return out;
}

SignCheck certify(const Poly& p) {
  SignCheck out;
  if (p.is_zero()) {
    out.status = SignCheck::Status::Zero;
    out.reason = "zero polynomial";
    return out;
  }
  // A single monomial of axiom-nonzero symbols is nonzero outright.
  // Several monomials certify only when every one has a determined sign and
  // the signs agree.
  bool single = p.term_count() == 1;
  int common_sign = 0;
  std::vector<std::string> axioms;
  for (const auto& [m, c] : p.terms()) {
    int sign = c > Rat(0) ? 1 : -1;
    bool nonzero_ok = true;
    for (const auto& [s, e] : m.powers) {
      if (!s.axiom_nonzero()) {
        nonzero_ok = false;
        break;
      }
      if (e % 2 != 0) {
        if (s.axiom_positive()) {
          axioms.push_back(s.str() + " > 0");
        } else {
          sign = 0;  // nonzero but sign unknown
        }
      } else {
        axioms.push_back(s.str() + " != 0");
      }
    }
    if (!nonzero_ok) {
      out.status = SignCheck::Status::Undetermined;
      out.reason = "term " + m.str() + " involves symbols with no nonvanishing axiom";
      return out;
    }
    if (single) {
      out.status = SignCheck::Status::Nonzero;
      out.sign = sign;
      out.axioms = axioms;
      out.reason = "single monomial of axiom-nonzero symbols";
      return out;
    }
    if (sign == 0) {
      out.status = SignCheck::Status::Undetermined;
      out.reason = "term " + m.str() + " has undetermined sign";
      return out;
    }
    if (common_sign == 0) common_sign = sign;
    if (common_sign != sign) {
      out.status = SignCheck::Status::Undetermined;
      out.reason = "mixed signs across terms";
      return out;
    }
  }
  out.status = SignCheck::Status::Nonzero;
  out.sign = common_sign;
  out.axioms = axioms;
  out.reason = "all terms share sign " + std::string(common_sign > 0 ? "+" : "-");
  return out;
}

} // namespace d4pole

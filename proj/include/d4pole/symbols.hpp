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

#ifndef D4POLE_SYMBOLS_HPP
#define D4POLE_SYMBOLS_HPP

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "d4pole/characters.hpp"
#include "d4pole/rational.hpp"
#include "d4pole/rootdatum.hpp"

namespace d4pole {

// Formal transcendentals the Laurent engine computes with.
//
//   Res{L,k}        coefficient of (s-1)^k in the expansion of the completed
//                   zeta of L at its pole s=1 (k >= -1); gamma/delta/eps for
//                   L = F/K/E. Res{L,-1} > 0 by the class number formula.
//   Val{L,p,cls,k}  k-th Taylor coefficient of the completed L-function
//                   L_L(., cls) at the regular point p. Val{...,0} is nonzero
//                   (nonvanishing of completed Hecke L at the points we use),
//                   and positive for the trivial class at real p > 1.
struct Sym {
  enum class Kind { Res, Val };
  Kind kind = Kind::Res;
  FieldLabel field = FieldLabel::F;
  int k = 0;
  Rat p{0};          // Val only
  FiniteClass cls;   // Val only; normal form over its field

  static Sym res(FieldLabel f, int k) { return Sym{Kind::Res, f, k, Rat(0), {}}; }
  static Sym val(FieldLabel f, const Rat& p, const FiniteClass& cls, int k) {
    return Sym{Kind::Val, f, k, p, cls};
  }

  bool operator==(const Sym& o) const {
    return kind == o.kind && field == o.field && k == o.k && p == o.p && cls == o.cls;
  }
  bool operator<(const Sym& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (field != o.field) return field < o.field;
    if (k != o.k) return k < o.k;
    if (p != o.p) return p < o.p;
    return cls < o.cls;
  }
  std::string str() const;

  bool axiom_positive() const;
  bool axiom_nonzero() const;
};

// Laurent monomial in the symbols: integer exponents, possibly negative.
struct Mono {
  std::map<Sym, int> powers;

  Mono operator*(const Mono& o) const;
  Mono inverse() const;
  bool operator==(const Mono& o) const { return powers == o.powers; }
  bool operator<(const Mono& o) const {
    return std::lexicographical_compare(
        powers.begin(), powers.end(), o.powers.begin(), o.powers.end(),
        [](const auto& a, const auto& b) {
          if (a.first == b.first) return a.second < b.second;
          return a.first < b.first;
        });
  }
  std::string str() const;
  bool is_one() const { return powers.empty(); }
};

// Polynomial over Q in Laurent monomials; the coefficient domain of series.
class Poly {
public:
  Poly() = default;
  Poly(const Rat& c) { if (c != Rat(0)) terms_[Mono{}] = c; }
  Poly(const Mono& m, const Rat& c = Rat(1)) { if (c != Rat(0)) terms_[m] = c; }

  static Poly symbol(const Sym& s) { return Poly(Mono{{{s, 1}}}); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  // the rational value when the polynomial is a pure constant
  Rat rational_value() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  // inverse exists exactly for single-monomial polynomials
  bool invertible() const { return terms_.size() == 1; }
  Poly inverse() const;

  std::string str() const;

private:
  std::map<Mono, Rat> terms_;
};

// Sign certification under the declared axioms.
struct SignCheck {
  enum class Status { Zero, Nonzero, Undetermined };
  Status status = Status::Undetermined;
  int sign = 0;                       // +1 / -1 when known, 0 otherwise
  std::vector<std::string> axioms;    // axioms the certificate used
  std::string reason;
};

SignCheck certify(const Poly& p);

} // namespace d4pole

#endif

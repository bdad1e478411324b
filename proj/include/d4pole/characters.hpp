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

#ifndef D4POLE_CHARACTERS_HPP
#define D4POLE_CHARACTERS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "d4pole/rootdatum.hpp"
#include "d4pole/weyl.hpp"

namespace d4pole {

// Which relation class the inducing Hecke character chi belongs to. The pole
// analysis branches on relations, never on values:
//   Id         chi = 1
//   ClassField chi = chi_E of the form (Id / chi_K / cubic chi_E)
//   Quad       chi^2 = 1, chi distinct from Id and from the class-field character
enum class ChiKind { Id, ClassField, Quad };

std::string to_string(ChiKind k);

struct Scenario {
  FormKind form = FormKind::Split;
  ChiKind chi = ChiKind::Id;

  bool operator==(const Scenario&) const = default;
  auto operator<=>(const Scenario&) const = default;
};

// Element of the formal abelian group generated by chi, chi_K, chi_E and two
// auxiliary generic quadratic characters eta1, eta2 (used by the CAP search),
// subject to the relations declared by a scenario. Kept in normal form.
class FiniteClass {
public:
  FiniteClass() = default;
  // powers of (chi, chi_K, chi_E, eta1, eta2)
  static FiniteClass chi(int power = 1) { return FiniteClass(power, 0, 0, 0, 0); }
  static FiniteClass chi_K() { return FiniteClass(0, 1, 0, 0, 0); }
  static FiniteClass chi_E() { return FiniteClass(0, 0, 1, 0, 0); }
  static FiniteClass eta1() { return FiniteClass(0, 0, 0, 1, 0); }
  static FiniteClass eta2() { return FiniteClass(0, 0, 0, 0, 1); }

  FiniteClass operator*(const FiniteClass& o) const;
  FiniteClass inverse() const;
  FiniteClass power(int k) const;

  // Normal form under the scenario's relations. chi_E requests on the
  // non-Galois cubic form throw; chi_K outside QuadTimesF throws.
  FiniteClass normalized(const Scenario& scen) const;
  // Class of the character composed with the norm from field L, normalized:
  // the class-field generator of L dies (chi_K over K, chi_E over E).
  FiniteClass over(const Scenario& scen, FieldLabel field) const;

  bool trivial() const { return a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0 && e_ == 0; }
  bool is_quadratic() const;  // class^2 normalizes to 1 absent extra relations

  bool operator==(const FiniteClass&) const = default;
  auto operator<=>(const FiniteClass&) const = default;

  int chi_power() const { return a_; }
  // rename eta1 <-> eta2 (the generic generators are interchangeable)
  FiniteClass with_swapped_etas() const { return FiniteClass(a_, b_, c_, e_, d_); }
  std::string str() const;  // "1", "chi", "chi^2", "chi*chi_K", "eta1*eta2", ...

  // CLI syntax: id | chi_E | chi_K | quad | quad*chi_K | products with '*'
  static FiniteClass parse(const std::string& text);

private:
  FiniteClass(int a, int b, int c, int d, int e) : a_(a), b_(b), c_(c), d_(d), e_(e) {}
  int a_ = 0, b_ = 0, c_ = 0, d_ = 0, e_ = 0;
};

// Scenario for the inducing character "chi = the given kind"; maps the kind
// to the concrete FiniteClass generator.
FiniteClass inducing_class(const Scenario& scen);
ChiKind parse_chi(const EtaleForm& form, const std::string& text);

// A character of the maximal torus: per absolute coordinate an exponent
// (linear form in the restricted lambda-coordinates, or its s-line /
// specialized image) and a power of the inducing character chi.
class TorusCharacter {
public:
  enum class Mode { General, SLine, At };

  static TorusCharacter inducing(const EtaleForm& form, ChiKind chi, Mode mode);

  const EtaleForm& form() const { return *form_; }
  Scenario scenario() const { return {form_->kind(), chi_}; }
  Mode mode() const { return mode_; }
  Rat anchor() const { return s0_; }

  // w^{-1} . chi_s : transport exponents and chi powers through w
  TorusCharacter acted(const WeylWord& w) const;
  TorusCharacter specialized(const Rat& s0) const;

  // exponent of absolute coordinate i (1..4)
  const LinForm& exp_general(int i) const { return exps_[i - 1]; }
  Affine exp_sline(int i) const;
  Rat exp_at(int i) const;  // requires Mode::At
  int chi_power(int i) const { return chi_pow_[i - 1]; }

  // Per restricted slot: (exponent, finite class over the slot field).
  // Galois consistency across the slot is asserted. Only for SLine/At modes
  // is the exponent affine/rational.
  struct SlotData {
    FieldLabel field;
    Affine exp;          // affine in s (constant when specialized)
    FiniteClass cls;     // chi^m reduced over the slot field
    int chi_pow;         // raw chi power before reduction, for rendering
  };
  std::vector<SlotData> slots() const;

  // equality of specialized characters: the ~_{s0} relation
  bool same_character(const TorusCharacter& o) const;
  // stable key for grouping
  std::string key() const;

  // paper-style rendering: chi(t2^2/Nm(t1)) |t2|^2s / |t1|_E^(s+1/2)
  std::string str() const;

  // Real part in the basis of restricted simple roots (norm-type slots
  // flagged by field). Requires Mode::At.
  struct ExponentVector {
    std::vector<Rat> coords;          // one per restricted slot, root basis
    std::vector<FieldLabel> fields;   // slot fields for Nm flags
    bool all_negative() const;
    std::string str() const;
  };
  ExponentVector real_exponent() const;

private:
  const EtaleForm* form_ = nullptr;
  ChiKind chi_ = ChiKind::Id;
  Mode mode_ = Mode::General;
  Rat s0_{0};
  std::array<LinForm, 4> exps_;
  std::array<int, 4> chi_pow_{};
};

} // namespace d4pole

#endif

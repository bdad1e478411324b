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

#ifndef D4POLE_POLES_HPP
#define D4POLE_POLES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "d4pole/gk.hpp"

namespace d4pole {

// One summand of the constant term: the coset representative, the transported
// character w^{-1}.chi_s, and the scalar the operator multiplies the spherical
// vector by.
struct ConstantTermRow {
  WeylWord word;
  TorusCharacter character;
  GKFactor gk;
};

struct ConstantTerm {
  Scenario scen;
  std::vector<ConstantTermRow> rows;  // one per coset representative
};

ConstantTerm constant_term(const EtaleForm& form, ChiKind chi);

// Sigma(form, chi, s0, m): representatives whose GK factor has a pole of
// order >= m at s0, partitioned into classes of the "same specialized
// character" relation.
struct SigmaSet {
  Scenario scen;
  Rat s0;
  int m = 1;
  std::vector<WeylWord> members;
  std::vector<std::vector<WeylWord>> classes;
};

SigmaSet sigma(const EtaleForm& form, ChiKind chi, const Rat& s0, int m);

// Laurent analysis of the spherical constant term, class by class.
struct ClassSum {
  std::vector<WeylWord> members;
  TorusCharacter character;   // specialized representative character
  int max_member_order = 0;   // largest single-factor pole order in the class
  int sum_order = 0;          // exact order of the summed expansion (<= 0 fine)
  Poly leading;
  SignCheck leading_check;
};

struct SphericalAnalysis {
  Scenario scen;
  Rat s0;
  int order = 0;  // max class sum order, floored at 0
  std::vector<ClassSum> classes;
  std::vector<std::string> assumptions;
};

// Expands every class of coset representatives; uses the unramified
// functional-equation identifications (exact for a spherical section).
SphericalAnalysis spherical_order(const EtaleForm& form, ChiKind chi, const Rat& s0);

// Descent pairs of `word` whose peeled letter fixes the transported character
// at s0: the stabilization hypothesis of the rank-one -1 scalar.
struct StabilizedDescent {
  WeylWord prefix;
  int letter;
};
std::vector<StabilizedDescent> descent_pairs(const WeylWord& word, ChiKind chi, const Rat& s0);

// Pairing cancellation at level m. Keys-Shahidi pairs peel one relative
// letter; functional-equation pairs collapse a longer right factor whose GK
// ratio has limit -1 (trivial-class part computed, nontrivial part matched
// into dual pairs covered by the epsilon-product facts).
struct MatchedPair {
  WeylWord shorter;
  WeylWord longer;
  enum class Rule { KeysShahidi, FunctionalEquation } rule = Rule::KeysShahidi;
  std::string justification;
};

struct PairingResult {
  SigmaSet sigma;
  bool all_matched = false;
  std::vector<MatchedPair> pairs;
  std::vector<std::string> unmatched_classes;
  int reduced_bound = 0;  // m-1 when fully matched, m otherwise
  std::vector<std::string> assumptions;
};

PairingResult pairing_cancellation(const EtaleForm& form, ChiKind chi, const Rat& s0, int m,
                                   bool allow_functional_equation_rule);

// Attainment witness: a singleton class, or a class whose spherical sum is
// certified nonzero at order m.
struct Witness {
  std::vector<WeylWord> members;
  std::string kind;  // "singleton" / "certified class sum"
  Poly leading;
  std::vector<std::string> axioms;
};
std::optional<Witness> non_cancellation_witness(const EtaleForm& form, ChiKind chi, const Rat& s0,
                                                int m);

enum class BoundMode { Trivial, Unconditional, Conjectural };
std::string to_string(BoundMode m);

enum class Attained { Yes, Assumed, NoPole };

struct PoleVerdict {
  Scenario scen;
  Rat s0;
  int trivial_bound = 0;
  int unconditional_bound = 0;
  int conjectural_order = 0;
  Attained attained = Attained::NoPole;
  std::vector<std::string> assumptions;
  std::vector<std::string> trace;
  bool external_reference = false;  // attainment delegated to the literature
};

PoleVerdict pole_verdict(const EtaleForm& form, ChiKind chi, const Rat& s0);

struct PoleTableCell {
  FormKind form;
  ChiKind chi;
  Rat s0;
  int value = 0;
};
// all (form, chi, s0) cells for the requested mode; chi_E skipped on the
// non-Galois form
std::vector<PoleTableCell> pole_table(BoundMode mode);

// Langlands square-integrability of the residual representation at a triple
// with a pole.
struct SurvivingClass {
  std::vector<WeylWord> members;
  TorusCharacter::ExponentVector exponent;
  bool certified = false;  // leading certified nonzero (else merely possible)
  bool all_negative = false;
};

struct SquareIntegrability {
  Scenario scen;
  Rat s0;
  int order = 0;
  bool square_integrable = false;
  std::vector<SurvivingClass> surviving;
  std::vector<std::string> notes;
};

SquareIntegrability square_integrable(const EtaleForm& form, ChiKind chi, const Rat& s0);

// the triples failing the criterion, over all forms/characters/anchors
std::vector<SquareIntegrability> square_integrability_exceptions();

} // namespace d4pole

#endif

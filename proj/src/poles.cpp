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

#include "d4pole/poles.hpp"

#include <algorithm>
#include <functional>

namespace d4pole {

std::string to_string(BoundMode m) {
  switch (m) {
    case BoundMode::Trivial: return "trivial";
    case BoundMode::Unconditional: return "unconditional";
    case BoundMode::Conjectural: return "conjectural";
  }
  return "?";
}

ConstantTerm constant_term(const EtaleForm& form, ChiKind chi) {
  ConstantTerm ct;
  ct.scen = {form.kind(), chi};
  TorusCharacter chi_s = TorusCharacter::inducing(form, chi, TorusCharacter::Mode::SLine);
  for (const WeylWord& w : enumerate_coset_reps(form))
    ct.rows.push_back({w, chi_s.acted(w), gk_sline(w, chi)});
  return ct;
}

SigmaSet sigma(const EtaleForm& form, ChiKind chi, const Rat& s0, int m) {
  if (m < 1) throw std::invalid_argument("sigma wants m >= 1");
  SigmaSet out;
  out.scen = {form.kind(), chi};
  out.s0 = s0;
  out.m = m;
  ConstantTerm ct = constant_term(form, chi);
  std::vector<std::pair<std::string, std::vector<WeylWord>>> classes;
  for (const auto& row : ct.rows) {
    if (row.gk.expr.order_at(out.scen, s0) < m) continue;
    out.members.push_back(row.word);
    std::string key = row.character.specialized(s0).key();
    auto it = std::find_if(classes.begin(), classes.end(),
                           [&](const auto& c) { return c.first == key; });
    if (it == classes.end()) classes.push_back({key, {row.word}});
    else it->second.push_back(row.word);
  }
  for (auto& [k, v] : classes) out.classes.push_back(std::move(v));
  return out;
}

namespace {

// expand the class sum with growing precision until its order is determined
struct ExpandedClass {
  LaurentSeries sum;
  int order = 0;
  bool determined = false;
};

ExpandedClass expand_class_sum(const Scenario& scen, const Rat& s0,
                               const std::vector<const GKFactor*>& gks) {
  ExpandedClass out;
  for (int nterms = 6; nterms <= 18; nterms += 3) {
    bool first = true;
    LaurentSeries sum;
    for (const GKFactor* g : gks) {
      LaurentSeries s = g->expr.expand_at(scen, s0, nterms, /*unramified_fe=*/true);
      sum = first ? s : sum + s;
      first = false;
    }
    try {
      out.order = sum.order();
      out.sum = sum;
      out.determined = true;
      return out;
    } catch (const InsufficientDepth&) {
      out.sum = sum;  // keep the deepest attempt
    }
  }
  return out;  // vanishes through the probed window; treated as order <= floor
}

std::vector<std::string> scenario_assumptions(const Scenario& scen) {
  std::vector<std::string> out;
  out.push_back("spherical vector generates the degenerate principal series "
                "(known at finite places off the cubic-field case; conjectural at "
                "archimedean ones)");
  if (scen.chi != ChiKind::Id)
    out.push_back("unramified functional-equation identifications L(p,c)=L(1-p,c^-1); "
                  "exact for everywhere-unramified chi, else supplied by the rank-one "
                  "scalar facts");
  return out;
}

} // namespace

SphericalAnalysis spherical_order(const EtaleForm& form, ChiKind chi, const Rat& s0) {
  SphericalAnalysis out;
  out.scen = {form.kind(), chi};
  out.s0 = s0;
  out.assumptions = scenario_assumptions(out.scen);

  ConstantTerm ct = constant_term(form, chi);
  // partition all rows by the specialized character
  std::vector<std::pair<std::string, std::vector<const ConstantTermRow*>>> parts;
  for (const auto& row : ct.rows) {
    std::string key = row.character.specialized(s0).key();
    auto it = std::find_if(parts.begin(), parts.end(),
                           [&](const auto& c) { return c.first == key; });
    if (it == parts.end()) parts.push_back({key, {&row}});
    else it->second.push_back(&row);
  }

  int max_order = 0;
  for (auto& [key, rows] : parts) {
    ClassSum cs{{}, rows.front()->character.specialized(s0), 0, 0, {}, {}};
    std::vector<const GKFactor*> gks;
    for (const ConstantTermRow* r : rows) {
      cs.members.push_back(r->word);
      gks.push_back(&r->gk);
      cs.max_member_order = std::max(cs.max_member_order, r->gk.expr.order_at(out.scen, s0));
    }
    if (cs.max_member_order <= 0) {
      // regular class; no pole bookkeeping needed
      cs.sum_order = cs.max_member_order;
      out.classes.push_back(std::move(cs));
      continue;
    }
    ExpandedClass ec = expand_class_sum(out.scen, s0, gks);
    if (!ec.determined)
      throw std::logic_error("class sum order not determined at depth cap; class " + key);
    cs.sum_order = ec.order;
    if (ec.order >= 1) {
      cs.leading = ec.sum.leading();
      cs.leading_check = certify(cs.leading);
    }
    max_order = std::max(max_order, cs.sum_order);
    out.classes.push_back(std::move(cs));
  }
  out.order = std::max(max_order, 0);
  return out;
}

std::vector<StabilizedDescent> descent_pairs(const WeylWord& word, ChiKind chi, const Rat& s0) {
  std::vector<StabilizedDescent> out;
  TorusCharacter chi_s =
      TorusCharacter::inducing(word.form(), chi, TorusCharacter::Mode::SLine);
  TorusCharacter target = chi_s.acted(word).specialized(s0);
  for (const Descent& d : right_descents(word)) {
    // r_a fixes prefix^{-1}.chi_{s0} exactly when the full transported
    // characters of prefix and word coincide at s0
    TorusCharacter via_prefix = chi_s.acted(d.prefix).specialized(s0);
    if (via_prefix.same_character(target)) out.push_back({d.prefix, d.letter});
  }
  return out;
}

namespace {

// Functional-equation -1 test for a candidate pair (shorter, longer):
// J(longer)/J(shorter) must be regular at s0 with leading coefficient exactly
// -1 once dual Val pairs are identified (the epsilon-product facts).
std::optional<std::string> fe_rule_justification(const Scenario& scen, const GKFactor& shorter,
                                                 const GKFactor& longer, const Rat& s0) {
  LExpr ratio = longer.expr * shorter.expr.inverse();
  if (ratio.order_at(scen, s0) != 0) return std::nullopt;
  LaurentSeries s = ratio.expand_at(scen, s0, 4, /*unramified_fe=*/true);
  Poly lead;
  try {
    lead = s.coeff(0);
  } catch (const InsufficientDepth&) {
    return std::nullopt;
  }
  if (!lead.is_rational() || lead.rational_value() != Rat(-1)) return std::nullopt;
  return "J-ratio " + ratio.str() + " -> -1 at s0=" + to_string(s0) +
         " (dual L-value pairs collapsed by the epsilon-product facts)";
}

// perfect matching search on a small class
bool perfect_matching(const std::vector<int>& nodes,
                      const std::function<std::optional<MatchedPair>(int, int)>& edge,
                      std::vector<MatchedPair>& out) {
  if (nodes.empty()) return true;
  if (nodes.size() % 2 != 0) return false;
  int first = nodes.front();
  for (size_t i = 1; i < nodes.size(); ++i) {
    auto pair = edge(first, nodes[i]);
    if (!pair) continue;
    std::vector<int> rest;
    for (size_t j = 1; j < nodes.size(); ++j)
      if (j != i) rest.push_back(nodes[j]);
    std::vector<MatchedPair> sub;
    if (perfect_matching(rest, edge, sub)) {
      out.push_back(*pair);
      out.insert(out.end(), sub.begin(), sub.end());
      return true;
    }
  }
  return false;
}

} // namespace

PairingResult pairing_cancellation(const EtaleForm& form, ChiKind chi, const Rat& s0, int m,
                                   bool allow_functional_equation_rule) {
  PairingResult out;
  out.sigma = sigma(form, chi, s0, m);
  out.reduced_bound = m;
  Scenario scen{form.kind(), chi};

  // the functional-equation rule leans on the rank-one scalar facts, which at
  // the archimedean places of the Id/class-field scenarios rest on the
  // spherical-generation conjecture; it is never available for generic quad
  bool fe_ok = allow_functional_equation_rule && chi != ChiKind::Quad;
  if (fe_ok)
    out.assumptions.push_back(
        "rank-one scalar facts R(w'') = Id on the transported image (archimedean part "
        "conditional on spherical generation)");

  bool all = true;
  for (const auto& cls : out.sigma.classes) {
    std::vector<int> nodes(cls.size());
    for (size_t i = 0; i < cls.size(); ++i) nodes[static_cast<int>(i)] = static_cast<int>(i);
    std::vector<GKFactor> gks;
    gks.reserve(cls.size());
    for (const auto& w : cls) gks.push_back(gk_sline(w, chi));

    auto edge = [&](int i, int j) -> std::optional<MatchedPair> {
      const WeylWord& a = cls[static_cast<size_t>(i)];
      const WeylWord& b = cls[static_cast<size_t>(j)];
      const WeylWord& shorter = a.length() <= b.length() ? a : b;
      const WeylWord& longer = a.length() <= b.length() ? b : a;
      const GKFactor& gk_short = a.length() <= b.length() ? gks[static_cast<size_t>(i)]
                                                          : gks[static_cast<size_t>(j)];
      const GKFactor& gk_long = a.length() <= b.length() ? gks[static_cast<size_t>(j)]
                                                         : gks[static_cast<size_t>(i)];
      if (longer.length() == shorter.length() + 1) {
        for (const Descent& d : right_descents(longer))
          if (d.prefix == shorter)
            return MatchedPair{shorter, longer, MatchedPair::Rule::KeysShahidi,
                               "single relative letter " + std::to_string(d.letter) +
                                   " fixes the transported character: rank-one scalar -1"};
      }
      if (fe_ok && longer.length() > shorter.length() + 1) {
        // length additivity of the right factor
        const auto& grp = RelativeWeylGroup::get(form);
        WeylWord rf = grp.canonical(shorter.inverse_matrix() * longer.matrix());
        if (shorter.length() + rf.length() != longer.length()) return std::nullopt;
        if (auto just = fe_rule_justification(scen, gk_short, gk_long, s0))
          return MatchedPair{shorter, longer, MatchedPair::Rule::FunctionalEquation, *just};
      }
      return std::nullopt;
    };

    std::vector<MatchedPair> pairs;
    if (perfect_matching(nodes, edge, pairs)) {
      out.pairs.insert(out.pairs.end(), pairs.begin(), pairs.end());
    } else {
      all = false;
      std::string desc;
      for (const auto& w : cls) desc += (desc.empty() ? "" : " ") + ("[" + w.str() + "]");
      out.unmatched_classes.push_back(desc);
    }
  }
  out.all_matched = all && !out.sigma.members.empty();
  if (out.all_matched) out.reduced_bound = m - 1;
  return out;
}

std::optional<Witness> non_cancellation_witness(const EtaleForm& form, ChiKind chi, const Rat& s0,
                                                int m) {
  SigmaSet sig = sigma(form, chi, s0, m);
  Scenario scen{form.kind(), chi};
  // singletons first
  for (const auto& cls : sig.classes) {
    if (cls.size() != 1) continue;
    GKFactor g = gk_sline(cls.front(), chi);
    if (g.expr.order_at(scen, s0) < m) continue;
    LaurentSeries s = g.expr.expand_at(scen, s0, 4, true);
    Witness w{cls, "singleton", s.leading(), {}};
    SignCheck chk = certify(w.leading);
    if (chk.status == SignCheck::Status::Nonzero) {
      w.axioms = chk.axioms;
      return w;
    }
  }
  // certified class sums at order exactly m
  SphericalAnalysis sph = spherical_order(form, chi, s0);
  for (const auto& cs : sph.classes) {
    if (cs.sum_order != m) continue;
    if (cs.leading_check.status != SignCheck::Status::Nonzero) continue;
    return Witness{cs.members, "certified class sum", cs.leading, cs.leading_check.axioms};
  }
  return std::nullopt;
}

namespace {

int trivial_bound(const EtaleForm& form, ChiKind chi, const Rat& s0) {
  Scenario scen{form.kind(), chi};
  int best = 0;
  for (const WeylWord& w : enumerate_coset_reps(form))
    best = std::max(best, gk_sline(w, chi).expr.order_at(scen, s0));
  return best;
}

bool is_external_reference(const EtaleForm& form, ChiKind chi, const Rat& s0) {
  // the class-field character at 3/2 is settled in the literature, not here
  return chi == ChiKind::ClassField && s0 == Rat(3, 2) && form.has_class_character();
}

} // namespace

PoleVerdict pole_verdict(const EtaleForm& form, ChiKind chi, const Rat& s0) {
  PoleVerdict v;
  v.scen = {form.kind(), chi};
  v.s0 = s0;
  v.trivial_bound = trivial_bound(form, chi, s0);
  v.unconditional_bound = v.trivial_bound;
  v.conjectural_order = v.trivial_bound;
  if (v.trivial_bound == 0) {
    v.attained = Attained::NoPole;
    v.trace.push_back("no GK factor has a pole here");
    return v;
  }
  v.trace.push_back("trivial bound " + std::to_string(v.trivial_bound) +
                    " = max GK pole order over coset representatives");

  // unconditional: one Keys-Shahidi drop at the top order
  PairingResult ks = pairing_cancellation(form, chi, s0, v.trivial_bound, false);
  if (ks.all_matched) {
    v.unconditional_bound = v.trivial_bound - 1;
    v.trace.push_back("top-order classes cancel in Keys-Shahidi pairs; bound drops to " +
                      std::to_string(v.unconditional_bound));
    for (const auto& p : ks.pairs)
      v.trace.push_back("  pair [" + p.shorter.str() + "] ~ [" + p.longer.str() + "]: " +
                        p.justification);
  }

  // conjectural: exact spherical Laurent analysis with the unramified
  // functional-equation identifications
  SphericalAnalysis sph = spherical_order(form, chi, s0);
  v.conjectural_order = std::min(sph.order, v.unconditional_bound);
  if (sph.order < v.unconditional_bound)
    v.trace.push_back("class-sum Laurent analysis lowers the order to " +
                      std::to_string(sph.order));
  for (const auto& cs : sph.classes) {
    if (cs.max_member_order <= 0) continue;
    std::string line = "  class {";
    for (size_t i = 0; i < cs.members.size(); ++i)
      line += (i ? " " : "") + ("[" + cs.members[i].str() + "]");
    line += "}: member order " + std::to_string(cs.max_member_order) + ", sum order " +
            std::to_string(cs.sum_order);
    v.trace.push_back(line);
  }
  v.assumptions = sph.assumptions;

  if (v.conjectural_order == 0) {
    v.attained = Attained::NoPole;
    v.trace.push_back("holomorphic at this point");
    return v;
  }

  // attainment
  bool certified = false;
  for (const auto& cs : sph.classes)
    if (cs.sum_order == v.conjectural_order &&
        cs.leading_check.status == SignCheck::Status::Nonzero)
      certified = true;
  if (certified) {
    v.attained = Attained::Yes;
    v.trace.push_back("attained: a class sum at the final order is certified nonzero");
    if (chi == ChiKind::Quad)
      v.assumptions.push_back("for ramified quadratic chi the pole is realized by a "
                              "ramified section (local construction taken as given)");
  } else {
    v.attained = Attained::Assumed;
    v.external_reference = is_external_reference(form, chi, s0);
    v.assumptions.push_back(v.external_reference
                                ? "attainment at this triple follows the literature on the "
                                  "class-field character at 3/2"
                                : "attainment not certified by the positivity axioms");
  }
  if (is_external_reference(form, chi, s0)) v.external_reference = true;
  return v;
}

std::vector<PoleTableCell> pole_table(BoundMode mode) {
  std::vector<PoleTableCell> cells;
  for (FormKind fk : {FormKind::Split, FormKind::QuadTimesF, FormKind::CubicGalois,
                      FormKind::CubicNonGalois}) {
    const EtaleForm& form = EtaleForm::get(fk);
    for (ChiKind chi : {ChiKind::Id, ChiKind::ClassField, ChiKind::Quad}) {
      if (chi == ChiKind::ClassField && !form.has_class_character()) continue;
      for (const Rat& s0 : {Rat(1, 2), Rat(3, 2), Rat(5, 2)}) {
        PoleVerdict v = pole_verdict(form, chi, s0);
        int value = 0;
        switch (mode) {
          case BoundMode::Trivial: value = v.trivial_bound; break;
          case BoundMode::Unconditional: value = v.unconditional_bound; break;
          case BoundMode::Conjectural: value = v.conjectural_order; break;
        }
        cells.push_back({fk, chi, s0, value});
      }
    }
  }
  return cells;
}

SquareIntegrability square_integrable(const EtaleForm& form, ChiKind chi, const Rat& s0) {
  SquareIntegrability out;
  out.scen = {form.kind(), chi};
  out.s0 = s0;
  PoleVerdict v = pole_verdict(form, chi, s0);
  out.order = v.conjectural_order;
  if (out.order <= 0)
    throw std::invalid_argument("no pole at this triple; square integrability undefined");

  SphericalAnalysis sph = spherical_order(form, chi, s0);
  bool some_nonneg_certified = false;
  bool all_negative = true;
  for (const auto& cs : sph.classes) {
    if (cs.sum_order != out.order) continue;  // cancels or subleading: not surviving
    SurvivingClass sc;
    sc.members = cs.members;
    sc.exponent = cs.character.real_exponent();
    sc.certified = cs.leading_check.status == SignCheck::Status::Nonzero;
    sc.all_negative = sc.exponent.all_negative();
    if (!sc.all_negative) {
      all_negative = false;
      if (sc.certified) some_nonneg_certified = true;
    }
    out.surviving.push_back(std::move(sc));
  }
  if (all_negative) {
    out.square_integrable = true;
    out.notes.push_back("all surviving exponents strictly negative in the root basis");
  } else if (some_nonneg_certified) {
    out.square_integrable = false;
    out.notes.push_back("a certified surviving class has a non-negative exponent coordinate");
  } else {
    out.square_integrable = false;
    out.notes.push_back("a possibly-surviving class has a non-negative exponent coordinate");
  }
  return out;
}

std::vector<SquareIntegrability> square_integrability_exceptions() {
  std::vector<SquareIntegrability> out;
  for (FormKind fk : {FormKind::Split, FormKind::QuadTimesF, FormKind::CubicGalois,
                      FormKind::CubicNonGalois}) {
    const EtaleForm& form = EtaleForm::get(fk);
    for (ChiKind chi : {ChiKind::Id, ChiKind::ClassField, ChiKind::Quad}) {
      if (chi == ChiKind::ClassField && !form.has_class_character()) continue;
      if (fk == FormKind::Split && chi == ChiKind::ClassField) continue;  // same as Id
      for (const Rat& s0 : {Rat(1, 2), Rat(3, 2), Rat(5, 2)}) {
        PoleVerdict v = pole_verdict(form, chi, s0);
        if (v.conjectural_order <= 0) continue;
        SquareIntegrability si = square_integrable(form, chi, s0);
        if (!si.square_integrable) out.push_back(std::move(si));
      }
    }
  }
  return out;
}

} // namespace d4pole

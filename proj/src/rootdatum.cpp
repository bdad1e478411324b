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

#include "d4pole/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace d4pole {

const LatticeMat& cartan_d4() {
  static const LatticeMat a = [] {
    LatticeMat m;
    m << 2, -1, 0, 0,
        -1, 2, -1, -1,
         0, -1, 2, 0,
         0, -1, 0, 2;
    return m;
  }();
  return a;
}

bool is_positive_root_vec(const Root& r) {
  bool nonzero = false;
  for (int i = 0; i < 4; ++i) {
    if (r[i] < 0) return false;
    if (r[i] != 0) nonzero = true;
  }
  return nonzero;
}

bool is_negative_root_vec(const Root& r) { return is_positive_root_vec(-r); }

const std::vector<Root>& positive_roots_d4() {
  // Closure of the simple roots under simple reflections, positives only,
  // sorted by (height, lex). Derived, not hard-coded.
  static const std::vector<Root> roots = [] {
    std::set<std::array<int, 4>> seen;
    std::vector<Root> work;
    for (int i = 0; i < 4; ++i) {
      Root r = Root::Zero();
      r[i] = 1;
      work.push_back(r);
      seen.insert({r[0], r[1], r[2], r[3]});
    }
    for (size_t k = 0; k < work.size(); ++k) {
      Root r = work[k];
      for (int i = 1; i <= 4; ++i) {
        Root img = simple_reflection(i) * r;
        if (!is_positive_root_vec(img)) continue;
        std::array<int, 4> key{img[0], img[1], img[2], img[3]};
        if (seen.insert(key).second) work.push_back(img);
      }
    }
    std::sort(work.begin(), work.end(), [](const Root& x, const Root& y) {
      int hx = x.sum(), hy = y.sum();
      if (hx != hy) return hx < hy;
      return std::lexicographical_compare(x.data(), x.data() + 4, y.data(), y.data() + 4);
    });
    return work;
  }();
  return roots;
}

Root highest_root_d4() {
  Root r;
  r << 1, 2, 1, 1;
  return r;
}

const LatticeMat& simple_reflection(int index) {
  static const std::array<LatticeMat, 4> refl = [] {
    std::array<LatticeMat, 4> out;
    for (int i = 0; i < 4; ++i) {
      LatticeMat m = LatticeMat::Identity();
      // s_i(v) = v - <v, alpha_i^vee> alpha_i; only coordinate i moves.
      for (int j = 0; j < 4; ++j) m(i, j) -= cartan_d4()(i, j);
      out[i] = m;
    }
    return out;
  }();
  if (index < 1 || index > 4) throw std::invalid_argument("simple reflection index out of range");
  return refl[index - 1];
}

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::Split: return "split";
    case FormKind::QuadTimesF: return "quad";
    case FormKind::CubicGalois: return "cubic-galois";
    case FormKind::CubicNonGalois: return "cubic-nongalois";
  }
  return "?";
}

FormKind parse_form(const std::string& s) {
  if (s == "split") return FormKind::Split;
  if (s == "quad" || s == "fxk") return FormKind::QuadTimesF;
  if (s == "cubic-galois" || s == "cubic") return FormKind::CubicGalois;
  if (s == "cubic-nongalois" || s == "nongalois") return FormKind::CubicNonGalois;
  throw std::invalid_argument("unknown form: " + s);
}

std::string to_string(FieldLabel f) {
  switch (f) {
    case FieldLabel::F: return "F";
    case FieldLabel::K: return "K";
    case FieldLabel::E: return "E";
  }
  return "?";
}

namespace {

std::array<int, 5> perm_identity() { return {0, 1, 2, 3, 4}; }

std::array<int, 5> make_perm(int a, int b, int c) {
  // images of nodes 1,3,4 (node 2 fixed)
  std::array<int, 5> p = perm_identity();
  p[1] = a;
  p[3] = b;
  p[4] = c;
  return p;
}

std::array<int, 5> compose(const std::array<int, 5>& f, const std::array<int, 5>& g) {
  std::array<int, 5> h{};
  for (int i = 1; i <= 4; ++i) h[i] = f[g[i]];
  h[0] = 0;
  return h;
}

} // namespace

EtaleForm::EtaleForm(FormKind kind) : kind_(kind) {
  std::vector<std::array<int, 5>> gens;
  switch (kind) {
    case FormKind::Split:
      break;
    case FormKind::QuadTimesF:
      gens.push_back(make_perm(1, 4, 3));  // swap 3,4
      break;
    case FormKind::CubicGalois:
      gens.push_back(make_perm(3, 4, 1));  // 1->3->4->1
      break;
    case FormKind::CubicNonGalois:
      gens.push_back(make_perm(3, 4, 1));
      gens.push_back(make_perm(3, 1, 4));  // swap 1,3
      break;
  }

  // group closure
  std::set<std::array<int, 5>> group{perm_identity()};
  std::vector<std::array<int, 5>> work{perm_identity()};
  for (size_t i = 0; i < work.size(); ++i)
    for (const auto& g : gens) {
      auto h = compose(g, work[i]);
      if (group.insert(h).second) work.push_back(h);
    }
  action_order_ = static_cast<int>(group.size());
  for (const auto& p : group)
    if (p != perm_identity()) action_.push_back(p);

  // restricted coordinate slots
  slot_[0] = -1;
  switch (kind) {
    case FormKind::Split:
      coord_dim_ = 4;
      for (int i = 1; i <= 4; ++i) slot_[i] = i - 1;
      slot_field_ = {FieldLabel::F, FieldLabel::F, FieldLabel::F, FieldLabel::F};
      break;
    case FormKind::QuadTimesF:
      coord_dim_ = 3;
      slot_[1] = 0; slot_[2] = 1; slot_[3] = 2; slot_[4] = 2;
      slot_field_ = {FieldLabel::F, FieldLabel::F, FieldLabel::K};
      break;
    case FormKind::CubicGalois:
    case FormKind::CubicNonGalois:
      coord_dim_ = 2;
      slot_[1] = 0; slot_[2] = 1; slot_[3] = 0; slot_[4] = 0;
      slot_field_ = {FieldLabel::E, FieldLabel::F};
      break;
  }

  // orbits of positive roots under the action, extended linearly
  const auto& pos = positive_roots_d4();
  auto index_of = [&](const Root& r) {
    for (size_t i = 0; i < pos.size(); ++i)
      if (pos[i] == r) return static_cast<int>(i);
    throw std::logic_error("not a positive root");
  };
  std::vector<bool> done(pos.size(), false);
  const Root omega = highest_root_d4();
  for (size_t i = 0; i < pos.size(); ++i) {
    if (done[i]) continue;
    RootOrbit orb;
    std::set<int> members{static_cast<int>(i)};
    std::vector<int> stack{static_cast<int>(i)};
    while (!stack.empty()) {
      int j = stack.back();
      stack.pop_back();
      for (const auto& p : action_) {
        Root img;
        for (int k = 1; k <= 4; ++k) img[p[k] - 1] = pos[j][k - 1];
        int jj = index_of(img);
        if (members.insert(jj).second) stack.push_back(jj);
      }
    }
    orb.members.assign(members.begin(), members.end());
    for (int m : orb.members) done[m] = true;
    switch (orb.members.size()) {
      case 1: orb.field = FieldLabel::F; break;
      case 2: orb.field = FieldLabel::K; break;
      case 3: orb.field = FieldLabel::E; break;
      default: throw std::logic_error("orbit size out of range");
    }
    // det power <omega, alpha^vee> = sum_t c_t <omega, alpha_t^vee>; equal across the orbit
    const auto& a = cartan_d4();
    std::optional<int> power;
    for (int m : orb.members) {
      int k = 0;
      for (int t = 0; t < 4; ++t) {
        int pair_t = 0;
        for (int u = 0; u < 4; ++u) pair_t += omega[u] * a(u, t);
        k += pos[m][t] * pair_t;
      }
      if (power && *power != k) throw std::logic_error("det power differs within orbit");
      power = k;
    }
    orb.det_power = *power;
    orbits_.push_back(orb);
  }
  for (size_t oi = 0; oi < orbits_.size(); ++oi)
    for (int m : orbits_[oi].members) orbit_index_[m] = static_cast<int>(oi);

  // relative simple indices
  switch (kind) {
    case FormKind::Split: rel_indices_ = {1, 2, 3, 4}; break;
    case FormKind::QuadTimesF: rel_indices_ = {1, 2, 3}; break;
    default: rel_indices_ = {1, 2}; break;
  }
}

const EtaleForm& EtaleForm::get(FormKind kind) {
  static const EtaleForm split(FormKind::Split);
  static const EtaleForm quad(FormKind::QuadTimesF);
  static const EtaleForm cubg(FormKind::CubicGalois);
  static const EtaleForm cubng(FormKind::CubicNonGalois);
  switch (kind) {
    case FormKind::Split: return split;
    case FormKind::QuadTimesF: return quad;
    case FormKind::CubicGalois: return cubg;
    case FormKind::CubicNonGalois: return cubng;
  }
  throw std::logic_error("bad kind");
}

std::vector<int> EtaleForm::levi_indices() const {
  std::vector<int> out;
  for (int i : rel_indices_)
    if (i != 2) out.push_back(i);
  return out;
}

std::vector<Affine> lambda_sline(const EtaleForm& form) {
  std::vector<Affine> l(form.coord_dim(), Affine{Rat(0), Rat(-1)});
  l[form.slot(2)] = Affine{Rat(1), Rat(3, 2)};
  return l;
}

LinForm orbit_pairing(const EtaleForm& form, const RootOrbit& orbit) {
  const auto& pos = positive_roots_d4();
  std::optional<LinForm> result;
  for (int m : orbit.members) {
    LinForm f;
    f.coeff.assign(form.coord_dim(), Rat(0));
    for (int i = 1; i <= 4; ++i) f.coeff[form.slot(i)] += Rat(pos[m][i - 1]);
    if (result && !(*result == f)) throw std::logic_error("orbit members restrict differently");
    result = f;
  }
  return *result;
}

Rat pairing_value(const EtaleForm& form, const RootOrbit& orbit, const std::vector<Rat>& lambda) {
  if (static_cast<int>(lambda.size()) != form.coord_dim())
    throw std::invalid_argument("lambda dimension mismatch");
  LinForm f = orbit_pairing(form, orbit);
  Rat v = f.cst;
  for (int i = 0; i < form.coord_dim(); ++i) v += f.coeff[i] * lambda[i];
  return v;
}

Affine LinForm::on_sline(const EtaleForm& form) const {
  auto l = lambda_sline(form);
  Affine out{Rat(0), cst};
  for (size_t i = 0; i < coeff.size(); ++i) {
    out.a += coeff[i] * l[i].a;
    out.b += coeff[i] * l[i].b;
  }
  return out;
}

std::string LinForm::str(const EtaleForm& form) const {
  std::string out;
  for (size_t i = 0; i < coeff.size(); ++i) {
    if (coeff[i] == Rat(0)) continue;
    std::string term;
    if (coeff[i] == Rat(1)) term = "";
    else if (coeff[i] == Rat(-1)) term = "-";
    else term = to_string(coeff[i]) + "*";
    term += "s" + std::to_string(i + 1);
    if (!out.empty() && term[0] != '-') out += "+";
    out += term;
  }
  if (cst != Rat(0)) {
    std::string c = to_string(cst);
    if (!out.empty() && c[0] != '-') out += "+";
    out += c;
  }
  if (out.empty()) out = "0";
  (void)form;
  return out;
}

std::string to_string_affine(const Affine& f, const std::string& var) {
  if (f.a == Rat(0)) return to_string(f.b);
  std::string out;
  if (f.a == Rat(1)) out = var;
  else if (f.a == Rat(-1)) out = "-" + var;
  else out = to_string(f.a) + var;
  if (f.b != Rat(0)) {
    std::string c = to_string(f.b);
    if (c[0] != '-') out += "+";
    out += c;
  }
  return out;
}

} // namespace d4pole

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

#include "d4pole/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace d4pole {

namespace {

std::array<int, 16> key_of(const LatticeMat& m) {
  std::array<int, 16> k;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) k[i * 4 + j] = m(i, j);
  return k;
}

} // namespace

const LatticeMat& reflection_matrix(const EtaleForm& form, int index) {
  static std::map<std::pair<FormKind, int>, LatticeMat> cache = [] {
    std::map<std::pair<FormKind, int>, LatticeMat> c;
    for (FormKind k : {FormKind::Split, FormKind::QuadTimesF, FormKind::CubicGalois,
                       FormKind::CubicNonGalois}) {
      const EtaleForm& f = EtaleForm::get(k);
      for (int idx : f.relative_indices()) {
        LatticeMat m = LatticeMat::Identity();
        // absolute indices sharing idx's slot form the orbit; the factors commute
        for (int abs = 1; abs <= 4; ++abs)
          if (f.slot(abs) == f.slot(idx)) m = m * simple_reflection(abs);
        c[{k, idx}] = m;
      }
    }
    return c;
  }();
  auto it = cache.find({form.kind(), index});
  if (it == cache.end())
    throw std::invalid_argument("reflection index " + std::to_string(index) + " invalid for form " +
                                to_string(form.kind()));
  return it->second;
}

WeylWord::WeylWord(const EtaleForm& form, std::vector<int> letters)
    : form_(&form), letters_(std::move(letters)) {
  mat_ = LatticeMat::Identity();
  for (int l : letters_) mat_ = mat_ * reflection_matrix(form, l);
  const auto& grp = RelativeWeylGroup::get(form);
  if (grp.length_of(mat_) != length())
    throw std::invalid_argument("word is not reduced: " + str());
}

LatticeMat WeylWord::inverse_matrix() const {
  LatticeMat m = LatticeMat::Identity();
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    m = m * reflection_matrix(*form_, *it);
  return m;
}

WeylWord WeylWord::operator*(const WeylWord& o) const {
  if (form_ != o.form_) throw std::invalid_argument("form mismatch");
  return RelativeWeylGroup::get(*form_).canonical(mat_ * o.mat_);
}

bool WeylWord::operator==(const WeylWord& o) const {
  return form_->kind() == o.form_->kind() && mat_ == o.mat_;
}

std::string WeylWord::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(letters_[i]);
  }
  return out;
}

WeylWord WeylWord::parse(const EtaleForm& form, const std::string& text) {
  std::vector<int> letters;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // tolerate surrounding blanks
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }), tok.end());
    if (tok.empty()) continue;
    if (tok.size() != 1 || tok[0] < '1' || tok[0] > '4')
      throw std::invalid_argument("bad word letter: '" + tok + "'");
    int l = tok[0] - '0';
    if (std::find(form.relative_indices().begin(), form.relative_indices().end(), l) ==
        form.relative_indices().end())
      throw std::invalid_argument("letter " + tok + " not available for form " +
                                  to_string(form.kind()));
    letters.push_back(l);
  }
  return WeylWord(form, letters);  // throws when not reduced
}

RelativeWeylGroup::RelativeWeylGroup(const EtaleForm& form) : form_(&form) {
  // BFS from the identity; generators in ascending order gives ShortLex words.
  std::map<std::array<int, 16>, int> seen;
  elements_.push_back(LatticeMat::Identity());
  words_.push_back({});
  seen[key_of(elements_[0])] = 0;
  for (size_t i = 0; i < elements_.size(); ++i) {
    LatticeMat cur = elements_[i];
    std::vector<int> curw = words_[i];
    for (int idx : form.relative_indices()) {
      LatticeMat next = cur * reflection_matrix(form, idx);
      auto key = key_of(next);
      if (seen.find(key) != seen.end()) continue;
      seen[key] = static_cast<int>(elements_.size());
      elements_.push_back(next);
      auto w = curw;
      w.push_back(idx);
      words_.push_back(std::move(w));
    }
  }
}

const RelativeWeylGroup& RelativeWeylGroup::get(const EtaleForm& form) {
  static const RelativeWeylGroup split(EtaleForm::get(FormKind::Split));
  static const RelativeWeylGroup quad(EtaleForm::get(FormKind::QuadTimesF));
  static const RelativeWeylGroup cubg(EtaleForm::get(FormKind::CubicGalois));
  static const RelativeWeylGroup cubng(EtaleForm::get(FormKind::CubicNonGalois));
  switch (form.kind()) {
    case FormKind::Split: return split;
    case FormKind::QuadTimesF: return quad;
    case FormKind::CubicGalois: return cubg;
    case FormKind::CubicNonGalois: return cubng;
  }
  throw std::logic_error("bad kind");
}

int RelativeWeylGroup::index_of(const LatticeMat& m) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == m) return static_cast<int>(i);
  throw std::invalid_argument("matrix not in relative Weyl group");
}

WeylWord RelativeWeylGroup::canonical(const LatticeMat& m) const {
  return WeylWord(*form_, words_[index_of(m)]);
}

int RelativeWeylGroup::length_of(const LatticeMat& m) const {
  return static_cast<int>(flipped_orbits(*form_, m).size());
}

std::vector<int> flipped_orbits(const EtaleForm& form, const LatticeMat& w) {
  // inverse of a Weyl matrix on the root lattice: solve via integer inverse
  // (determinant +-1); use the adjugate through Eigen on doubles is fragile,
  // so invert by word when possible, else by exact Gaussian elimination.
  const auto& grp = RelativeWeylGroup::get(form);
  int idx = grp.index_of(w);
  LatticeMat inv = LatticeMat::Identity();
  for (auto it = grp.word(idx).rbegin(); it != grp.word(idx).rend(); ++it)
    inv = inv * reflection_matrix(form, *it);

  const auto& pos = positive_roots_d4();
  std::vector<int> out;
  for (size_t oi = 0; oi < form.orbits().size(); ++oi) {
    const auto& orb = form.orbits()[oi];
    int neg = 0, posc = 0;
    for (int m : orb.members) {
      Root img = inv * pos[m];
      if (is_positive_root_vec(img)) ++posc;
      else if (is_negative_root_vec(img)) ++neg;
      else throw std::logic_error("image is not a root");
    }
    if (neg && posc) throw std::logic_error("orbit sign mixed: matrix not Galois-stable");
    if (neg) out.push_back(static_cast<int>(oi));
  }
  return out;
}

bool is_minimal_coset_rep(const EtaleForm& form, const LatticeMat& m) {
  const auto& grp = RelativeWeylGroup::get(form);
  int idx = grp.index_of(m);
  LatticeMat inv = LatticeMat::Identity();
  for (auto it = grp.word(idx).rbegin(); it != grp.word(idx).rend(); ++it)
    inv = inv * reflection_matrix(form, *it);
  for (int a : form.levi_indices()) {
    Root simple = Root::Zero();
    simple[a - 1] = 1;
    if (!is_positive_root_vec(inv * simple)) return false;
  }
  return true;
}

std::vector<WeylWord> enumerate_coset_reps(const EtaleForm& form) {
  const auto& grp = RelativeWeylGroup::get(form);
  std::vector<WeylWord> reps;
  for (int i = 0; i < grp.size(); ++i)
    if (is_minimal_coset_rep(form, grp.elements()[i])) reps.push_back(WeylWord(form, grp.word(i)));
  std::sort(reps.begin(), reps.end(), [](const WeylWord& x, const WeylWord& y) {
    if (x.length() != y.length()) return x.length() < y.length();
    return x.letters() < y.letters();
  });
  return reps;
}

std::vector<Descent> right_descents(const WeylWord& w) {
  std::vector<Descent> out;
  const auto& grp = RelativeWeylGroup::get(w.form());
  for (int a : w.form().relative_indices()) {
    LatticeMat prefix = w.matrix() * reflection_matrix(w.form(), a);  // w * r_a^{-1} = w * r_a
    WeylWord p = grp.canonical(prefix);
    if (p.length() + 1 == w.length()) out.push_back({p, a});
  }
  return out;
}

} // namespace d4pole

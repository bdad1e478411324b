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

#ifndef D4POLE_WEYL_HPP
#define D4POLE_WEYL_HPP

#include <string>
#include <vector>

#include "d4pole/rootdatum.hpp"

namespace d4pole {

// Element of the relative Weyl group, stored as a reduced word in relative
// simple-reflection indices. For the cubic forms index 1 is the product
// s_1 s_3 s_4 of the commuting absolute reflections in the triality orbit;
// for QuadTimesF index 3 is s_3 s_4.
class WeylWord {
public:
  WeylWord(const EtaleForm& form, std::vector<int> letters);

  const EtaleForm& form() const { return *form_; }
  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }

  // matrix of the group element on the absolute (co)root lattice
  const LatticeMat& matrix() const { return mat_; }
  LatticeMat inverse_matrix() const;

  WeylWord operator*(const WeylWord& o) const;
  bool operator==(const WeylWord& o) const;

  // comma-separated digits; empty string = identity
  std::string str() const;
  static WeylWord parse(const EtaleForm& form, const std::string& text);

private:
  const EtaleForm* form_;
  std::vector<int> letters_;
  LatticeMat mat_;
};

// product of the commuting absolute reflections in the index's orbit
const LatticeMat& reflection_matrix(const EtaleForm& form, int index);

// The full relative Weyl group with canonical (ShortLex) reduced words.
class RelativeWeylGroup {
public:
  static const RelativeWeylGroup& get(const EtaleForm& form);

  const EtaleForm& form() const { return *form_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<LatticeMat>& elements() const { return elements_; }
  // canonical reduced word of element #i
  const std::vector<int>& word(int i) const { return words_[i]; }
  // index of a matrix in the group; throws if absent
  int index_of(const LatticeMat& m) const;
  // canonical WeylWord for an arbitrary product; validates group membership
  WeylWord canonical(const LatticeMat& m) const;

  // relative length = number of positive-root orbits sent negative by w^{-1}
  int length_of(const LatticeMat& m) const;

private:
  explicit RelativeWeylGroup(const EtaleForm& form);
  const EtaleForm* form_;
  std::vector<LatticeMat> elements_;
  std::vector<std::vector<int>> words_;
};

// Minimal-length representatives of W_M \ W_rel (M = Heisenberg Levi),
// sorted by (length, ShortLex). Sizes 6 / 12 / 24.
std::vector<WeylWord> enumerate_coset_reps(const EtaleForm& form);

// w minimal in its coset W_M w: w^{-1} keeps every Levi simple orbit positive
bool is_minimal_coset_rep(const EtaleForm& form, const LatticeMat& m);

// Positive-root orbits flipped by w^{-1} (indices into form.orbits()).
// Orbit-wise sign behavior is guaranteed by Galois stability; a mixed orbit
// signals a non-stable matrix and throws.
std::vector<int> flipped_orbits(const EtaleForm& form, const LatticeMat& w);
inline std::vector<int> flipped_orbits(const WeylWord& w) {
  return flipped_orbits(w.form(), w.matrix());
}

// All ways to peel one relative letter off the right: word = w' * r_a with
// additive lengths. Character-stabilization filtering happens in the poles
// module, where the specialized character is known.
struct Descent {
  WeylWord prefix;
  int letter;
};
std::vector<Descent> right_descents(const WeylWord& w);

} // namespace d4pole

#endif

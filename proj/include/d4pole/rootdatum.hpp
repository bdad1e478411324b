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

#ifndef D4POLE_ROOTDATUM_HPP
#define D4POLE_ROOTDATUM_HPP

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "d4pole/rational.hpp"

namespace d4pole {

// Roots and coroots of the absolute D4 system live in Z^4, coordinates in the
// simple-root basis alpha_1..alpha_4 (alpha_2 is the branch node). The system
// is simply laced, so roots and coroots share coordinates and every Weyl
// matrix acts the same way on both lattices.
using Root = Eigen::Vector4i;
using LatticeMat = Eigen::Matrix4i;

// Cartan matrix of D4: <alpha_i, alpha_j^vee>, symmetric.
const LatticeMat& cartan_d4();

// The 12 positive roots, in a fixed height-then-lex order.
const std::vector<Root>& positive_roots_d4();

// alpha_1 + 2 alpha_2 + alpha_3 + alpha_4
Root highest_root_d4();

// Simple reflection on the (co)root lattice; index in 1..4.
const LatticeMat& simple_reflection(int index);

// true if all coordinates >= 0 and the vector is nonzero
bool is_positive_root_vec(const Root& r);
bool is_negative_root_vec(const Root& r);

enum class FormKind { Split, QuadTimesF, CubicGalois, CubicNonGalois };

std::string to_string(FormKind k);
FormKind parse_form(const std::string& s);

enum class FieldLabel { F, K, E };
std::string to_string(FieldLabel f);

// A Galois orbit of positive roots together with the field of definition of
// the corresponding restricted root and the det-character power it carries.
struct RootOrbit {
  std::vector<int> members;    // indices into positive_roots_d4()
  FieldLabel field = FieldLabel::F;
  int det_power = 0;           // <highest root, alpha^vee> for any member
};

// One of the four quasi-split forms: the Galois action on the diagram nodes
// {1,3,4} (node 2 always fixed), the restricted coordinate layout and the
// orbit decomposition of the positive roots.
class EtaleForm {
public:
  static const EtaleForm& get(FormKind kind);

  FormKind kind() const { return kind_; }
  int coord_dim() const { return coord_dim_; }

  // Generators of the diagram action as permutations of {1,2,3,4}
  // (index 2 fixed); identity excluded. Full group obtained by closure.
  const std::vector<std::array<int, 5>>& diagram_action() const { return action_; }
  // order of the diagram-action group
  int action_order() const { return action_order_; }

  // Restricted coordinate slot of each absolute coordinate 1..4. Slots are
  // 0-based; for QuadTimesF: 1->0 (F), 2->1 (F), 3,4->2 (K); for cubic forms:
  // 1,3,4->0 (E), 2->1 (F); split: i -> i-1.
  int slot(int abs_index) const { return slot_[abs_index]; }
  FieldLabel slot_field(int slot) const { return slot_field_[slot]; }

  // Galois orbits of the 12 positive roots.
  const std::vector<RootOrbit>& orbits() const { return orbits_; }
  // orbit containing positive root #i
  const RootOrbit& orbit_of(int root_index) const { return orbits_[orbit_index_[root_index]]; }
  int orbit_index_of(int root_index) const { return orbit_index_[root_index]; }

  // Relative simple-reflection indices usable for this form, ascending.
  const std::vector<int>& relative_indices() const { return rel_indices_; }
  // Indices generating the Heisenberg Levi (all relative indices except 2).
  std::vector<int> levi_indices() const;

  // Whether the class-field character chi_E of the form exists (false only
  // for the non-Galois cubic form, which has no attached character).
  bool has_class_character() const { return kind_ != FormKind::CubicNonGalois; }

private:
  explicit EtaleForm(FormKind kind);

  FormKind kind_;
  int coord_dim_ = 4;
  int action_order_ = 1;
  std::vector<std::array<int, 5>> action_;
  std::array<int, 5> slot_{};           // index 0 unused
  std::vector<FieldLabel> slot_field_;
  std::vector<RootOrbit> orbits_;
  std::array<int, 12> orbit_index_{};
  std::vector<int> rel_indices_;
};

// Linear form over the restricted coordinates (s_1..s_d), plus a constant;
// the lambda-side argument type for Gindikin-Karpelevich factors.
struct LinForm {
  std::vector<Rat> coeff;  // size = coord_dim
  Rat cst{0};

  bool operator==(const LinForm& o) const = default;
  // substitute the s-line lambda_s to get an affine form in s
  Affine on_sline(const EtaleForm& form) const;
  std::string str(const EtaleForm& form) const;
};

// lambda_s per form: (-1, s+3/2, -1[, -1]) with the F-slot carrying s+3/2.
std::vector<Affine> lambda_sline(const EtaleForm& form);

// <lambda, alpha^vee> restricted to the form's coordinates; all orbit members
// must agree (asserted). lambda given per-slot.
LinForm orbit_pairing(const EtaleForm& form, const RootOrbit& orbit);

// pairing against an explicit per-slot lambda; throws on dimension mismatch
Rat pairing_value(const EtaleForm& form, const RootOrbit& orbit, const std::vector<Rat>& lambda);

} // namespace d4pole

#endif

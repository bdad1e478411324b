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

#include "d4pole/laurent.hpp"

#include <algorithm>

namespace d4pole {

LaurentSeries LaurentSeries::one(const Rat& s0, int nterms) {
  std::vector<Poly> c(static_cast<size_t>(std::max(nterms, 1)));
  c[0] = Poly(Rat(1));
  return LaurentSeries(s0, 0, std::move(c));
}

const Poly& LaurentSeries::coeff(int degree) const {
  static const Poly zero;
  if (degree < first_) return zero;
  if (degree >= known_end())
    throw InsufficientDepth("coefficient of degree " + std::to_string(degree) +
                            " beyond computed window ending at " + std::to_string(known_end()));
  return coeffs_[static_cast<size_t>(degree - first_)];
}

int LaurentSeries::first_nonzero() const {
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return first_ + static_cast<int>(i);
  throw InsufficientDepth("series vanishes through degree " + std::to_string(known_end() - 1) +
                          "; deeper expansion required to localize the order");
}

int LaurentSeries::order() const { return -first_nonzero(); }

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
  if (s0_ != o.s0_) throw std::invalid_argument("adding series at different anchors");
  int first = std::min(first_, o.first_);
  int end = std::min(known_end(), o.known_end());
  if (end <= first)
    throw InsufficientDepth("sum has empty known window");
  std::vector<Poly> c(static_cast<size_t>(end - first));
  for (int d = first; d < end; ++d) {
    Poly v;
    if (knows(d) || d < first_) v = v + coeff(d);
    if (o.knows(d) || d < o.first_) v = v + o.coeff(d);
    c[static_cast<size_t>(d - first)] = v;
  }
  return LaurentSeries(s0_, first, std::move(c));
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
  if (s0_ != o.s0_) throw std::invalid_argument("multiplying series at different anchors");
  int n = std::min(static_cast<int>(coeffs_.size()), static_cast<int>(o.coeffs_.size()));
  int first = first_ + o.first_;
  std::vector<Poly> c(static_cast<size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; i + j < n && j < static_cast<int>(o.coeffs_.size()); ++j)
      c[static_cast<size_t>(i + j)] =
          c[static_cast<size_t>(i + j)] + coeffs_[static_cast<size_t>(i)] * o.coeffs_[static_cast<size_t>(j)];
  return LaurentSeries(s0_, first, std::move(c));
}

LaurentSeries LaurentSeries::inverse() const {
  // peel leading zeros first; inversion needs an invertible leading coefficient
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead == coeffs_.size()) throw InsufficientDepth("inverting a series with no known nonzero term");
  const Poly& head = coeffs_[lead];
  if (!head.invertible())
    throw std::logic_error("series inverse needs a monomial leading coefficient, got " + head.str());
  int n = static_cast<int>(coeffs_.size() - lead);
  Poly head_inv = head.inverse();
  // u_k = c_{lead+k} / head ; inverse = head^{-1} * sum (-U)^j
  std::vector<Poly> u(static_cast<size_t>(n));
  for (int k = 1; k < n; ++k) u[static_cast<size_t>(k)] = coeffs_[lead + static_cast<size_t>(k)] * head_inv;
  std::vector<Poly> inv(static_cast<size_t>(n));
  inv[0] = Poly(Rat(1));
  // recursively: inv_k = -sum_{j=1..k} u_j inv_{k-j}
  for (int k = 1; k < n; ++k) {
    Poly acc;
    for (int j = 1; j <= k; ++j)
      acc = acc + u[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
    inv[static_cast<size_t>(k)] = -acc;
  }
  for (auto& p : inv) p = p * head_inv;
  return LaurentSeries(s0_, -(first_ + static_cast<int>(lead)), std::move(inv));
}

LaurentSeries LaurentSeries::shifted(int n) const {
  return LaurentSeries(s0_, first_ + n, coeffs_);
}

std::string LaurentSeries::str(int max_terms) const {
  std::string out;
  int shown = 0;
  for (int d = first_; d < known_end() && shown < max_terms; ++d) {
    const Poly& c = coeff(d);
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (d != 0) out += "*t^" + std::to_string(d);
    ++shown;
  }
  if (out.empty()) out = "0";
  out += " + O(t^" + std::to_string(known_end()) + ")";
  return out;
}

} // namespace d4pole

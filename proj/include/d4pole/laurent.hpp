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

#ifndef D4POLE_LAURENT_HPP
#define D4POLE_LAURENT_HPP

#include <stdexcept>
#include <vector>

#include "d4pole/symbols.hpp"

namespace d4pole {

// Raised when a computation needs Laurent coefficients beyond the computed
// window; callers retry with more terms.
struct InsufficientDepth : std::runtime_error {
  explicit InsufficientDepth(const std::string& what) : std::runtime_error(what) {}
};

// Truncated Laurent expansion around s0 in t = s - s0. Coefficients are known
// exactly for degrees in [first, first + coeffs.size()); everything below
// `first` is exactly zero.
class LaurentSeries {
public:
  LaurentSeries() = default;
  LaurentSeries(Rat s0, int first, std::vector<Poly> coeffs)
      : s0_(std::move(s0)), first_(first), coeffs_(std::move(coeffs)) {}

  static LaurentSeries one(const Rat& s0, int nterms);

  const Rat& anchor() const { return s0_; }
  int first_degree() const { return first_; }
  // one past the last degree with a known coefficient
  int known_end() const { return first_ + static_cast<int>(coeffs_.size()); }

  const Poly& coeff(int degree) const;
  bool knows(int degree) const { return degree >= first_ && degree < known_end(); }

  // pole order (positive) / vanishing order (negative); throws
  // InsufficientDepth when every known coefficient vanishes
  int order() const;
  const Poly& leading() const { return coeff(first_nonzero()); }
  int first_nonzero() const;  // degree of first nonzero known coefficient

  LaurentSeries operator+(const LaurentSeries& o) const;
  LaurentSeries operator*(const LaurentSeries& o) const;
  LaurentSeries inverse() const;
  // multiply by (s - s0)^n
  LaurentSeries shifted(int n) const;

  std::string str(int max_terms = 6) const;

private:
  Rat s0_{0};
  int first_ = 0;
  std::vector<Poly> coeffs_;
};

} // namespace d4pole

#endif

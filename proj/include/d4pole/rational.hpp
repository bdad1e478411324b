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

#ifndef D4POLE_RATIONAL_HPP
#define D4POLE_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace d4pole {

// All arithmetic in the library is exact over Q. Magnitudes stay tiny
// (numerators/denominators of table entries), so a 64-bit rational is ample.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Parses "p", "p/q", with optional sign. Throws std::invalid_argument on junk.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

// An affine form a*s + b; the workhorse for L-function arguments on the
// one-parameter line.
struct Affine {
  Rat a{0};
  Rat b{0};

  Rat operator()(const Rat& s) const { return a * s + b; }
  Affine operator+(const Rat& c) const { return {a, b + c}; }
  Affine operator+(const Affine& o) const { return {a + o.a, b + o.b}; }
  Affine operator*(long long k) const { return {a * k, b * k}; }
  bool operator==(const Affine& o) const = default;
};

std::string to_string_affine(const Affine& f, const std::string& var = "s");

} // namespace d4pole

#endif

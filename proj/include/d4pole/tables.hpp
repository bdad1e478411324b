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

#ifndef D4POLE_TABLES_HPP
#define D4POLE_TABLES_HPP

#include <json.hpp>

#include "d4pole/applications.hpp"
#include "d4pole/poles.hpp"

namespace d4pole {

using Json = nlohmann::json;

// Appendix-style tables 4..12, regenerated from the engine:
//   4/7/10  transported characters w^{-1}.chi_s  (cubic / quad / split)
//   5/8/11  GK factors on the s-line with pole-order columns
//   6/9/12  GK factors at general lambda
Json generate_table(int id);

// parse "s+3/2", "2s", "-1", "s2", "3s1+2s2+1" into engine argument forms
Affine parse_affine_arg(const std::string& text);
LinForm parse_linform_arg(const std::string& text, const EtaleForm& form);

struct DiffEntry {
  std::string location;
  std::string golden;
  std::string computed;
};

struct DiffReport {
  int cells_checked = 0;
  std::vector<DiffEntry> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// structural diff of a generated table against its golden transcription
DiffReport diff_table(int id, const Json& golden);

// load golden/tableNN_*.json from a directory
Json load_golden_table(const std::string& golden_dir, int id);

// rendering
std::string table_to_markdown(const Json& table);
std::string table_to_csv(const Json& table);

// pole-bound tables as JSON, mode in {trivial, unconditional, conjectural}
Json pole_table_json(BoundMode mode);

// exponent tables (one per form): real parts of w^{-1}.chi_s in the
// restricted simple-root basis at s0 = 1/2, 3/2
Json exponent_table_json(FormKind form);

} // namespace d4pole

#endif

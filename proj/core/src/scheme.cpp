// Copyright 2025 The scamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scamp/scheme.hpp"

#include <algorithm>
#include <cctype>

#include "scamp/lattice.hpp"

namespace scamp {

int SchemeWord::additions() const {
  return int(std::count(ops.begin(), ops.end(), Ladder::add));
}

int SchemeWord::subtractions() const {
  return int(std::count(ops.begin(), ops.end(), Ladder::subtract));
}

const SchemeWord& word_of(SchemeTag s) {
  return s == SchemeTag::aadag ? kAadag : kAdag2;
}

int target_index(int k, int d, SchemeTag s) {
  return s == SchemeTag::aadag ? k : mod_d(k + 2, d);
}

std::string to_string(SchemeTag s) {
  return s == SchemeTag::aadag ? "aadag" : "adag2";
}

std::optional<SchemeTag> parse_scheme(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (t == "aadag") return SchemeTag::aadag;
  if (t == "adag2") return SchemeTag::adag2;
  return std::nullopt;
}

}  // namespace scamp

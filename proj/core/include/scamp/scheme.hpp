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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scamp/fock.hpp"

namespace scamp {

/**
 * Word over {add, subtract}. ops.front() is the leftmost factor, so the
 * last entry acts first.
 */
struct SchemeWord {
  std::vector<Ladder> ops;

  std::size_t size() const { return ops.size(); }
  int additions() const;
  int subtractions() const;
  /** #add - #subtract. */
  int net_change() const { return additions() - subtractions(); }
  bool operator==(const SchemeWord&) const = default;
};

/** a a^dag: addition first, then subtraction. */
inline const SchemeWord kAadag{{Ladder::subtract, Ladder::add}};
/** a^dag a^dag. */
inline const SchemeWord kAdag2{{Ladder::add, Ladder::add}};

enum class SchemeTag { aadag, adag2 };

const SchemeWord& word_of(SchemeTag s);

/** Qudit index of the amplification target: k for AADAG, k+2 mod d for ADAG2. */
int target_index(int k, int d, SchemeTag s);

std::string to_string(SchemeTag s);
std::optional<SchemeTag> parse_scheme(std::string_view text);

}  // namespace scamp

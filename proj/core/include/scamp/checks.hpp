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

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "scamp/scheme.hpp"

namespace scamp {

enum class CheckLevel { quick, full };

std::optional<CheckLevel> parse_check_level(std::string_view text);

/** Closed forms exercised by the equivalence checks; replaceable in tests. */
struct ClosedForms {
  std::function<double(double, double, SchemeTag)> hes_fidelity;
  std::function<double(double, SchemeTag)> hes_gain;
  std::function<double(double, std::optional<SchemeTag>)> hes_qfi;
  std::function<double(double, double, int, int, SchemeTag)> scs_fidelity;
  std::function<double(double, int, int, std::optional<SchemeTag>)> scs_qfi;
};

ClosedForms default_closed_forms();

struct CheckSummary {
  int passed = 0;
  int failed = 0;
  std::string first_failure;  ///< name of the first failing check
};

/**
 * Run every property suite, printing "PASS name" or "FAIL name: detail"
 * per check.
 */
CheckSummary run_checks(CheckLevel level, std::ostream& os,
                        const ClosedForms& forms = default_closed_forms());

/** 0 if every check passes, 1 otherwise. */
int check_suite(CheckLevel level, std::ostream& os,
                const ClosedForms& forms = default_closed_forms());

}  // namespace scamp

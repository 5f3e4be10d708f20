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

#include <cstddef>
#include <optional>

#include "scamp/scheme.hpp"

namespace scamp {

// Truncated-Fock evaluations of the quantities the analytic module gives in
// closed form. trunc = 0 selects auto_trunc for the largest amplitude.

/** |<H^{target}_{g alpha}| amplified H^k_alpha>|^2. */
double numeric_hes_fidelity(double alpha, double g, int d, int k, SchemeTag s,
                            std::size_t trunc = 0);

/** |<C^{target}_{g alpha}| amplified C^k_alpha>|^2. */
double numeric_scs_fidelity(double alpha, double g, int d, int k, SchemeTag s,
                            std::size_t trunc = 0);

/** 4 Var(n) of the CV mode of the (amplified) HES. */
double numeric_hes_qfi(double alpha, int d, int k, std::optional<SchemeTag> s,
                       std::size_t trunc = 0);

/** 4 Var(n) of the (amplified) SCS. */
double numeric_scs_qfi(double alpha, int d, int k, std::optional<SchemeTag> s,
                       std::size_t trunc = 0);

}  // namespace scamp

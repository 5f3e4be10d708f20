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
#include <string>
#include <vector>

#include "scamp/fock.hpp"
#include "scamp/scheme.hpp"

namespace scamp {

/** Fidelity of the amplified HES against H_{g alpha} (k- and d-independent). */
double hes_fidelity(double alpha, double g, SchemeTag s);

/**
 * Optimized gain. At alpha = 0 AADAG returns its limit 2; ADAG2 throws
 * DivergenceError.
 */
double hes_gain(double alpha, SchemeTag s);

/** QFI of the HES, plain (nullopt) or amplified. */
double hes_qfi(double alpha, std::optional<SchemeTag> s);

/** Fidelity of the amplified SCS against C^{target}_{g alpha, d}. */
double scs_fidelity(double alpha, double g, int d, int k, SchemeTag s);

/** QFI (4 Var n) of the SCS, plain (nullopt) or amplified. */
double scs_qfi(double alpha, int d, int k, std::optional<SchemeTag> s);

/** Phase-rotation QFI of a density matrix with generator a^dag a. */
double qfi_spectral(const DensityMatrix& rho);

struct QfiFamily {
  enum class Kind { hes, scs };
  Kind kind = Kind::hes;
  int d = 1;
  int k = 0;

  static QfiFamily hes() { return {}; }
  static QfiFamily scs(int d, int k) { return {Kind::scs, d, k}; }
};

/** QFI after AADAG divided by QFI after ADAG2. */
double qfi_ratio(double alpha, const QfiFamily& family);

struct IdentityReport {
  std::string name;
  double max_deviation;
};

/**
 * Both sides of the four normal-ordering identities behind the QFI closed
 * forms, compared elementwise on photon numbers 0..trunc-6.
 */
std::vector<IdentityReport> verify_normal_ordering_identities(std::size_t trunc);

}  // namespace scamp

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

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "scamp/fock.hpp"

namespace scamp {

/**
 * Discrete index 0..d-1 tensored with a truncated Fock mode.
 * Row j of `amps` holds the CV amplitudes attached to |j>.
 */
struct HybridState {
  Eigen::MatrixXcd amps;
  double leaked = 0.0;

  int dv_dim() const { return int(amps.rows()); }
  std::size_t trunc() const { return std::size_t(amps.cols()); }
  double norm_squared() const { return amps.squaredNorm(); }

  FockVector row(int j) const;
  void set_row(int j, const FockVector& v);
};

/** <u|v> over both modes. */
complex inner(const HybridState& u, const HybridState& v);

/** <a e^{i lambda} + a^dag e^{-i lambda}> on the CV mode. */
double quadrature_expect(const HybridState& s, double lambda);

}  // namespace scamp

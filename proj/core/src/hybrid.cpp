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

#include "scamp/hybrid.hpp"

#include <cmath>

#include "scamp/errors.hpp"

namespace scamp {

FockVector HybridState::row(int j) const {
  return FockVector(amps.row(j).transpose());
}

void HybridState::set_row(int j, const FockVector& v) {
  if (v.trunc() != trunc())
    throw PreconditionError("HybridState::set_row: truncation mismatch");
  amps.row(j) = v.amps.transpose();
}

complex inner(const HybridState& u, const HybridState& v) {
  if (u.dv_dim() != v.dv_dim())
    throw PreconditionError("inner: DV dimensions differ");
  complex acc = 0.0;
  for (int j = 0; j < u.dv_dim(); ++j) acc += inner(u.row(j), v.row(j));
  return acc;
}

double quadrature_expect(const HybridState& s, double lambda) {
  if (std::abs(s.norm_squared() - 1.0) > 1e-10)
    throw PreconditionError("quadrature_expect: input is not normalized");
  complex a = 0.0, adag = 0.0;
  for (int j = 0; j < s.dv_dim(); ++j) {
    for (std::size_t n = 0; n + 1 < s.trunc(); ++n) {
      const double r = std::sqrt(double(n + 1));
      const complex lo = s.amps(j, Eigen::Index(n));
      const complex hi = s.amps(j, Eigen::Index(n + 1));
      a += std::conj(lo) * r * hi;
      adag += std::conj(hi) * r * lo;
    }
  }
  const complex val =
      std::polar(1.0, lambda) * a + std::polar(1.0, -lambda) * adag;
  if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val)))
    throw NumericError("quadrature_expect: imaginary residue above 1e-12");
  return val.real();
}

}  // namespace scamp

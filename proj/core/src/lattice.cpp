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

#include "scamp/lattice.hpp"

#include <cmath>
#include <numbers>

#include "scamp/errors.hpp"

namespace scamp {

namespace {

template <class Real>
std::complex<Real> root_t(long r, int d) {
  const int m = mod_d(r, d);
  if (m == 0) return {1, 0};
  if (2 * m == d) return {-1, 0};
  if (4 * m == d) return {0, 1};
  if (4 * m == 3 * d) return {0, -1};
  const Real phi = 2 * std::numbers::pi_v<Real> * Real(m) / Real(d);
  return {std::cos(phi), std::sin(phi)};
}

template <class Real>
Real series_sum(int residue, Real x, int d) {
  const Real lx = std::log(x);
  Real total = 0;
  // Terms peak near m = x; stop once past the peak and negligible.
  for (long m = residue;; m += d) {
    const Real lt = Real(m) * lx - std::lgamma(Real(m) + 1) - x;
    const Real t = std::exp(lt);
    total += t;
    if (Real(m) > x && t <= Real(1e-21) * total) break;
    if (Real(m) > x && total == 0 && lt < -800) break;
  }
  return Real(d) * total;
}

template <class Real>
Real omega_sum_t(long r, Real x, int d) {
  if (d < 1) throw PreconditionError("omega_sum: d must be >= 1");
  if (!(x >= 0) || !std::isfinite(x))
    throw PreconditionError("omega_sum: x must be finite and >= 0");
  const int res = mod_d(-r, d);
  if (d == 1) return 1;
  if (x == 0) return res == 0 ? Real(d) : Real(0);

  std::complex<Real> acc = 0;
  for (int n = 0; n < d; ++n) {
    const std::complex<Real> expo = -x * (Real(1) - root_t<Real>(n, d));
    acc += root_t<Real>(long(r) * n, d) * std::exp(expo);
  }
  if (std::abs(acc.real()) >= Real(1e-2)) {
    if (std::abs(acc.imag()) > Real(1e-12) * Real(d))
      throw NumericError("omega_sum: imaginary residue above 1e-12");
    return acc.real();
  }
  return series_sum(res, x, d);
}

}  // namespace

std::complex<double> root_of_unity(long r, int d) {
  if (d < 1) throw PreconditionError("root_of_unity: d must be >= 1");
  return root_t<double>(r, d);
}

double omega_sum(long r, double x, int d) { return omega_sum_t<double>(r, x, d); }

long double omega_sum_ext(long r, long double x, int d) {
  return omega_sum_t<long double>(r, x, d);
}

}  // namespace scamp

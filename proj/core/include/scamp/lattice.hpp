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

#include <complex>

namespace scamp {

/** Reduce r into 0..d-1. */
inline int mod_d(long r, int d) {
  long m = r % d;
  return static_cast<int>(m < 0 ? m + d : m);
}

/** omega_d^r, with r reduced mod d before the trigonometry. */
std::complex<double> root_of_unity(long r, int d);

/**
 * T_r(x) = sum_{n<d} omega_d^{rn} exp(-x (1 - omega_d^n)).
 *
 * Equals d e^{-x} sum_{m = -r mod d} x^m / m!, which is real and >= 0.
 * Direct complex summation is used when the result is O(1); the residue
 * class series otherwise.
 */
double omega_sum(long r, double x, int d);

/** omega_sum in extended precision. */
long double omega_sum_ext(long r, long double x, int d);

}  // namespace scamp

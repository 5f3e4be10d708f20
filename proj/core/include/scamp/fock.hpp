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
#include <complex>
#include <cstddef>

namespace scamp {

using complex = std::complex<double>;

/** Default tail tolerance for automatically chosen truncations. */
inline constexpr double kTruncEpsilon = 1e-14;

enum class Ladder { add, subtract };

/**
 * Single-mode state on photon numbers 0..N-1.
 *
 * `leaked` accumulates the squared magnitude of amplitudes pushed past the
 * top level by creation operators.
 */
struct FockVector {
  Eigen::VectorXcd amps;
  double leaked = 0.0;

  FockVector() = default;
  explicit FockVector(std::size_t trunc);
  explicit FockVector(Eigen::VectorXcd a, double leak = 0.0);

  std::size_t trunc() const { return static_cast<std::size_t>(amps.size()); }
  complex operator[](std::size_t n) const { return amps(Eigen::Index(n)); }
  double norm_squared() const { return amps.squaredNorm(); }

  /** Copy zero-extended (or cut, adding to `leaked`) to `trunc` levels. */
  FockVector resized(std::size_t trunc) const;
};

/** |n> on `trunc` levels. */
FockVector number_state(std::size_t n, std::size_t trunc);

/** Coherent state |alpha>, not renormalized after truncation. */
FockVector coherent(double alpha, std::size_t trunc);

/** Coherent state |alpha * omega_d^j> with omega_d = exp(2 pi i / d). */
FockVector coherent_root(double alpha, int j, int d, std::size_t trunc);

/** Apply a creation or annihilation operator. */
FockVector ladder(const FockVector& v, Ladder dir);

/** <u|v>, zero-padding the shorter vector. */
complex inner(const FockVector& u, const FockVector& v);

struct Normalized {
  FockVector state;
  double norm;
};

/** Returns the unit vector and the original 2-norm. */
Normalized normalize(const FockVector& v);

struct Moments {
  double mean_n;
  double var_n;
};

/** Mean and variance of the photon number of a normalized vector. */
Moments moments(const FockVector& v);

/** <a e^{i lambda} + a^dag e^{-i lambda}> of a normalized vector. */
double quadrature_expect(const FockVector& v, double lambda);

/** Sum_{n >= n0} of the Poisson(alpha^2) law. */
double poisson_tail(double alpha, std::size_t n0);

/** Smallest N with poisson_tail(alpha_max, N) < epsilon. */
std::size_t min_trunc(double alpha_max, double epsilon);

/** min_trunc(alpha, kTruncEpsilon) plus headroom for `additions` creations. */
std::size_t auto_trunc(double alpha, int additions);

/** Validated density matrix: Hermitian, unit trace, PSD. */
class DensityMatrix {
 public:
  explicit DensityMatrix(Eigen::MatrixXcd entries);
  static DensityMatrix from_pure(const FockVector& v);

  const Eigen::MatrixXcd& entries() const { return entries_; }
  std::size_t trunc() const { return std::size_t(entries_.rows()); }

 private:
  Eigen::MatrixXcd entries_;
};

}  // namespace scamp

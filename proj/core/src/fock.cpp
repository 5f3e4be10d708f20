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

#include "scamp/fock.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "scamp/errors.hpp"
#include "scamp/lattice.hpp"

namespace scamp {

FockVector::FockVector(std::size_t trunc)
    : amps(Eigen::VectorXcd::Zero(Eigen::Index(trunc))) {}

FockVector::FockVector(Eigen::VectorXcd a, double leak)
    : amps(std::move(a)), leaked(leak) {}

FockVector FockVector::resized(std::size_t trunc) const {
  FockVector out(trunc);
  out.leaked = leaked;
  const std::size_t keep = std::min(trunc, this->trunc());
  out.amps.head(Eigen::Index(keep)) = amps.head(Eigen::Index(keep));
  for (std::size_t n = keep; n < this->trunc(); ++n)
    out.leaked += std::norm(amps(Eigen::Index(n)));
  return out;
}

FockVector number_state(std::size_t n, std::size_t trunc) {
  if (n >= trunc) throw PreconditionError("number_state: n >= trunc");
  FockVector v(trunc);
  v.amps(Eigen::Index(n)) = 1.0;
  return v;
}

namespace {

void check_alpha(double alpha, const char* who) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError(std::string(who) + ": alpha must be finite, >= 0");
}

// e^{-alpha^2/2} alpha^n / sqrt(n!) via log-gamma.
double coherent_amp(double alpha, std::size_t n) {
  if (alpha == 0.0) return n == 0 ? 1.0 : 0.0;
  const double dn = double(n);
  return std::exp(-0.5 * alpha * alpha + dn * std::log(alpha) -
                  0.5 * std::lgamma(dn + 1.0));
}

}  // namespace

FockVector coherent(double alpha, std::size_t trunc) {
  check_alpha(alpha, "coherent");
  if (trunc < 1) throw PreconditionError("coherent: trunc must be >= 1");
  FockVector v(trunc);
  for (std::size_t n = 0; n < trunc; ++n)
    v.amps(Eigen::Index(n)) = coherent_amp(alpha, n);
  return v;
}

FockVector coherent_root(double alpha, int j, int d, std::size_t trunc) {
  check_alpha(alpha, "coherent_root");
  if (trunc < 1) throw PreconditionError("coherent_root: trunc must be >= 1");
  FockVector v(trunc);
  for (std::size_t n = 0; n < trunc; ++n)
    v.amps(Eigen::Index(n)) =
        coherent_amp(alpha, n) * root_of_unity(long(j) * long(n), d);
  return v;
}

FockVector ladder(const FockVector& v, Ladder dir) {
  const std::size_t N = v.trunc();
  FockVector out(N);
  out.leaked = v.leaked;
  if (N == 0) return out;
  if (dir == Ladder::subtract) {
    for (std::size_t n = 0; n + 1 < N; ++n)
      out.amps(Eigen::Index(n)) =
          std::sqrt(double(n + 1)) * v.amps(Eigen::Index(n + 1));
  } else {
    for (std::size_t n = 1; n < N; ++n)
      out.amps(Eigen::Index(n)) =
          std::sqrt(double(n)) * v.amps(Eigen::Index(n - 1));
    out.leaked += double(N) * std::norm(v.amps(Eigen::Index(N - 1)));
  }
  return out;
}

complex inner(const FockVector& u, const FockVector& v) {
  const Eigen::Index n = std::min(u.amps.size(), v.amps.size());
  return u.amps.head(n).dot(v.amps.head(n));
}

Normalized normalize(const FockVector& v) {
  const double nrm = v.amps.norm();
  if (!(nrm > 0.0)) throw DegenerateError("normalize: zero vector");
  if (!std::isfinite(nrm)) throw NumericError("normalize: non-finite norm");
  FockVector out(v.amps / nrm, v.leaked / (nrm * nrm));
  return {std::move(out), nrm};
}

namespace {

void require_normalized(const FockVector& v, const char* who) {
  if (std::abs(v.norm_squared() - 1.0) > 1e-10)
    throw PreconditionError(std::string(who) + ": input is not normalized");
}

}  // namespace

Moments moments(const FockVector& v) {
  require_normalized(v, "moments");
  double m1 = 0.0;
  for (std::size_t n = 0; n < v.trunc(); ++n)
    m1 += double(n) * std::norm(v.amps(Eigen::Index(n)));
  m1 /= v.norm_squared();
  // Central second moment avoids cancellation between <n^2> and <n>^2.
  double var = 0.0;
  for (std::size_t n = 0; n < v.trunc(); ++n) {
    const double dn = double(n) - m1;
    var += dn * dn * std::norm(v.amps(Eigen::Index(n)));
  }
  var /= v.norm_squared();
  return {m1, std::max(var, 0.0)};
}

double quadrature_expect(const FockVector& v, double lambda) {
  require_normalized(v, "quadrature_expect");
  complex a = 0.0, adag = 0.0;
  for (std::size_t n = 0; n + 1 < v.trunc(); ++n) {
    const double s = std::sqrt(double(n + 1));
    a += std::conj(v.amps(Eigen::Index(n))) * s * v.amps(Eigen::Index(n + 1));
    adag +=
        std::conj(v.amps(Eigen::Index(n + 1))) * s * v.amps(Eigen::Index(n));
  }
  const complex val = std::polar(1.0, lambda) * a + std::polar(1.0, -lambda) * adag;
  if (std::abs(val.imag()) > 1e-12 * std::max(1.0, std::abs(val)))
    throw NumericError("quadrature_expect: imaginary residue above 1e-12");
  return val.real();
}

namespace {

// Poisson(alpha^2) probabilities up to where the tail is below double range.
std::vector<double> poisson_pmf(double alpha) {
  std::vector<double> p;
  if (alpha == 0.0) return {1.0};
  const double x = alpha * alpha, lx = std::log(x);
  for (std::size_t n = 0;; ++n) {
    const double dn = double(n);
    const double lp = dn * lx - x - std::lgamma(dn + 1.0);
    p.push_back(std::exp(lp));
    if (dn > x && lp < -745.0) break;
  }
  return p;
}

}  // namespace

double poisson_tail(double alpha, std::size_t n0) {
  check_alpha(alpha, "poisson_tail");
  const auto p = poisson_pmf(alpha);
  double tail = 0.0;
  for (std::size_t n = p.size(); n-- > n0;) tail += p[n];
  return tail;
}

std::size_t min_trunc(double alpha_max, double epsilon) {
  check_alpha(alpha_max, "min_trunc");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw PreconditionError("min_trunc: epsilon must lie in (0, 1)");
  const auto p = poisson_pmf(alpha_max);
  // suffix[N] = sum_{n >= N} p[n], summed from the top where terms are smallest.
  std::vector<double> suffix(p.size() + 1, 0.0);
  for (std::size_t n = p.size(); n-- > 0;) suffix[n] = suffix[n + 1] + p[n];
  for (std::size_t N = 1; N <= p.size(); ++N)
    if (suffix[N] < epsilon) return N;
  return p.size();
}

std::size_t auto_trunc(double alpha, int additions) {
  return min_trunc(alpha, kTruncEpsilon) + std::size_t(std::max(additions, 0)) +
         2;
}

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
    throw PreconditionError("DensityMatrix: matrix must be square, non-empty");
  if (!entries_.allFinite())
    throw PreconditionError("DensityMatrix: non-finite entries");
  if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw PreconditionError("DensityMatrix: not Hermitian");
  if (std::abs(entries_.trace() - complex(1.0)) > 1e-12)
    throw PreconditionError("DensityMatrix: trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(entries_,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw PreconditionError("DensityMatrix: negative eigenvalue");
}

DensityMatrix DensityMatrix::from_pure(const FockVector& v) {
  return DensityMatrix(v.amps * v.amps.adjoint());
}

}  // namespace scamp

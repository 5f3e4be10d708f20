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

#include "scamp/states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scamp/errors.hpp"
#include "scamp/lattice.hpp"
#include "scamp/optimize.hpp"

namespace scamp {

namespace {

template <class Spec>
void validate_spec(const Spec& spec, const char* who) {
  if (!std::isfinite(spec.alpha) || spec.alpha < 0.0)
    throw PreconditionError(std::string(who) + ": alpha must be finite, >= 0");
  if (spec.d < 1) throw PreconditionError(std::string(who) + ": d must be >= 1");
  if (spec.k < 0 || spec.k >= spec.d)
    throw PreconditionError(std::string(who) + ": k must lie in 0..d-1");
}

// Below this raw norm the literal coherent sum keeps too few digits.
constexpr double kLiteralThreshold = 0.1;
constexpr double kFockLimitThreshold = 1e-150;

double log_coherent_amp(double alpha, long m) {
  return -0.5 * alpha * alpha + double(m) * std::log(alpha) -
         0.5 * std::lgamma(double(m) + 1.0);
}

}  // namespace

void validate(const ScsSpec& spec) { validate_spec(spec, "ScsSpec"); }
void validate(const HesSpec& spec) { validate_spec(spec, "HesSpec"); }

bool modular_delta(long m, long k, int d) {
  if (d < 1) throw PreconditionError("modular_delta: d must be >= 1");
  return mod_d(m - k, d) == 0;
}

FockVector scs_superposition(const ScsSpec& spec, std::size_t trunc) {
  validate(spec);
  FockVector out(trunc);
  for (int n = 0; n < spec.d; ++n) {
    const FockVector c = coherent_root(spec.alpha, n, spec.d, trunc);
    out.amps += root_of_unity(-long(spec.k) * n, spec.d) * c.amps;
  }
  return out;
}

double scs_raw_norm(const ScsSpec& spec) {
  validate(spec);
  const double t = omega_sum(-spec.k, spec.alpha * spec.alpha, spec.d);
  return std::sqrt(spec.d * std::max(t, 0.0));
}

std::size_t scs_auto_trunc(double alpha, int d, int additions) {
  if (d < 1) throw PreconditionError("scs_auto_trunc: d must be >= 1");
  return auto_trunc(alpha, additions) + std::size_t(d);
}

double scs_norm_factor(const ScsSpec& spec) {
  const double raw = scs_raw_norm(spec);
  if (!(raw >= kFockLimitThreshold))
    throw DegenerateError("scs_norm_factor: vanishing superposition (alpha -> 0, k > 0)");
  return 1.0 / raw;
}

ScsBuild scs_build(const ScsSpec& spec, std::size_t trunc) {
  validate(spec);
  if (trunc < 1) throw PreconditionError("scs_state: trunc must be >= 1");
  const double raw = scs_raw_norm(spec);
  if (spec.alpha == 0.0 || raw < kFockLimitThreshold) {
    if (std::size_t(spec.k) >= trunc)
      throw PreconditionError("scs_state: trunc too small for the Fock limit");
    return {number_state(std::size_t(spec.k), trunc), ScsConstruction::fock_limit};
  }
  if (raw >= kLiteralThreshold) {
    FockVector v = scs_superposition(spec, trunc);
    v.amps /= raw;
    return {std::move(v), ScsConstruction::superposition};
  }
  // N d e^{-alpha^2/2} alpha^m / sqrt(m!) on m = k (mod d).
  FockVector v(trunc);
  const double lpre = std::log(double(spec.d)) - std::log(raw);
  for (std::size_t m = std::size_t(spec.k); m < trunc; m += std::size_t(spec.d))
    v.amps(Eigen::Index(m)) = std::exp(lpre + log_coherent_amp(spec.alpha, long(m)));
  return {std::move(v), ScsConstruction::pseudo_number};
}

FockVector scs_state(const ScsSpec& spec, std::size_t trunc) {
  return scs_build(spec, trunc).state;
}

HybridState hes_state(const HesSpec& spec, std::size_t trunc) {
  validate(spec);
  if (trunc < 1) throw PreconditionError("hes_state: trunc must be >= 1");
  HybridState s;
  s.amps = Eigen::MatrixXcd::Zero(spec.d, Eigen::Index(trunc));
  const double w = 1.0 / std::sqrt(double(spec.d));
  for (int n = 0; n < spec.d; ++n) {
    const FockVector c = coherent_root(spec.alpha, n, spec.d, trunc);
    s.amps.row(n) =
        (w * root_of_unity(-long(spec.k) * n, spec.d)) * c.amps.transpose();
  }
  return s;
}

std::vector<double> photon_distribution(const FockVector& v) {
  std::vector<double> p(v.trunc());
  for (std::size_t n = 0; n < v.trunc(); ++n) p[n] = std::norm(v[n]);
  return p;
}

std::vector<double> photon_distribution(const HybridState& s) {
  std::vector<double> p(s.trunc(), 0.0);
  for (std::size_t n = 0; n < s.trunc(); ++n)
    p[n] = s.amps.col(Eigen::Index(n)).squaredNorm();
  return p;
}

double addition_norm_factor(double alpha, int m) {
  if (m < 0) throw PreconditionError("addition_norm_factor: m must be >= 0");
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError("addition_norm_factor: alpha must be finite, >= 0");
  const double lm = std::lgamma(double(m) + 1.0);
  double total = 0.0;
  for (int j = 0; j <= m; ++j) {
    const int p = m - j;
    if (alpha == 0.0 && p > 0) continue;
    double lt = 2.0 * lm - std::lgamma(double(j) + 1.0) -
                2.0 * std::lgamma(double(p) + 1.0);
    if (p > 0) lt += 2.0 * p * std::log(alpha);
    total += std::exp(lt);
  }
  return std::sqrt(total);
}

double addition_overlap(double alpha, double beta, int d, int k, int l, int m) {
  if (m < 0) throw PreconditionError("addition_overlap: m must be >= 0");
  if (!(alpha >= 0.0) || !(beta >= 0.0))
    throw PreconditionError("addition_overlap: alpha, beta must be >= 0");
  validate(HesSpec{alpha, d, k});
  validate(HesSpec{beta, d, l});
  if (!modular_delta(l, long(k) + m, d)) return 0.0;
  const double diff = alpha - beta;
  const double bm = m == 0 ? 1.0 : std::pow(beta, m);
  return bm * std::exp(-0.5 * diff * diff) / addition_norm_factor(alpha, m);
}

BetaOptimum optimal_beta(double alpha, int m, int d) {
  if (m < 0) throw PreconditionError("optimal_beta: m must be >= 0");
  if (m == 0) return {alpha, 1.0};
  const double lo = std::max(alpha - 3.0, 0.01);
  const double hi = alpha + m + 3.0;
  const int l = mod_d(m, d);
  auto f = [&](double beta) {
    const double o = addition_overlap(alpha, beta, d, 0, l, m);
    return o * o;
  };
  SimplexOptions opts;
  opts.x0 = std::clamp(alpha, lo, hi);
  opts.x1 = std::min(opts.x0 + 0.5, hi);
  const OptResult r = maximize_scalar(f, lo, hi, opts);
  if (!r.converged)
    throw ConvergenceError("optimal_beta: simplex did not converge", r.argmax,
                           r.value);
  return {r.argmax, r.value};
}

}  // namespace scamp

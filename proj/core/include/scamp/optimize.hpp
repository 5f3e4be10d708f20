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

#include "scamp/scheme.hpp"
#include "scamp/states.hpp"

namespace scamp {

struct OptResult {
  double argmax = 0.0;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
  bool boundary_hit = false;
};

struct SimplexOptions {
  double x0 = 1.0;
  double x1 = 1.5;
  double tol = 1e-8;
  int max_iterations = 10000;
};

using ScalarFn = std::function<double(double)>;

/**
 * Two-point Nelder-Mead maximization on [lo, hi] with one restart from the
 * best point. Trial points are clamped to the interval.
 */
OptResult maximize_scalar(const ScalarFn& f, double lo, double hi,
                          const SimplexOptions& opts);
OptResult maximize_scalar(const ScalarFn& f, double lo, double hi,
                          double tol = 1e-8);

/** Gain search interval for SCS amplification. */
inline constexpr double kGainLower = 1e-6;
inline constexpr double kGainUpper = 20.0;

/** Gain maximizing scs_fidelity over [kGainLower, kGainUpper]. */
OptResult scs_gain(const ScsSpec& spec, SchemeTag s,
                   const SimplexOptions& opts = {});

/** Bisection root of f(x) = target on [lo, hi], to width 1e-6 or `width`. */
double find_crossing(const ScalarFn& f, double target, double lo, double hi,
                     double width = 1e-6);

}  // namespace scamp

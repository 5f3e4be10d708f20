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

#include "scamp/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "scamp/analytic.hpp"
#include "scamp/errors.hpp"

namespace scamp {

namespace {

struct Point {
  double x;
  double f;
};

class Simplex1D {
 public:
  Simplex1D(const ScalarFn& f, double lo, double hi)
      : f_(f), lo_(lo), hi_(hi) {}

  Point eval(double x) {
    x = std::clamp(x, lo_, hi_);
    const double v = f_(x);
    if (!std::isfinite(v))
      throw NonFiniteError("maximize_scalar: objective is not finite at x = " +
                               std::to_string(x),
                           x);
    return {x, v};
  }

  // Returns the best point; `iters` accumulates, `ok` reports convergence.
  Point run(double x0, double x1, double tol, int max_iter, int& iters,
            bool& ok) {
    Point b = eval(x0), w = eval(x1);
    if (w.f > b.f) std::swap(b, w);
    ok = false;
    while (iters < max_iter) {
      if (std::abs(b.x - w.x) < tol) {
        ok = true;
        break;
      }
      ++iters;
      const Point r = eval(b.x + (b.x - w.x));
      if (r.f > b.f) {
        const Point e = eval(b.x + 2.0 * (b.x - w.x));
        w = b;
        b = e.f > r.f ? e : r;
        continue;
      }
      if (r.f > w.f) {
        const Point c = eval(b.x + 0.5 * (r.x - b.x));
        if (c.f >= r.f) {
          w = c;
        } else {
          w = eval(b.x + 0.5 * (w.x - b.x));
        }
      } else {
        const Point c = eval(b.x + 0.5 * (w.x - b.x));
        w = c;
      }
      if (w.f > b.f) std::swap(b, w);
    }
    return b;
  }

 private:
  const ScalarFn& f_;
  double lo_, hi_;
};

}  // namespace

OptResult maximize_scalar(const ScalarFn& f, double lo, double hi,
                          const SimplexOptions& opts) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw PreconditionError("maximize_scalar: need finite lo < hi");
  if (!(opts.tol > 0.0))
    throw PreconditionError("maximize_scalar: tol must be > 0");
  Simplex1D s(f, lo, hi);
  int iters = 0;
  bool ok1 = false, ok2 = false;
  double x0 = std::clamp(opts.x0, lo, hi), x1 = std::clamp(opts.x1, lo, hi);
  if (x0 == x1) x1 = x0 + (x0 + 0.5 <= hi ? 0.5 : -0.5);
  const Point first = s.run(x0, x1, opts.tol, opts.max_iterations, iters, ok1);
  const double step = 10.0 * opts.tol;
  const double xr = first.x + step <= hi ? first.x + step : first.x - step;
  Point best = s.run(first.x, xr, opts.tol, opts.max_iterations, iters, ok2);
  if (first.f > best.f) best = first;

  OptResult out;
  out.argmax = best.x;
  out.value = best.f;
  out.iterations = iters;
  out.converged = ok1 && ok2;
  out.boundary_hit = best.x - lo < opts.tol || hi - best.x < opts.tol;
  return out;
}

OptResult maximize_scalar(const ScalarFn& f, double lo, double hi, double tol) {
  SimplexOptions opts;
  opts.tol = tol;
  return maximize_scalar(f, lo, hi, opts);
}

OptResult scs_gain(const ScsSpec& spec, SchemeTag s, const SimplexOptions& opts) {
  validate(spec);
  const ScalarFn f = [&](double g) {
    return scs_fidelity(spec.alpha, g, spec.d, spec.k, s);
  };
  return maximize_scalar(f, kGainLower, kGainUpper, opts);
}

double find_crossing(const ScalarFn& f, double target, double lo, double hi,
                     double width) {
  if (!(lo < hi)) throw PreconditionError("find_crossing: need lo < hi");
  double flo = f(lo) - target, fhi = f(hi) - target;
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw NonFiniteError("find_crossing: non-finite endpoint value",
                         std::isfinite(flo) ? hi : lo);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw BracketError("find_crossing: no sign change on the interval");
  while (hi - lo >= width) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid) - target;
    if (!std::isfinite(fm))
      throw NonFiniteError("find_crossing: non-finite value", mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace scamp

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


#include <cmath>
#include <limits>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "scamp/analytic.hpp"
#include "scamp/errors.hpp"
#include "scamp/optimize.hpp"

using namespace scamp;
using Catch::Approx;

TEST_CASE("maximize a gaussian bump") {
  const OptResult r = maximize_scalar(
      [](double g) { return std::exp(-(g - 1.3) * (g - 1.3)); }, 0.5, 3.0);
  CHECK(r.converged);
  CHECK_FALSE(r.boundary_hit);
  CHECK(r.argmax == Approx(1.3).margin(1e-7));
  CHECK(r.value == Approx(1.0).epsilon(1e-14));
}

TEST_CASE("maximize recovers the closed-form hes gains") {
  const OptResult a = maximize_scalar(
      [](double g) { return hes_fidelity(1.0, g, SchemeTag::aadag); }, kGainLower,
      kGainUpper);
  CHECK(a.argmax == Approx(std::sqrt(2.0)).margin(1e-6));
  const OptResult b = maximize_scalar(
      [](double g) { return hes_fidelity(1.0, g, SchemeTag::adag2); }, kGainLower,
      kGainUpper);
  CHECK(b.argmax == Approx(2.0).margin(1e-6));
}

TEST_CASE("boundary maxima are flagged") {
  const OptResult r = maximize_scalar([](double x) { return x; }, 0.0, 2.0);
  CHECK(r.argmax == Approx(2.0).margin(1e-8));
  CHECK(r.boundary_hit);
  const OptResult l = maximize_scalar([](double x) { return -x; }, 0.0, 2.0);
  CHECK(l.argmax == Approx(0.0).margin(1e-8));
  CHECK(l.boundary_hit);
}

TEST_CASE("iteration limit is reported") {
  SimplexOptions o;
  o.max_iterations = 3;
  const OptResult r =
      maximize_scalar([](double x) { return -std::abs(x - 7.0); }, 0.0, 20.0, o);
  CHECK_FALSE(r.converged);
}

TEST_CASE("optimizer errors") {
  CHECK_THROWS_AS(maximize_scalar([](double) { return 0.0; }, 2.0, 1.0),
                  PreconditionError);
  try {
    maximize_scalar([](double x) { return x > 1.2 ? std::nan("") : x; }, 0.0, 5.0);
    FAIL("expected NonFiniteError");
  } catch (const NonFiniteError& e) {
    CHECK(e.abscissa() > 1.2);
  }
}

TEST_CASE("scs gain reduces to the hes gains for d = 1") {
  for (SchemeTag s : {SchemeTag::aadag, SchemeTag::adag2})
    for (double a : {0.4, 1.0, 2.2}) {
      const OptResult r = scs_gain(ScsSpec{a, 1, 0}, s);
      CHECK(r.argmax == Approx(hes_gain(a, s)).margin(1e-6));
    }
}

TEST_CASE("scs gain last qudit numbers") {
  const OptResult lo = scs_gain(ScsSpec{0.2, 4, 3}, SchemeTag::adag2);
  const OptResult hi = scs_gain(ScsSpec{1.0, 4, 3}, SchemeTag::adag2);
  CHECK(lo.argmax > hi.argmax);
  CHECK(lo.argmax == Approx(11.08).margin(0.01));
  CHECK(hi.argmax == Approx(2.244).margin(0.001));
}

TEST_CASE("scs gain agrees with a dense grid scan") {
  const ScsSpec spec{2.0, 3, 0};
  const OptResult r = scs_gain(spec, SchemeTag::aadag);
  const auto [gx, gv] = oracle::grid_argmax(
      [&](double g) { return scs_fidelity(2.0, g, 3, 0, SchemeTag::aadag); }, 0.5,
      3.0, 1e-4);
  CHECK(r.argmax == Approx(gx).margin(1e-3));
  CHECK(r.value >= gv - 1e-8);
}

TEST_CASE("find_crossing") {
  CHECK(find_crossing([](double x) { return x * x; }, 4.0, 1.0, 3.0) ==
        Approx(2.0).margin(1e-6));
  CHECK_THROWS_AS(find_crossing([](double x) { return x; }, 5.0, 0.0, 1.0),
                  BracketError);

  const double star =
      find_crossing([](double a) { return qfi_ratio(a, QfiFamily::hes()); }, 1.0,
                    0.5, 1.2);
  CHECK(star == Approx(0.9).margin(0.05));
  CHECK(star == Approx(0.89643).margin(1e-5));

  const double h = 1e-5;
  auto slope = [&](double a) {
    return (qfi_ratio(a + h, QfiFamily::hes()) - qfi_ratio(a - h, QfiFamily::hes())) /
           (2 * h);
  };
  const double amin = find_crossing(slope, 0.0, 1.2, 1.7);
  CHECK(amin == Approx(1.43).margin(0.05));
  CHECK(amin == Approx(1.43037).margin(1e-4));
}

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
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "scamp/amplify.hpp"
#include "scamp/analytic.hpp"
#include "scamp/errors.hpp"

using namespace scamp;
using Catch::Approx;

namespace {

const SchemeWord kNumber{{Ladder::add, Ladder::subtract}};

std::vector<char> letters(const SchemeWord& w) {
  std::vector<char> out;
  for (Ladder l : w.ops) out.push_back(l == Ladder::add ? '+' : '-');
  return out;
}

SchemeWord random_word(std::mt19937& rng, int len) {
  SchemeWord w;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < len; ++i)
    w.ops.push_back(coin(rng) ? Ladder::add : Ladder::subtract);
  return w;
}

SchemeWord random_balanced(std::mt19937& rng, int pairs) {
  std::vector<Ladder> ops(std::size_t(2 * pairs), Ladder::subtract);
  std::fill(ops.begin(), ops.begin() + pairs, Ladder::add);
  std::shuffle(ops.begin(), ops.end(), rng);
  return SchemeWord{ops};
}

}  // namespace

TEST_CASE("apply_word on number and coherent states") {
  for (std::size_t k = 0; k < 5; ++k) {
    const Amplified a = apply_word(number_state(k, 10), kAadag);
    CHECK(a.raw_norm == Approx(double(k + 1)).epsilon(1e-14));
    CHECK(std::abs(a.state[k] - complex(1.0)) < 1e-14);
  }
  const Amplified c = apply_word(coherent(1.0, 40), kAadag);
  CHECK(c.raw_norm * c.raw_norm == Approx(5.0).epsilon(1e-10));
  CHECK_THROWS_AS(apply_word(number_state(0, 5), SchemeWord{{Ladder::subtract}}),
                  DegenerateError);
}

TEST_CASE("apply_word reports truncation leaks") {
  try {
    apply_word(coherent(3.0, 12), kAdag2);
    FAIL("expected TruncationError");
  } catch (const TruncationError& e) {
    CHECK(e.leaked() > 1e-14);
  }
}

TEST_CASE("apply_word matches dense matrix products") {
  std::mt19937 rng(7);
  const int N = 60;
  for (int t = 0; t < 20; ++t) {
    const SchemeWord w = random_word(rng, 1 + t % 4);
    const FockVector v = coherent(1.5, N);
    const FockVector out = apply_word_raw(v, w);
    const oracle::Vec ref = oracle::word(letters(w), N) * v.amps;
    CHECK((out.amps - ref).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hes amplification norms are d and k independent") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k < d; ++k) {
      CHECK(hes_amplified(HesSpec{1.0, d, k}, kAadag, 50).raw_norm ==
            Approx(std::sqrt(5.0)).epsilon(1e-12));
      CHECK(hes_amplified(HesSpec{1.0, d, k}, kAdag2, 50).raw_norm ==
            Approx(std::sqrt(7.0)).epsilon(1e-12));
    }
}

TEST_CASE("amplified hes overlap with the shifted target") {
  const int N = 70;
  for (int d = 2; d <= 4; ++d)
    for (double a : {0.5, 1.2, 2.0})
      for (double g : {0.9, 1.5, 2.0}) {
        const int k = 1 % d, t = (k + 2) % d;
        const AmplifiedHybrid out = hes_amplified(HesSpec{a, d, k}, kAdag2, N);
        const HybridState tgt = hes_state(HesSpec{g * a, d, t}, N);
        const double f = std::norm(inner(tgt, out.state));
        CHECK(f == Approx(hes_fidelity(a, g, SchemeTag::adag2)).margin(1e-8));
      }
}

TEST_CASE("scs amplification at small alpha") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k < d; ++k) {
      const AmplifiedScs s = scs_amplified(ScsSpec{1e-9, d, k}, kAadag, 20);
      CHECK(std::abs(std::abs(s.state[std::size_t(k)]) - 1.0) < 1e-8);
    }
    const AmplifiedScs up = scs_amplified(ScsSpec{1e-9, d, d - 2}, kAdag2, 20);
    CHECK(std::abs(std::abs(up.state[std::size_t(d)]) - 1.0) < 1e-8);
    const FockVector zero = scs_state(ScsSpec{1e-9, d, 0}, 20);
    CHECK(std::norm(inner(zero, up.state)) < 1e-12);
  }
}

TEST_CASE("scs amplified raw norm matches the closed normalization") {
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k < d; ++k)
      for (double a : {0.4, 1.0, 2.3})
        for (SchemeTag s : {SchemeTag::aadag, SchemeTag::adag2}) {
          const ScsSpec spec{a, d, k};
          const AmplifiedScs out =
              scs_amplified(spec, word_of(s), scs_auto_trunc(a, d, 2));
          CHECK(out.raw_norm * scs_norm_factor_amplified(spec, word_of(s)) ==
                Approx(1.0).epsilon(1e-10));
          const double ref =
              (oracle::word(letters(word_of(s)), 70) * oracle::scs_raw(a, d, k, 70))
                  .norm();
          CHECK(1.0 / scs_norm_factor_amplified(spec, word_of(s)) ==
                Approx(ref).epsilon(1e-10));
        }
}

TEST_CASE("hes normalization factors") {
  CHECK(hes_norm_factor_amplified(0.0, kAadag) == 1.0);
  CHECK(hes_norm_factor_amplified(1.0, kAdag2) ==
        Approx(1.0 / std::sqrt(7.0)).epsilon(1e-15));
  CHECK(1.0 / std::sqrt(7.0) == Approx(0.37796).margin(1e-5));
  CHECK(hes_norm_factor_amplified(1.0, kNumber) ==
        Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  std::mt19937 rng(11);
  for (int t = 0; t < 10; ++t) {
    const SchemeWord w = random_word(rng, 3);
    if (w.subtractions() == 3) continue;
    const double ref = (oracle::word(letters(w), 60) * oracle::coherent(1.3, 60)).norm();
    CHECK(hes_norm_factor_amplified(1.3, w) == Approx(1.0 / ref).epsilon(1e-10));
  }
}

TEST_CASE("scs normalization factors") {
  for (double a : {0.3, 1.0, 2.0})
    for (SchemeTag s : {SchemeTag::aadag, SchemeTag::adag2})
      CHECK(scs_norm_factor_amplified(ScsSpec{a, 1, 0}, word_of(s)) ==
            Approx(hes_norm_factor_amplified(a, word_of(s))).epsilon(1e-12));
  const double ref = (oracle::word(oracle::kAadag, 50) * oracle::scs_raw(1.0, 2, 0, 50)).norm();
  CHECK(scs_norm_factor_amplified(ScsSpec{1.0, 2, 0}, kAadag) ==
        Approx(1.0 / ref).epsilon(1e-10));
  CHECK(scs_norm_factor_amplified(ScsSpec{0.5, 2, 0}, kAadag) !=
        scs_norm_factor_amplified(ScsSpec{0.5, 2, 1}, kAadag));
  CHECK(scs_norm_factor_amplified(ScsSpec{1.2, 3, 1}, kNumber) ==
        Approx(1.0 / (oracle::word({'+', '-'}, 60) * oracle::scs_raw(1.2, 3, 1, 60)).norm())
            .epsilon(1e-10));
}

TEST_CASE("first proposition examples") {
  const ExpectationPair n = prop1_pair(HesSpec{1.2, 3, 2}, {{1.0, kNumber}});
  CHECK(n.x_hes.real() == Approx(1.44).epsilon(1e-12));
  CHECK(n.x_coh.real() == Approx(1.44).epsilon(1e-12));

  const ExpectationPair id = prop1_pair(HesSpec{0.8, 4, 1}, {{1.0, SchemeWord{}}});
  CHECK(id.x_hes.real() == Approx(1.0).epsilon(1e-12));
  CHECK(id.x_coh.real() == Approx(1.0).epsilon(1e-12));

  const SchemeWord a2a2{{Ladder::add, Ladder::add, Ladder::subtract, Ladder::subtract}};
  const ExpectationPair q = prop1_pair(HesSpec{1.0, 2, 0}, {{1.0, a2a2}});
  CHECK(q.x_hes.real() == Approx(1.0).epsilon(1e-12));
  CHECK(q.x_coh.real() == Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(prop1_pair(HesSpec{1.0, 2, 0}, {{1.0, kAdag2}}), PreconditionError);
}

TEST_CASE("second proposition examples") {
  const ExpectationPair p = prop2_pair(1.0, 1.5, 4, 1, {{1.0, kAdag2}});
  const double ref = 2.25 * std::exp(-0.125);
  CHECK(p.x_hes.real() == Approx(ref).epsilon(1e-10));
  CHECK(p.x_coh.real() == Approx(ref).epsilon(1e-10));

  const ExpectationPair id = prop2_pair(0.9, 0.9, 3, 2, {{1.0, SchemeWord{}}});
  CHECK(id.x_hes.real() == Approx(1.0).epsilon(1e-12));
  CHECK(id.x_coh.real() == Approx(1.0).epsilon(1e-12));

  const double a = 1.1, g = 1.3;
  const ExpectationPair aa = prop2_pair(a, g * a, 3, 1, {{1.0, kAadag}});
  const double num = std::norm(aa.x_hes) * hes_norm_factor_amplified(a, kAadag) *
                     hes_norm_factor_amplified(a, kAadag);
  CHECK(num == Approx(hes_fidelity(a, g, SchemeTag::aadag)).epsilon(1e-10));

  CHECK_THROWS_AS(prop2_pair(1.0, 1.0, 2, 0, {{1.0, kAdag2}, {1.0, kAadag}}),
                  PreconditionError);
}

TEST_CASE("propositions hold for random polynomials") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> amp(0.0, 2.0), re(-1.0, 1.0);
  std::uniform_int_distribution<int> dd(1, 5), pairs(0, 2), terms(1, 3);
  for (int t = 0; t < 60; ++t) {
    const int d = dd(rng);
    const int k = std::uniform_int_distribution<int>(0, d - 1)(rng);
    const double a = amp(rng), b = amp(rng);

    LadderPolynomial p;
    for (int i = terms(rng); i > 0; --i)
      p.push_back({complex(re(rng), re(rng)), random_balanced(rng, pairs(rng))});
    const ExpectationPair e1 = prop1_pair(HesSpec{a, d, k}, p);
    CHECK(std::abs(e1.x_hes - e1.x_coh) <= 1e-10);

    // Same imbalance for every term: a shared random prefix of creations.
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    LadderPolynomial q;
    for (int i = terms(rng); i > 0; --i) {
      SchemeWord w = random_balanced(rng, std::uniform_int_distribution<int>(0, (4 - extra) / 2)(rng));
      w.ops.insert(w.ops.begin(), std::size_t(extra), Ladder::add);
      q.push_back({complex(re(rng), re(rng)), w});
    }
    const ExpectationPair e2 = prop2_pair(a, b, d, k, q);
    CHECK(std::abs(e2.x_hes - e2.x_coh) <= 1e-10);
  }
}

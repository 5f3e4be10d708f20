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

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "scamp/analytic.hpp"
#include "scamp/errors.hpp"
#include "scamp/states.hpp"

using namespace scamp;
using Catch::Approx;

namespace {

const std::vector<char>& letters(SchemeTag s) {
  return s == SchemeTag::aadag ? oracle::kAadag : oracle::kAdag2;
}

constexpr SchemeTag kBoth[] = {SchemeTag::aadag, SchemeTag::adag2};

}  // namespace

TEST_CASE("hes closed-form spot values") {
  CHECK(hes_fidelity(1.0, 1.0, SchemeTag::aadag) == Approx(0.8).epsilon(1e-14));
  CHECK(hes_fidelity(1.0, 2.0, SchemeTag::adag2) ==
        Approx(16.0 / 7.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(16.0 / 7.0 * std::exp(-1.0) == Approx(0.840867).margin(1e-6));
  for (double g : {0.5, 1.0, 3.0})
    CHECK(hes_fidelity(0.0, g, SchemeTag::aadag) == 1.0);

  CHECK(hes_gain(1.0, SchemeTag::aadag) == Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(hes_gain(1.0, SchemeTag::adag2) == Approx(2.0).epsilon(1e-14));
  CHECK(hes_gain(50.0, SchemeTag::aadag) == Approx(1.0).margin(1e-3));
  CHECK(hes_gain(50.0, SchemeTag::adag2) == Approx(1.0).margin(1e-3));
  CHECK(hes_gain(0.0, SchemeTag::aadag) == 2.0);
  CHECK_THROWS_AS(hes_gain(0.0, SchemeTag::adag2), DivergenceError);

  CHECK(hes_qfi(1.0, std::nullopt) == Approx(4.0).epsilon(1e-14));
  CHECK(hes_qfi(1.0, SchemeTag::aadag) == Approx(5.6).epsilon(1e-14));
  CHECK(hes_qfi(1.0, SchemeTag::adag2) == Approx(276.0 / 49.0).epsilon(1e-14));
}

TEST_CASE("hes fidelity matches the hybrid brute force") {
  const int N = 70;
  for (SchemeTag s : kBoth)
    for (double a : {0.3, 1.0, 2.1})
      for (double g : {0.8, 1.4, 2.0}) {
        const int d = 3, k = 1, t = target_index(k, d, s);
        CHECK(hes_fidelity(a, g, s) ==
              Approx(oracle::hes_fidelity(a, g, d, k, letters(s), t, N)).margin(1e-10));
      }
}

TEST_CASE("hes gain maximizes the fidelity") {
  for (SchemeTag s : kBoth)
    for (double a : {0.4, 1.0, 2.5}) {
      const double g = hes_gain(a, s);
      const double f = hes_fidelity(a, g, s);
      CHECK(f >= hes_fidelity(a, g * (1 + 1e-4), s));
      CHECK(f >= hes_fidelity(a, g * (1 - 1e-4), s));
    }
}

TEST_CASE("hes qfi matches the amplified photon statistics") {
  const int N = 70;
  for (double a : {0.3, 1.0, 2.4}) {
    const oracle::Mat h = oracle::hes(a, 2, 0, N);
    CHECK(hes_qfi(a, std::nullopt) == Approx(4 * a * a).epsilon(1e-14));
    for (SchemeTag s : kBoth) {
      oracle::Mat out = oracle::apply_rows(h, oracle::word(letters(s), N));
      out /= out.norm();
      const Eigen::VectorXd p = oracle::cv_distribution(out);
      const oracle::Vec amp = p.cwiseSqrt().cast<oracle::cd>();
      CHECK(hes_qfi(a, s) == Approx(oracle::qfi_pure(amp)).epsilon(1e-9));
    }
  }
}

TEST_CASE("scs fidelity limits") {
  for (int d = 2; d <= 5; ++d) {
    for (int k = 0; k < d; ++k)
      CHECK(scs_fidelity(1e-6, 1.5, d, k, SchemeTag::aadag) ==
            Approx(1.0).margin(1e-9));
    CHECK(scs_fidelity(1e-6, 1.5, d, d - 2, SchemeTag::adag2) < 1e-9);
  }
  for (SchemeTag s : kBoth)
    for (double a : {0.3, 1.1, 2.7})
      for (double g : {0.8, 1.3, 2.0})
        CHECK(scs_fidelity(a, g, 1, 0, s) ==
              Approx(hes_fidelity(a, g, s)).margin(1e-12));
}

TEST_CASE("scs fidelity matches the explicit superposition") {
  const int N = 70;
  for (SchemeTag s : kBoth)
    for (int d = 2; d <= 5; ++d)
      for (int k = 0; k < d; ++k)
        for (double a : {0.6, 1.5, 2.5})
          for (double g : {0.9, 1.6}) {
            const int t = target_index(k, d, s);
            CHECK(scs_fidelity(a, g, d, k, s) ==
                  Approx(oracle::scs_fidelity(a, g, d, k, letters(s), t, N))
                      .margin(1e-9));
          }
}

TEST_CASE("scs qfi") {
  for (int d = 2; d <= 5; ++d)
    for (int k = 0; k < d; ++k)
      CHECK(scs_qfi(1e-4, d, k, std::nullopt) < 1e-6);
  for (double a : {0.5, 1.7})
    CHECK(scs_qfi(a, 1, 0, std::nullopt) == Approx(4 * a * a).epsilon(1e-12));

  const int N = 80;
  for (int d = 2; d <= 5; ++d)
    for (int k = 0; k < d; ++k)
      for (double a : {0.8, 1.6, 2.6}) {
        const oracle::Vec v = oracle::scs(a, d, k, N);
        CHECK(scs_qfi(a, d, k, std::nullopt) ==
              Approx(oracle::qfi_pure(v)).epsilon(1e-8));
        for (SchemeTag s : kBoth) {
          oracle::Vec out = oracle::word(letters(s), N) * v;
          out /= out.norm();
          CHECK(scs_qfi(a, d, k, s) == Approx(oracle::qfi_pure(out)).epsilon(1e-8));
        }
      }

  // mpmath reference at 30 digits for a cancellation-heavy point.
  CHECK(scs_qfi(0.3, 4, 3, std::nullopt) ==
        Approx(4.99885652760825608e-6).epsilon(1e-9));
  CHECK(qfi_ratio(2.2, QfiFamily::scs(5, 0)) > 1.0);
}

TEST_CASE("spectral qfi") {
  for (std::size_t n = 0; n < 4; ++n)
    CHECK(qfi_spectral(DensityMatrix::from_pure(number_state(n, 6))) ==
          Approx(0.0).margin(1e-12));

  FockVector c = coherent(1.0, 40);
  c.amps.normalize();
  CHECK(qfi_spectral(DensityMatrix::from_pure(c)) == Approx(4.0).margin(1e-6));

  Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(3, 3);
  mixed(0, 0) = mixed(1, 1) = 0.5;
  CHECK(qfi_spectral(DensityMatrix(mixed)) == Approx(0.0).margin(1e-12));

  // Equal mixture of two pure states against the textbook sum formula.
  FockVector u = coherent(0.7, 30), w = number_state(2, 30);
  u.amps.normalize();
  const Eigen::MatrixXcd rho = 0.5 * (u.amps * u.amps.adjoint() + w.amps * w.amps.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho);
  const auto nop = oracle::number_op(30);
  double ref = 0.0;
  for (int i = 0; i < 30; ++i)
    for (int j = 0; j < 30; ++j) {
      const double li = es.eigenvalues()(i), lj = es.eigenvalues()(j);
      if (li + lj <= 1e-12) continue;
      const auto m = es.eigenvectors().col(i).dot(nop * es.eigenvectors().col(j));
      ref += 2.0 * (li - lj) * (li - lj) / (li + lj) * std::norm(m);
    }
  CHECK(qfi_spectral(DensityMatrix(rho)) == Approx(ref).epsilon(1e-8));
}

TEST_CASE("hes qfi ratio") {
  CHECK(qfi_ratio(1e-3, QfiFamily::hes()) == Approx(4.0 / 3.0).margin(1e-5));
  CHECK(qfi_ratio(0.45, QfiFamily::hes()) == Approx(1.11052).margin(1e-5));
  CHECK(qfi_ratio(1.0, QfiFamily::hes()) ==
        Approx(5.6 / (276.0 / 49.0)).epsilon(1e-13));
  CHECK(qfi_ratio(1.0, QfiFamily::hes()) == Approx(0.99421).margin(1e-5));
}

TEST_CASE("normal-ordering identities") {
  for (std::size_t n : {12u, 20u, 40u})
    for (const IdentityReport& r : verify_normal_ordering_identities(n))
      CHECK(r.max_deviation <= 1e-9);
  CHECK_THROWS_AS(verify_normal_ordering_identities(8), PreconditionError);

  const int N = 12;
  const auto a = oracle::annihilation(N), c = oracle::creation(N);
  const auto I = oracle::Mat::Identity(N, N);
  const oracle::Mat lhs = a * a * c * a * c * c;
  const oracle::Mat rhs = c * c * c * a * a * a + 8.0 * c * c * a * a + 14.0 * c * a + 4.0 * I;
  // Vacuum: both sides give 4|0>.
  CHECK(std::abs((lhs * oracle::fock(0, N))(0) - 4.0) < 1e-12);
  CHECK((lhs * oracle::fock(0, N) - rhs * oracle::fock(0, N)).norm() < 1e-12);
  // |1>: 14 * 1 + 4.
  CHECK(std::abs((lhs * oracle::fock(1, N))(1) - 18.0) < 1e-12);
  CHECK(std::abs((rhs * oracle::fock(1, N))(1) - 18.0) < 1e-12);
  // Coherent expectation at alpha = 1: 1 + 8 + 14 + 4.
  const oracle::Vec coh = oracle::coherent(1.0, 40);
  const auto a40 = oracle::annihilation(40), c40 = oracle::creation(40);
  CHECK(std::abs(coh.dot(a40 * a40 * c40 * a40 * c40 * c40 * coh).real() - 27.0) < 1e-9);
}

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

#include "scamp/analytic.hpp"

#include <cmath>
#include <string>

#include "scamp/errors.hpp"
#include "scamp/lattice.hpp"

namespace scamp {

namespace {

void check_alpha_g(double alpha, double g, const char* who) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError(std::string(who) + ": alpha must be finite, >= 0");
  if (!std::isfinite(g) || !(g > 0.0))
    throw PreconditionError(std::string(who) + ": g must be finite, > 0");
}

void check_dk(int d, int k, const char* who) {
  if (d < 1 || k < 0 || k >= d)
    throw PreconditionError(std::string(who) + ": need d >= 1 and 0 <= k < d");
}

// Fidelity of the alpha -> 0 limit: |k> mapped by the scheme against |target>.
double fock_limit_fidelity(int d, int k, SchemeTag s) {
  if (s == SchemeTag::aadag) return 1.0;
  return k + 2 < d ? 1.0 : 0.0;
}

}  // namespace

double hes_fidelity(double alpha, double g, SchemeTag s) {
  check_alpha_g(alpha, g, "hes_fidelity");
  const double x = alpha * alpha, x2 = x * x;
  const double damp = std::exp(-x * (g - 1.0) * (g - 1.0));
  if (s == SchemeTag::aadag)
    return (g * g * x2 + 2.0 * g * x + 1.0) / (x2 + 3.0 * x + 1.0) * damp;
  return g * g * g * g * x2 / (x2 + 4.0 * x + 2.0) * damp;
}

double hes_gain(double alpha, SchemeTag s) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError("hes_gain: alpha must be finite, >= 0");
  const double x = alpha * alpha;
  if (s == SchemeTag::aadag) {
    if (x == 0.0) return 2.0;
    return (x - 1.0 + std::sqrt(x * x + 6.0 * x + 1.0)) / (2.0 * x);
  }
  if (x == 0.0) throw DivergenceError("hes_gain: ADAG2 gain diverges at alpha = 0");
  return 0.5 * (1.0 + std::sqrt(1.0 + 8.0 / x));
}

double hes_qfi(double alpha, std::optional<SchemeTag> s) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError("hes_qfi: alpha must be finite, >= 0");
  const double x = alpha * alpha, x2 = x * x;
  if (!s) return 4.0 * x;
  if (*s == SchemeTag::aadag) {
    const double den = x2 + 3.0 * x + 1.0;
    return 4.0 * x * (x2 * x2 + 6.0 * x2 * x + 14.0 * x2 + 10.0 * x + 4.0) /
           (den * den);
  }
  const double den = x2 + 4.0 * x + 2.0;
  return 4.0 * x * (x2 * x2 + 8.0 * x2 * x + 24.0 * x2 + 24.0 * x + 12.0) /
         (den * den);
}

double scs_fidelity(double alpha, double g, int d, int k, SchemeTag s) {
  check_alpha_g(alpha, g, "scs_fidelity");
  check_dk(d, k, "scs_fidelity");
  if (alpha == 0.0) return fock_limit_fidelity(d, k, s);
  const double x = alpha * alpha, gx = g * x, ggx = g * g * x;
  auto T = [d](long r, double y) { return omega_sum(r, y, d); };
  double num, den;
  if (s == SchemeTag::aadag) {
    num = T(-k, gx) + gx * T(1 - k, gx);
    den = (x * x * T(2 - k, x) + 3.0 * x * T(1 - k, x) + T(-k, x)) * T(-k, ggx);
  } else {
    num = gx * g * T(-k, gx);
    den = (x * x * T(2 - k, x) + 4.0 * x * T(1 - k, x) + 2.0 * T(-k, x)) *
          T(-long(k) - 2, ggx);
  }
  const double f = num * num / den * std::exp(-x * (g - 1.0) * (g - 1.0));
  if (!std::isfinite(f)) return fock_limit_fidelity(d, k, s);
  return f;
}

double scs_qfi(double alpha, int d, int k, std::optional<SchemeTag> s) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError("scs_qfi: alpha must be finite, >= 0");
  check_dk(d, k, "scs_qfi");
  if (alpha == 0.0) return 0.0;
  // The variance is a small difference of O(n^2) terms at small alpha and
  // large k, so the combination is formed in extended precision.
  using Real = long double;
  const Real x = Real(alpha) * Real(alpha);
  Real t[5];
  for (int p = 0; p < 5; ++p) t[p] = omega_sum_ext(long(p) - k, x, d);
  const Real x2 = x * x, x3 = x2 * x, x4 = x2 * x2;
  Real den, n1, n2;
  if (!s) {
    den = t[0];
    n1 = x * t[1];
    n2 = x2 * t[2] + x * t[1];
  } else if (*s == SchemeTag::aadag) {
    den = x2 * t[2] + 3 * x * t[1] + t[0];
    n1 = x3 * t[3] + 5 * x2 * t[2] + 4 * x * t[1];
    n2 = x4 * t[4] + 8 * x3 * t[3] + 14 * x2 * t[2] + 4 * x * t[1];
  } else {
    den = x2 * t[2] + 4 * x * t[1] + 2 * t[0];
    n1 = x3 * t[3] + 8 * x2 * t[2] + 14 * x * t[1] + 4 * t[0];
    n2 = x4 * t[4] + 13 * x3 * t[3] + 46 * x2 * t[2] + 46 * x * t[1] + 8 * t[0];
  }
  if (!(den > 0)) return 0.0;
  const Real mean = n1 / den;
  return double(std::max(Real(4) * (n2 / den) - Real(4) * mean * mean, Real(0)));
}

double qfi_spectral(const DensityMatrix& rho) {
  constexpr double kEigCut = 1e-12;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho.entries());
  const Eigen::VectorXd& lam = es.eigenvalues();
  const Eigen::MatrixXcd& V = es.eigenvectors();
  const Eigen::Index N = V.rows();
  Eigen::VectorXd n(N);
  for (Eigen::Index i = 0; i < N; ++i) n(i) = double(i);
  const Eigen::MatrixXcd H = V.adjoint() * n.asDiagonal() * V;
  double acc = 0.0;
  for (Eigen::Index a = 0; a < N; ++a)
    for (Eigen::Index b = 0; b < N; ++b) {
      const double sum = lam(a) + lam(b);
      if (sum <= kEigCut) continue;
      const double diff = lam(a) - lam(b);
      acc += diff * diff / sum * std::norm(H(a, b));
    }
  return 2.0 * acc;
}

double qfi_ratio(double alpha, const QfiFamily& family) {
  if (!std::isfinite(alpha) || !(alpha > 0.0))
    throw PreconditionError("qfi_ratio: alpha must be > 0");
  if (family.kind == QfiFamily::Kind::hes)
    return hes_qfi(alpha, SchemeTag::aadag) / hes_qfi(alpha, SchemeTag::adag2);
  return scs_qfi(alpha, family.d, family.k, SchemeTag::aadag) /
         scs_qfi(alpha, family.d, family.k, SchemeTag::adag2);
}

std::vector<IdentityReport> verify_normal_ordering_identities(std::size_t trunc) {
  if (trunc < 12)
    throw PreconditionError("verify_normal_ordering_identities: trunc must be >= 12");
  const Eigen::Index N = Eigen::Index(trunc);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index n = 1; n < N; ++n) a(n - 1, n) = std::sqrt(double(n));
  const Eigen::MatrixXd c = a.transpose();
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(N, N);
  auto pw = [](const Eigen::MatrixXd& m, int p) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(m.rows(), m.cols());
    for (int i = 0; i < p; ++i) r = r * m;
    return r;
  };
  auto no = [&](int p) -> Eigen::MatrixXd { return pw(c, p) * pw(a, p); };
  const Eigen::Index inner = N - 5;
  auto dev = [&](const Eigen::MatrixXd& l, const Eigen::MatrixXd& r) {
    return (l - r).topLeftCorner(inner, inner).cwiseAbs().maxCoeff();
  };
  std::vector<IdentityReport> out;
  out.push_back({"a adag^3 a^3 adag = adag^4 a^4 + 7 adag^3 a^3 + 9 adag^2 a^2",
                 dev(a * pw(c, 3) * pw(a, 3) * c, no(4) + 7 * no(3) + 9 * no(2))});
  out.push_back({"a adag^2 a^2 adag = adag^3 a^3 + 5 adag^2 a^2 + 4 adag a",
                 dev(a * pw(c, 2) * pw(a, 2) * c, no(3) + 5 * no(2) + 4 * no(1))});
  out.push_back(
      {"a^2 adag^2 a^2 adag^2 = adag^4 a^4 + 12 adag^3 a^3 + 38 adag^2 a^2 + "
       "32 adag a + 4",
       dev(pw(a, 2) * pw(c, 2) * pw(a, 2) * pw(c, 2),
           no(4) + 12 * no(3) + 38 * no(2) + 32 * no(1) + 4 * I)});
  out.push_back({"a^2 adag a adag^2 = adag^3 a^3 + 8 adag^2 a^2 + 14 adag a + 4",
                 dev(pw(a, 2) * c * a * pw(c, 2),
                     no(3) + 8 * no(2) + 14 * no(1) + 4 * I)});
  return out;
}

}  // namespace scamp

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

#include "scamp/channel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "scamp/errors.hpp"

namespace scamp {

namespace {

void check_gamma(double gamma, const char* who) {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw PreconditionError(std::string(who) + ": gamma must lie in (0, 1]");
}

double damping(double gamma, double half_power) {
  if (half_power == 0.0) return 1.0;
  if (gamma == 1.0) return 0.0;
  return std::exp(half_power * std::log1p(-gamma));
}

void require_normalized(double norm_squared, const char* who) {
  if (std::abs(norm_squared - 1.0) > 1e-10)
    throw PreconditionError(std::string(who) + ": input is not normalized");
}

}  // namespace

BeamSplitter::BeamSplitter(double gamma) : gamma_(gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0))
    throw PreconditionError("BeamSplitter: gamma must lie in [0, 1]");
  theta_ = std::acos(std::sqrt(gamma));
}

TwoModeFock bs_apply(const TwoModeFock& state, const BeamSplitter& bs) {
  const Eigen::Index N = state.amps.rows();
  if (state.amps.cols() != N)
    throw PreconditionError("bs_apply: two-mode amplitude matrix must be square");
  double beyond = 0.0;
  for (Eigen::Index s = 0; s < N; ++s)
    for (Eigen::Index a = N - s; a < N; ++a) beyond += std::norm(state.amps(s, a));
  const double total = state.amps.squaredNorm();
  if (beyond > kTruncEpsilon * total)
    throw TruncationError("bs_apply: mass on photon totals beyond the truncation",
                          beyond / total);

  TwoModeFock out;
  out.amps = Eigen::MatrixXcd::Zero(N, N);
  const double theta = bs.theta();
  for (Eigen::Index n = 0; n < N; ++n) {
    // Block basis j = system photons, ancilla n - j.
    const Eigen::Index m = n + 1;
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j + 1 < m; ++j) {
      const double e = std::sqrt(double(j + 1) * double(n - j));
      G(j + 1, j) = e;
      G(j, j + 1) = e;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    const Eigen::MatrixXcd V = es.eigenvectors().cast<complex>();
    Eigen::VectorXcd phase(m);
    for (Eigen::Index j = 0; j < m; ++j)
      phase(j) = std::polar(1.0, theta * es.eigenvalues()(j));
    Eigen::VectorXcd in(m);
    for (Eigen::Index j = 0; j < m; ++j) in(j) = state.amps(j, n - j);
    const Eigen::VectorXcd res = V * phase.asDiagonal() * (V.transpose() * in);
    for (Eigen::Index j = 0; j < m; ++j) out.amps(j, n - j) = res(j);
  }
  return out;
}

FockVector herald_branch(const FockVector& v, double gamma, Ladder kind) {
  check_gamma(gamma, "herald_branch");
  const Eigen::Index M = Eigen::Index(v.trunc()) + 1;
  TwoModeFock tm;
  tm.amps = Eigen::MatrixXcd::Zero(M, M);
  const Eigen::Index anc_in = kind == Ladder::add ? 1 : 0;
  const Eigen::Index anc_out = kind == Ladder::add ? 0 : 1;
  tm.amps.col(anc_in).head(M - 1) = v.amps;
  const TwoModeFock o = bs_apply(tm, BeamSplitter(1.0 - gamma));
  return FockVector(o.amps.col(anc_out), v.leaked);
}

Herald heralded_op(const FockVector& v, double gamma, Ladder kind) {
  require_normalized(v.norm_squared(), "heralded_op");
  const FockVector b = herald_branch(v, gamma, kind);
  const double p = b.norm_squared() / v.norm_squared();
  if (!(p >= 1e-300))
    throw DegenerateHeraldError("heralded_op: herald probability is zero", p);
  Normalized n = normalize(b);
  return {std::move(n.state), p};
}

FockVector kraus_apply(const FockVector& v, double gamma, Ladder kind,
                       KrausForm form) {
  check_gamma(gamma, "kraus_apply");
  const std::size_t N = v.trunc();
  const double sg = std::sqrt(gamma);
  FockVector out(N);
  out.leaked = v.leaked;
  if (N == 0) return out;
  if (kind == Ladder::subtract) {
    for (std::size_t n = 0; n + 1 < N; ++n)
      out.amps(Eigen::Index(n)) = sg * damping(gamma, 0.5 * double(n)) *
                                  std::sqrt(double(n + 1)) *
                                  v.amps(Eigen::Index(n + 1));
    return out;
  }
  // Output level n comes from input level n - 1.
  auto coeff = [&](std::size_t n) {
    const double hp = form == KrausForm::circuit ? 0.5 * double(n - 1)
                                                 : 0.5 * double(n + 1);
    return sg * std::sqrt(double(n)) * damping(gamma, hp);
  };
  for (std::size_t n = 1; n < N; ++n)
    out.amps(Eigen::Index(n)) = coeff(n) * v.amps(Eigen::Index(n - 1));
  out.leaked += std::norm(coeff(N) * v.amps(Eigen::Index(N - 1)));
  return out;
}

namespace {

std::vector<Ladder> stages(SchemeTag s) {
  const SchemeWord& w = word_of(s);
  return {w.ops.rbegin(), w.ops.rend()};
}

double success_row(const FockVector& row, SchemeTag s, double gamma,
                   KrausForm form) {
  FockVector v = row.resized(row.trunc() + 2);
  for (Ladder op : stages(s)) v = kraus_apply(v, gamma, op, form);
  return v.norm_squared();
}

void check_input_tail(double norm_squared, const char* who) {
  const double lost = 1.0 - norm_squared;
  if (lost > 1e-12)
    throw TruncationError(std::string(who) + ": input truncation drops mass",
                          lost);
}

SimVsKraus compare_rows(const std::vector<FockVector>& rows, SchemeTag s,
                        StageCouplings g) {
  check_gamma(g.first, "compare_sim_vs_kraus");
  check_gamma(g.second, "compare_sim_vs_kraus");
  const std::vector<Ladder> ops = stages(s);
  const double gs[2] = {g.first, g.second};
  double ps = 0.0, pk = 0.0;
  complex ov = 0.0;
  double leak = 0.0;
  for (const FockVector& r : rows) {
    FockVector sim = r.resized(r.trunc() + 3);
    FockVector kr = sim;
    for (int i = 0; i < 2; ++i) {
      sim = herald_branch(sim, gs[i], ops[std::size_t(i)]);
      kr = kraus_apply(kr, gs[i], ops[std::size_t(i)]);
    }
    leak += kr.leaked;
    ps += sim.norm_squared();
    pk += kr.norm_squared();
    ov += inner(sim, kr);
  }
  if (leak > kTruncEpsilon * pk)
    throw TruncationError("compare_sim_vs_kraus: Kraus branch leaked mass", leak);
  if (!(ps > 0.0) || !(pk > 0.0))
    throw DegenerateHeraldError("compare_sim_vs_kraus: zero herald probability",
                                std::min(ps, pk));
  return {ps, pk, std::norm(ov) / (ps * pk)};
}

}  // namespace

double scheme_success_prob(const FockVector& state, SchemeTag s, double gamma,
                           KrausForm form) {
  require_normalized(state.norm_squared(), "scheme_success_prob");
  return success_row(state, s, gamma, form);
}

double scheme_success_prob(const HybridState& state, SchemeTag s, double gamma,
                           KrausForm form) {
  require_normalized(state.norm_squared(), "scheme_success_prob");
  double p = 0.0;
  for (int j = 0; j < state.dv_dim(); ++j)
    p += success_row(state.row(j), s, gamma, form);
  return p;
}

SimVsKraus compare_sim_vs_kraus(const ScsSpec& spec, SchemeTag s,
                                StageCouplings gammas, std::size_t trunc) {
  FockVector psi = scs_state(spec, trunc);
  check_input_tail(psi.norm_squared(), "compare_sim_vs_kraus");
  psi = normalize(psi).state;
  return compare_rows({psi}, s, gammas);
}

SimVsKraus compare_sim_vs_kraus(const HesSpec& spec, SchemeTag s,
                                StageCouplings gammas, std::size_t trunc) {
  HybridState h = hes_state(spec, trunc);
  check_input_tail(h.norm_squared(), "compare_sim_vs_kraus");
  h.amps /= std::sqrt(h.norm_squared());
  std::vector<FockVector> rows;
  for (int j = 0; j < h.dv_dim(); ++j) rows.push_back(h.row(j));
  return compare_rows(rows, s, gammas);
}

SimVsKraus compare_sim_vs_kraus(const ScsSpec& spec, SchemeTag s, double gamma,
                                std::size_t trunc) {
  return compare_sim_vs_kraus(spec, s, StageCouplings{gamma, gamma}, trunc);
}

SimVsKraus compare_sim_vs_kraus(const HesSpec& spec, SchemeTag s, double gamma,
                                std::size_t trunc) {
  return compare_sim_vs_kraus(spec, s, StageCouplings{gamma, gamma}, trunc);
}

}  // namespace scamp

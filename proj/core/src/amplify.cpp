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

#include "scamp/amplify.hpp"

#include <algorithm>
#include <cmath>

#include "scamp/errors.hpp"
#include "scamp/lattice.hpp"

namespace scamp {

namespace {

void check_leak(double leaked, double kept, const char* who) {
  const double total = leaked + kept;
  if (total > 0.0 && leaked > kTruncEpsilon * total)
    throw TruncationError(std::string(who) + ": mass leaked past the truncation",
                          leaked / total);
}

std::size_t max_degree(const LadderPolynomial& p) {
  std::size_t m = 0;
  for (const auto& t : p) m = std::max<std::size_t>(m, std::size_t(t.word.additions()));
  return m;
}

}  // namespace

FockVector apply_word_raw(const FockVector& v, const SchemeWord& w) {
  FockVector out = v;
  for (auto it = w.ops.rbegin(); it != w.ops.rend(); ++it) out = ladder(out, *it);
  return out;
}

Amplified apply_word(const FockVector& v, const SchemeWord& w) {
  FockVector fresh = v;
  fresh.leaked = 0.0;
  const FockVector out = apply_word_raw(fresh, w);
  const double kept = out.norm_squared();
  if (!(kept > 0.0)) throw DegenerateError("apply_word: result is the zero vector");
  check_leak(out.leaked, kept, "apply_word");
  Normalized n = normalize(out);
  return {std::move(n.state), n.norm};
}

AmplifiedHybrid hes_amplified(const HesSpec& spec, const SchemeWord& w,
                              std::size_t trunc) {
  const HybridState in = hes_state(spec, trunc);
  HybridState out;
  out.amps = Eigen::MatrixXcd::Zero(in.amps.rows(), in.amps.cols());
  double leaked = 0.0;
  for (int j = 0; j < in.dv_dim(); ++j) {
    const FockVector r = apply_word_raw(in.row(j), w);
    leaked += r.leaked;
    out.set_row(j, r);
  }
  const double kept = out.norm_squared();
  if (!(kept > 0.0)) throw DegenerateError("hes_amplified: result is the zero vector");
  check_leak(leaked, kept, "hes_amplified");
  const double nrm = std::sqrt(kept);
  out.amps /= nrm;
  return {std::move(out), nrm};
}

AmplifiedScs scs_amplified(const ScsSpec& spec, const SchemeWord& w,
                           std::size_t trunc) {
  ScsBuild b = scs_build(spec, trunc);
  if (b.construction != ScsConstruction::fock_limit)
    b.state.amps *= scs_raw_norm(spec);
  const Amplified a = apply_word(b.state, w);
  return {a.state, a.raw_norm, b.construction};
}

double hes_norm_factor_amplified(double alpha, const SchemeWord& w) {
  if (!std::isfinite(alpha) || alpha < 0.0)
    throw PreconditionError("hes_norm_factor_amplified: alpha must be finite, >= 0");
  const double x = alpha * alpha;
  if (w == kAadag) return 1.0 / std::sqrt(x * x + 3.0 * x + 1.0);
  if (w == kAdag2) return 1.0 / std::sqrt(x * x + 4.0 * x + 2.0);
  const std::size_t trunc = auto_trunc(alpha, w.additions());
  const FockVector out = apply_word_raw(coherent(alpha, trunc), w);
  const double kept = out.norm_squared();
  if (!(kept > 0.0))
    throw DegenerateError("hes_norm_factor_amplified: word annihilates the state");
  check_leak(out.leaked, kept, "hes_norm_factor_amplified");
  return 1.0 / std::sqrt(kept);
}

double scs_norm_factor_amplified(const ScsSpec& spec, const SchemeWord& w) {
  validate(spec);
  const double x = spec.alpha * spec.alpha;
  const int d = spec.d;
  const long k = spec.k;
  if (w == kAadag || w == kAdag2) {
    const double c1 = w == kAadag ? 3.0 : 4.0;
    const double c0 = w == kAadag ? 1.0 : 2.0;
    const double s = x * x * omega_sum(2 - k, x, d) +
                     c1 * x * omega_sum(1 - k, x, d) + c0 * omega_sum(-k, x, d);
    if (!(s > 0.0))
      throw DegenerateError("scs_norm_factor_amplified: vanishing denominator");
    return 1.0 / std::sqrt(d * s);
  }
  const std::size_t trunc = scs_auto_trunc(spec.alpha, spec.d, w.additions());
  const AmplifiedScs a = scs_amplified(spec, w, trunc);
  if (a.construction == ScsConstruction::fock_limit)
    throw DegenerateError("scs_norm_factor_amplified: vanishing superposition");
  return 1.0 / a.raw_norm;
}

FockVector apply_polynomial(const FockVector& v, const LadderPolynomial& p) {
  FockVector out(v.trunc());
  for (const auto& t : p) {
    const FockVector r = apply_word_raw(v, t.word);
    out.amps += t.coeff * r.amps;
    out.leaked += std::norm(t.coeff) * r.leaked;
  }
  return out;
}

ExpectationPair prop1_pair(const HesSpec& spec, const LadderPolynomial& p) {
  for (const auto& t : p)
    if (t.word.net_change() != 0)
      throw PreconditionError("prop1_pair: every term must be balanced");
  const std::size_t trunc = auto_trunc(spec.alpha, int(max_degree(p)) + 2);
  const HybridState h = hes_state(spec, trunc);
  complex xh = 0.0;
  for (int j = 0; j < h.dv_dim(); ++j) {
    const FockVector r = h.row(j);
    xh += inner(r, apply_polynomial(r, p));
  }
  const FockVector c = coherent(spec.alpha, trunc);
  return {xh, inner(c, apply_polynomial(c, p))};
}

ExpectationPair prop2_pair(double alpha, double beta, int d, int k,
                           const LadderPolynomial& q) {
  if (q.empty()) return {0.0, 0.0};
  const int l = q.front().word.net_change();
  for (const auto& t : q)
    if (t.word.net_change() != l)
      throw PreconditionError("prop2_pair: terms have different imbalance");
  const std::size_t trunc =
      auto_trunc(std::max(alpha, beta), int(max_degree(q)) + 2);
  const HybridState in = hes_state(HesSpec{alpha, d, k}, trunc);
  const HybridState tgt = hes_state(HesSpec{beta, d, mod_d(long(k) + l, d)}, trunc);
  complex xh = 0.0;
  for (int j = 0; j < d; ++j)
    xh += inner(tgt.row(j), apply_polynomial(in.row(j), q));
  const FockVector a = coherent(alpha, trunc), b = coherent(beta, trunc);
  return {xh, inner(b, apply_polynomial(a, q))};
}

}  // namespace scamp

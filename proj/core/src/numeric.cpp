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

#include "scamp/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "scamp/amplify.hpp"
#include "scamp/states.hpp"

namespace scamp {

namespace {

std::size_t pick(std::size_t trunc, double amp) {
  return trunc ? trunc : auto_trunc(amp, 2);
}

double var4(const std::vector<double>& p) {
  double tot = 0.0, m1 = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    tot += p[n];
    m1 += double(n) * p[n];
  }
  m1 /= tot;
  double v = 0.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double dn = double(n) - m1;
    v += dn * dn * p[n];
  }
  return 4.0 * v / tot;
}

}  // namespace

double numeric_hes_fidelity(double alpha, double g, int d, int k, SchemeTag s,
                            std::size_t trunc) {
  const std::size_t N = pick(trunc, std::max(alpha, g * alpha));
  const AmplifiedHybrid a = hes_amplified(HesSpec{alpha, d, k}, word_of(s), N);
  HybridState t = hes_state(HesSpec{g * alpha, d, target_index(k, d, s)}, N);
  t.amps /= std::sqrt(t.norm_squared());
  return std::norm(inner(t, a.state));
}

double numeric_scs_fidelity(double alpha, double g, int d, int k, SchemeTag s,
                            std::size_t trunc) {
  const std::size_t N =
      trunc ? trunc : scs_auto_trunc(std::max(alpha, g * alpha), d, 2);
  const AmplifiedScs a = scs_amplified(ScsSpec{alpha, d, k}, word_of(s), N);
  const FockVector t =
      normalize(scs_state(ScsSpec{g * alpha, d, target_index(k, d, s)}, N)).state;
  return std::norm(inner(t, a.state));
}

double numeric_hes_qfi(double alpha, int d, int k, std::optional<SchemeTag> s,
                       std::size_t trunc) {
  const std::size_t N = pick(trunc, alpha);
  if (!s) return var4(photon_distribution(hes_state(HesSpec{alpha, d, k}, N)));
  return var4(photon_distribution(
      hes_amplified(HesSpec{alpha, d, k}, word_of(*s), N).state));
}

double numeric_scs_qfi(double alpha, int d, int k, std::optional<SchemeTag> s,
                       std::size_t trunc) {
  const std::size_t N = trunc ? trunc : scs_auto_trunc(alpha, d, 2);
  if (!s) return var4(photon_distribution(scs_state(ScsSpec{alpha, d, k}, N)));
  return var4(photon_distribution(
      scs_amplified(ScsSpec{alpha, d, k}, word_of(*s), N).state));
}

}  // namespace scamp

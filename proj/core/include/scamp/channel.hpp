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

#include <Eigen/Dense>
#include <cstddef>

#include "scamp/fock.hpp"
#include "scamp/hybrid.hpp"
#include "scamp/scheme.hpp"
#include "scamp/states.hpp"

namespace scamp {

/** U = exp[i theta (a^dag b + a b^dag)] with transmissivity gamma = cos^2 theta. */
class BeamSplitter {
 public:
  explicit BeamSplitter(double gamma);
  double gamma() const { return gamma_; }
  double theta() const { return theta_; }

 private:
  double gamma_;
  double theta_;
};

/** Amplitudes indexed (system photons, ancilla photons); square. */
struct TwoModeFock {
  Eigen::MatrixXcd amps;

  std::size_t trunc() const { return std::size_t(amps.rows()); }
};

/**
 * Exact on every block of total photon number below the truncation. Mass
 * on higher totals cannot be represented and raises TruncationError.
 */
TwoModeFock bs_apply(const TwoModeFock& state, const BeamSplitter& bs);

struct Herald {
  FockVector state;
  double probability;
};

/**
 * Heralded addition (ancilla |1>, detect vacuum) or subtraction (ancilla
 * |0>, detect one photon). `gamma` is the per-photon exchange probability of
 * the heralding beam splitter, whose transmissivity is therefore 1 - gamma.
 * The output has one more level than the input.
 */
Herald heralded_op(const FockVector& v, double gamma, Ladder kind);

/** Circuit branch amplitude without renormalization; one extra level. */
FockVector herald_branch(const FockVector& v, double gamma, Ladder kind);

enum class KrausForm {
  circuit,  ///< K+ = sqrt(g) a^dag (1-g)^{n/2}, exact for the circuit
  printed   ///< K+ = sqrt(g) (1-g)^{(n+1)/2} a^dag
};

/**
 * K- = sqrt(g) (1-g)^{n/2} a or the selected K+, on the input truncation.
 * Creation past the top level is recorded in `leaked`.
 */
FockVector kraus_apply(const FockVector& v, double gamma, Ladder kind,
                       KrausForm form = KrausForm::circuit);

/** ||K- K+ psi||^2 (AADAG) or ||K+ K+ psi||^2 (ADAG2). */
double scheme_success_prob(const FockVector& state, SchemeTag s, double gamma,
                           KrausForm form = KrausForm::circuit);
double scheme_success_prob(const HybridState& state, SchemeTag s, double gamma,
                           KrausForm form = KrausForm::circuit);

struct SimVsKraus {
  double p_sim;
  double p_kraus;
  double state_fidelity;
};

/** Per-stage couplings; the first acts first. */
struct StageCouplings {
  double first;
  double second;
};

SimVsKraus compare_sim_vs_kraus(const ScsSpec& spec, SchemeTag s, double gamma,
                                std::size_t trunc);
SimVsKraus compare_sim_vs_kraus(const HesSpec& spec, SchemeTag s, double gamma,
                                std::size_t trunc);
SimVsKraus compare_sim_vs_kraus(const ScsSpec& spec, SchemeTag s,
                                StageCouplings gammas, std::size_t trunc);
SimVsKraus compare_sim_vs_kraus(const HesSpec& spec, SchemeTag s,
                                StageCouplings gammas, std::size_t trunc);

}  // namespace scamp

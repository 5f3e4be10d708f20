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

#include <cstddef>
#include <vector>

#include "scamp/fock.hpp"
#include "scamp/hybrid.hpp"

namespace scamp {

/** Cat-state qudit C^k_{alpha,d}. d = 1 is the coherent state. */
struct ScsSpec {
  double alpha = 0.0;
  int d = 2;
  int k = 0;
};

/** Hybrid entangled qudit H^k_{alpha,d}. */
struct HesSpec {
  double alpha = 0.0;
  int d = 2;
  int k = 0;
};

void validate(const ScsSpec& spec);
void validate(const HesSpec& spec);

/** delta_{m,k;d}: true iff m = k (mod d). */
bool modular_delta(long m, long k, int d);

/** How an SCS vector was assembled. */
enum class ScsConstruction {
  superposition,  ///< literal sum of d coherent states
  pseudo_number,  ///< residue-class photon-number expansion
  fock_limit      ///< |k>, the alpha -> 0 limit
};

struct ScsBuild {
  FockVector state;
  ScsConstruction construction;
};

/** Normalized C^k_{alpha,d} together with how it was built. */
ScsBuild scs_build(const ScsSpec& spec, std::size_t trunc);
FockVector scs_state(const ScsSpec& spec, std::size_t trunc);

/** Unnormalized sum_n omega^{-kn} |alpha omega^n>. */
FockVector scs_superposition(const ScsSpec& spec, std::size_t trunc);

/** 2-norm of scs_superposition without truncation. */
double scs_raw_norm(const ScsSpec& spec);

/**
 * auto_trunc widened by d levels: the tail of an SCS is measured against the
 * mass of its own residue class, which starts at photon number k.
 */
std::size_t scs_auto_trunc(double alpha, int d, int additions);

/** N_{k,alpha,d}. */
double scs_norm_factor(const ScsSpec& spec);

HybridState hes_state(const HesSpec& spec, std::size_t trunc);

std::vector<double> photon_distribution(const FockVector& v);
/** CV-mode photon distribution with the DV index traced out. */
std::vector<double> photon_distribution(const HybridState& s);

/** Norm of a^dag^m |alpha>. */
double addition_norm_factor(double alpha, int m);

/** <H^l_beta| (I x a^dag^m) |H^k_alpha>, divided by addition_norm_factor. */
double addition_overlap(double alpha, double beta, int d, int k, int l, int m);

struct BetaOptimum {
  double beta;
  double fidelity;
};

/** Target amplitude maximizing the squared m-addition overlap. */
BetaOptimum optimal_beta(double alpha, int m, int d);

}  // namespace scamp

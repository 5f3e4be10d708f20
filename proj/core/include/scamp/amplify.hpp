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
#include "scamp/scheme.hpp"
#include "scamp/states.hpp"

namespace scamp {

/** Normalized output of a word together with the pre-normalization norm. */
struct Amplified {
  FockVector state;
  double raw_norm;
};

struct AmplifiedHybrid {
  HybridState state;
  double raw_norm;
};

struct AmplifiedScs {
  FockVector state;
  double raw_norm;
  ScsConstruction construction;
};

/** Apply an unnormalized word, no leak check. */
FockVector apply_word_raw(const FockVector& v, const SchemeWord& w);

/** Apply `w` and renormalize. Throws on a zero result or on leaked mass. */
Amplified apply_word(const FockVector& v, const SchemeWord& w);

/** `w` on the CV mode of the normalized HES, one global renormalization. */
AmplifiedHybrid hes_amplified(const HesSpec& spec, const SchemeWord& w,
                              std::size_t trunc);

/**
 * `w` on the unnormalized sum sum_n omega^{-kn}|alpha omega^n>, so that
 * raw_norm is the reciprocal of scs_norm_factor_amplified. In the Fock
 * limit the word acts on |k> and raw_norm refers to that vector.
 */
AmplifiedScs scs_amplified(const ScsSpec& spec, const SchemeWord& w,
                           std::size_t trunc);

/** 1 / sqrt(<alpha| W^dag W |alpha>). */
double hes_norm_factor_amplified(double alpha, const SchemeWord& w);

/** 1 / ||W sum_n omega^{-kn}|alpha omega^n>||. */
double scs_norm_factor_amplified(const ScsSpec& spec, const SchemeWord& w);

/** c * word; a polynomial is a sum of such terms. */
struct LadderTerm {
  complex coeff;
  SchemeWord word;
};
using LadderPolynomial = std::vector<LadderTerm>;

/** Apply a polynomial to a vector without renormalization. */
FockVector apply_polynomial(const FockVector& v, const LadderPolynomial& p);

struct ExpectationPair {
  complex x_hes;
  complex x_coh;
};

/** <H|P|H> on the CV mode and <alpha|P|alpha>; P must be balanced. */
ExpectationPair prop1_pair(const HesSpec& spec, const LadderPolynomial& p);

/**
 * <H^{k+l}_beta|Q|H^k_alpha> and <beta|Q|alpha>, with every term of Q
 * having net photon change l.
 */
ExpectationPair prop2_pair(double alpha, double beta, int d, int k,
                           const LadderPolynomial& q);

}  // namespace scamp

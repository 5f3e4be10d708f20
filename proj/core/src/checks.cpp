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

#include "scamp/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <vector>

#include "scamp/amplify.hpp"
#include "scamp/analytic.hpp"
#include "scamp/channel.hpp"
#include "scamp/errors.hpp"
#include "scamp/lattice.hpp"
#include "scamp/numeric.hpp"
#include "scamp/optimize.hpp"
#include "scamp/states.hpp"

namespace scamp {

std::optional<CheckLevel> parse_check_level(std::string_view text) {
  if (text == "quick") return CheckLevel::quick;
  if (text == "full") return CheckLevel::full;
  return std::nullopt;
}

ClosedForms default_closed_forms() {
  ClosedForms f;
  f.hes_fidelity = [](double a, double g, SchemeTag s) { return hes_fidelity(a, g, s); };
  f.hes_gain = [](double a, SchemeTag s) { return hes_gain(a, s); };
  f.hes_qfi = [](double a, std::optional<SchemeTag> s) { return hes_qfi(a, s); };
  f.scs_fidelity = [](double a, double g, int d, int k, SchemeTag s) {
    return scs_fidelity(a, g, d, k, s);
  };
  f.scs_qfi = [](double a, int d, int k, std::optional<SchemeTag> s) {
    return scs_qfi(a, d, k, s);
  };
  return f;
}

namespace {

struct Probe {
  bool ok = true;
  double worst = 0.0;
  std::string first;

  // Records |deviation| against tol; the first violation is kept.
  void dev(double deviation, double tol, const std::string& where) {
    const double a = std::abs(deviation);
    if (!(a <= tol)) {
      if (ok) {
        std::ostringstream s;
        s << "at " << where << ": deviation " << a << " > " << tol;
        first = s.str();
      }
      ok = false;
    }
    if (std::isnan(a) || a > worst) worst = std::isnan(a) ? INFINITY : a;
  }

  void require(bool cond, const std::string& where) {
    if (!cond && ok) first = "at " + where + ": condition violated";
    ok = ok && cond;
  }
};

struct Grid {
  std::vector<double> alphas;
  std::vector<double> gains;
  int d_max;
};

Grid make_grid(CheckLevel level) {
  Grid g;
  if (level == CheckLevel::quick) {
    g.alphas = {0.3, 1.2, 2.4};
    g.gains = {0.8, 1.4, 2.0};
    g.d_max = 5;
  } else {
    for (int i = 1; i <= 10; ++i) g.alphas.push_back(0.3 * i);
    for (int i = 0; i <= 6; ++i) g.gains.push_back(0.8 + 0.2 * i);
    g.d_max = 5;
  }
  return g;
}

std::string loc(std::initializer_list<std::pair<const char*, double>> kv) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : kv) {
    s << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return s.str();
}

const char* name(SchemeTag s) { return s == SchemeTag::aadag ? "aadag" : "adag2"; }

constexpr SchemeTag kSchemes[] = {SchemeTag::aadag, SchemeTag::adag2};

using CheckFn = std::function<Probe(const Grid&, const ClosedForms&)>;

struct Check {
  const char* name;
  CheckFn fn;
};

// -- fock ------------------------------------------------------------------

Probe fock_ladder_commutator(const Grid&, const ClosedForms&) {
  Probe p;
  const std::size_t N = 24;
  for (std::size_t n = 0; n + 1 < N; ++n) {
    const FockVector v = number_state(n, N);
    const FockVector as = ladder(ladder(v, Ladder::add), Ladder::subtract);
    const FockVector sa = ladder(ladder(v, Ladder::subtract), Ladder::add);
    p.dev(std::abs(as[n] - complex(double(n + 1))), 1e-12, loc({{"n", double(n)}}));
    p.dev(std::abs(sa[n] - complex(double(n))), 1e-12, loc({{"n", double(n)}}));
  }
  return p;
}

Probe fock_adjointness(const Grid&, const ClosedForms&) {
  Probe p;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  const std::size_t N = 16;
  for (int t = 0; t < 20; ++t) {
    FockVector u(N), v(N);
    for (std::size_t n = 0; n + 1 < N; ++n) {
      u.amps(Eigen::Index(n)) = complex(nd(rng), nd(rng));
      v.amps(Eigen::Index(n)) = complex(nd(rng), nd(rng));
    }
    const complex l = inner(ladder(u, Ladder::add), v);
    const complex r = inner(u, ladder(v, Ladder::subtract));
    p.dev(std::abs(l - r), 1e-10, loc({{"trial", double(t)}}));
  }
  return p;
}

Probe fock_coherent_moments(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas) {
    const FockVector c = coherent(a, auto_trunc(a, 0));
    const Moments m = moments(normalize(c).state);
    p.dev(m.mean_n - a * a, 1e-10, loc({{"alpha", a}}));
    p.dev(m.var_n - a * a, 1e-10, loc({{"alpha", a}}));
    for (std::size_t n = 0; n < c.trunc(); ++n)
      p.require(c[n].real() >= 0.0 && c[n].imag() == 0.0, loc({{"alpha", a}}));
  }
  return p;
}

Probe fock_min_trunc_monotone(const Grid&, const ClosedForms&) {
  Probe p;
  std::size_t prev = 0;
  for (int i = 0; i <= 40; ++i) {
    const double a = 0.1 * i;
    const std::size_t n = min_trunc(a, 1e-12);
    p.require(n >= prev, loc({{"alpha", a}}));
    p.require(poisson_tail(a, n) < 1e-12 && (n == 1 || poisson_tail(a, n - 1) >= 1e-12),
              loc({{"alpha", a}}));
    p.require(min_trunc(a, 1e-8) <= n, loc({{"alpha", a}}));
    prev = n;
  }
  return p;
}

// -- states ----------------------------------------------------------------

Probe states_scs_gram(const Grid&, const ClosedForms&) {
  Probe p;
  for (double a : {0.5, 1.0, 2.0})
    for (int d = 2; d <= 5; ++d) {
      const std::size_t N = auto_trunc(a, 0);
      std::vector<FockVector> b;
      for (int k = 0; k < d; ++k) b.push_back(scs_state(ScsSpec{a, d, k}, N));
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          p.dev(std::abs(inner(b[std::size_t(k)], b[std::size_t(l)]) -
                         complex(k == l ? 1.0 : 0.0)),
                1e-10, loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}, {"l", double(l)}}));
    }
  return p;
}

Probe states_hes_gram(const Grid&, const ClosedForms&) {
  Probe p;
  for (double a : {0.5, 1.3, 2.0})
    for (int d = 2; d <= 5; ++d) {
      const std::size_t N = auto_trunc(a, 0);
      std::vector<HybridState> b;
      for (int k = 0; k < d; ++k) b.push_back(hes_state(HesSpec{a, d, k}, N));
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          p.dev(std::abs(inner(b[std::size_t(k)], b[std::size_t(l)]) -
                         complex(k == l ? 1.0 : 0.0)),
                1e-10, loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}, {"l", double(l)}}));
    }
  return p;
}

Probe states_pseudo_number(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (int d = 2; d <= g.d_max; ++d)
      for (int k = 0; k < d; ++k) {
        const auto pr = photon_distribution(scs_state(ScsSpec{a, d, k}, scs_auto_trunc(a, d, 0)));
        double off = 0.0;
        for (std::size_t n = 0; n < pr.size(); ++n)
          if (!modular_delta(long(n), k, d)) off += pr[n];
        p.dev(off, 1e-20, loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}));
      }
  return p;
}

Probe states_hes_poisson(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (int d = 2; d <= g.d_max; ++d)
      for (int k = 0; k < d; ++k) {
        const std::size_t N = auto_trunc(a, 0);
        const auto h = photon_distribution(hes_state(HesSpec{a, d, k}, N));
        const auto c = photon_distribution(coherent(a, N));
        for (std::size_t n = 0; n < N; ++n)
          p.dev(h[n] - c[n], 1e-10, loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}));
      }
  return p;
}

Probe states_addition_overlap(const Grid&, const ClosedForms&) {
  Probe p;
  for (double a : {0.5, 1.0, 2.0, 3.0})
    for (double b : {0.5, 1.0, 2.0, 3.0})
      for (int m = 0; m <= 4; ++m)
        for (int d = 2; d <= 5; ++d) {
          const std::size_t N = auto_trunc(std::max(a, b) + 1.0, m);
          const int k = 1 % d;
          const HybridState in = hes_state(HesSpec{a, d, k}, N);
          SchemeWord w;
          w.ops.assign(std::size_t(m), Ladder::add);
          for (int l = 0; l < d; ++l) {
            const HybridState t = hes_state(HesSpec{b, d, l}, N);
            complex ov = 0.0;
            for (int j = 0; j < d; ++j) ov += inner(t.row(j), apply_word_raw(in.row(j), w));
            const double brute = ov.real() / addition_norm_factor(a, m);
            p.dev(brute - addition_overlap(a, b, d, k, l, m), 1e-8,
                  loc({{"alpha", a}, {"beta", b}, {"m", double(m)}, {"d", double(d)}, {"l", double(l)}}));
          }
        }
  return p;
}

Probe states_quadrature_zero(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (int d = 2; d <= g.d_max; ++d)
      for (int k = 0; k < d; ++k) {
        const std::size_t N = scs_auto_trunc(a, d, 0);
        const FockVector c = normalize(scs_state(ScsSpec{a, d, k}, N)).state;
        HybridState h = hes_state(HesSpec{a, d, k}, N);
        h.amps /= std::sqrt(h.norm_squared());
        for (int i = 0; i < 16; ++i) {
          const double lam = 2.0 * std::numbers::pi * i / 16.0;
          const std::string w = loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}, {"lambda", lam}});
          p.dev(quadrature_expect(c, lam), 1e-10, w);
          p.dev(quadrature_expect(h, lam), 1e-10, w);
        }
      }
  return p;
}

// -- amplify ---------------------------------------------------------------

Probe amplify_subtract_exact(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (int d = 2; d <= g.d_max; ++d)
      for (int k = 0; k < d; ++k)
        for (int m = 1; m <= 3; ++m) {
          const std::size_t N = auto_trunc(a, 0) + 10;
          SchemeWord w;
          w.ops.assign(std::size_t(m), Ladder::subtract);
          const AmplifiedHybrid out = hes_amplified(HesSpec{a, d, k}, w, N);
          HybridState t = hes_state(HesSpec{a, d, mod_d(k - m, d)}, N);
          t.amps /= std::sqrt(t.norm_squared());
          p.dev(1.0 - std::norm(inner(t, out.state)), 1e-12,
                loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}, {"m", double(m)}}));
        }
  return p;
}

Probe amplify_norm_factors(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (SchemeTag s : kSchemes)
      for (int d = 1; d <= g.d_max; ++d)
        for (int k = 0; k < d; ++k) {
          const std::size_t N = scs_auto_trunc(a, d, 2);
          const std::string w = loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}});
          const double hes_raw = hes_amplified(HesSpec{a, d, k}, word_of(s), N).raw_norm;
          p.dev(hes_raw * hes_norm_factor_amplified(a, word_of(s)) - 1.0, 1e-10, w);
          const double scs_raw = scs_amplified(ScsSpec{a, d, k}, word_of(s), N).raw_norm;
          p.dev(scs_raw * scs_norm_factor_amplified(ScsSpec{a, d, k}, word_of(s)) - 1.0,
                1e-10, w);
        }
  return p;
}

LadderPolynomial random_polynomial(std::mt19937_64& rng, int l) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::normal_distribution<double> nd;
  LadderPolynomial poly;
  const int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    // Degree <= 4 with the requested imbalance.
    const int max_pairs = (4 - std::abs(l)) / 2;
    std::uniform_int_distribution<int> pick(0, max_pairs);
    const int pairs = pick(rng);
    const int adds = pairs + std::max(l, 0), subs = pairs + std::max(-l, 0);
    std::vector<Ladder> ops;
    ops.insert(ops.end(), std::size_t(adds), Ladder::add);
    ops.insert(ops.end(), std::size_t(subs), Ladder::subtract);
    std::shuffle(ops.begin(), ops.end(), rng);
    poly.push_back({complex(nd(rng), nd(rng)), SchemeWord{ops}});
  }
  return poly;
}

Probe amplify_propositions(const Grid&, const ClosedForms&) {
  Probe p;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ua(0.1, 2.0);
  std::uniform_int_distribution<int> ul(-2, 2);
  for (int t = 0; t < 60; ++t) {
    const int d = 1 + t % 5;
    const int k = int(rng() % std::uint64_t(d));
    const double a = ua(rng), b = ua(rng);
    const LadderPolynomial bal = random_polynomial(rng, 0);
    const ExpectationPair e1 = prop1_pair(HesSpec{a, d, k}, bal);
    p.dev(std::abs(e1.x_hes - e1.x_coh), 1e-10, loc({{"prop", 1}, {"trial", double(t)}}));
    const LadderPolynomial q = random_polynomial(rng, ul(rng));
    const ExpectationPair e2 = prop2_pair(a, b, d, k, q);
    p.dev(std::abs(e2.x_hes - e2.x_coh), 1e-10, loc({{"prop", 2}, {"trial", double(t)}}));
  }
  return p;
}

// -- analytic --------------------------------------------------------------

Probe analytic_hes_fidelity(const Grid& g, const ClosedForms& f) {
  Probe p;
  for (double a : g.alphas)
    for (double gain : g.gains)
      for (SchemeTag s : kSchemes)
        for (int d = 1; d <= 3; ++d)
          for (int k = 0; k < d; ++k)
            p.dev(f.hes_fidelity(a, gain, s) - numeric_hes_fidelity(a, gain, d, k, s), 1e-8,
                  loc({{"alpha", a}, {"g", gain}, {"d", double(d)}, {"k", double(k)}}) +
                      " scheme=" + name(s));
  return p;
}

Probe analytic_scs_fidelity(const Grid& g, const ClosedForms& f) {
  Probe p;
  for (double a : g.alphas)
    for (double gain : g.gains)
      for (SchemeTag s : kSchemes)
        for (int d = 1; d <= g.d_max; ++d)
          for (int k = 0; k < d; ++k)
            p.dev(f.scs_fidelity(a, gain, d, k, s) - numeric_scs_fidelity(a, gain, d, k, s),
                  1e-8,
                  loc({{"alpha", a}, {"g", gain}, {"d", double(d)}, {"k", double(k)}}) +
                      " scheme=" + name(s));
  return p;
}

Probe analytic_hes_qfi(const Grid& g, const ClosedForms& f) {
  Probe p;
  const std::optional<SchemeTag> opts[] = {std::nullopt, SchemeTag::aadag, SchemeTag::adag2};
  for (double a : g.alphas)
    for (auto s : opts)
      for (int d = 1; d <= 3; ++d)
        for (int k = 0; k < d; ++k) {
          const double num = numeric_hes_qfi(a, d, k, s);
          p.dev((f.hes_qfi(a, s) - num) / num, 1e-8,
                loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) + " scheme=" +
                    (s ? name(*s) : "none"));
        }
  return p;
}

Probe analytic_scs_qfi(const Grid& g, const ClosedForms& f) {
  Probe p;
  const std::optional<SchemeTag> opts[] = {std::nullopt, SchemeTag::aadag, SchemeTag::adag2};
  for (double a : g.alphas)
    for (auto s : opts)
      for (int d = 1; d <= g.d_max; ++d)
        for (int k = 0; k < d; ++k) {
          const double num = numeric_scs_qfi(a, d, k, s);
          p.dev((f.scs_qfi(a, d, k, s) - num) / num, 1e-8,
                loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) + " scheme=" +
                    (s ? name(*s) : "none"));
        }
  return p;
}

Probe analytic_gain_stationarity(const Grid& g, const ClosedForms& f) {
  Probe p;
  const double h = 1e-5;
  for (double a : g.alphas)
    for (SchemeTag s : kSchemes) {
      const double G = f.hes_gain(a, s);
      const double deriv = (f.hes_fidelity(a, G + h, s) - f.hes_fidelity(a, G - h, s)) / (2 * h);
      p.dev(deriv, 1e-6, loc({{"alpha", a}}) + " scheme=" + name(s));
    }
  return p;
}

Probe analytic_scheme_ordering(const Grid& g, const ClosedForms& f) {
  Probe p;
  for (double a : g.alphas) {
    const double g1 = f.hes_gain(a, SchemeTag::aadag), g2 = f.hes_gain(a, SchemeTag::adag2);
    p.require(f.hes_fidelity(a, g1, SchemeTag::aadag) > f.hes_fidelity(a, g2, SchemeTag::adag2),
              loc({{"alpha", a}}) + " fidelity ordering");
    p.require(g2 > g1, loc({{"alpha", a}}) + " gain ordering");
  }
  return p;
}

Probe analytic_normalized_qfi(const Grid& g, const ClosedForms& f) {
  Probe p;
  for (double a : g.alphas)
    for (SchemeTag s : kSchemes)
      p.require(f.hes_qfi(a, s) / f.hes_qfi(a, std::nullopt) >= 1.0,
                loc({{"alpha", a}}) + " scheme=" + name(s));
  return p;
}

Probe analytic_scs_qfi_shape(const Grid&, const ClosedForms& f) {
  Probe p;
  for (int k = 0; k < 2; ++k) {
    double prev = -1.0;
    for (int i = 1; i <= 300; ++i) {
      const double a = 0.01 * i, q = f.scs_qfi(a, 2, k, std::nullopt);
      p.require(q > prev, loc({{"alpha", a}, {"d", 2}, {"k", double(k)}}) + " monotone");
      prev = q;
    }
  }
  bool decreasing_somewhere = false;
  double prev = -1.0;
  for (int i = 1; i <= 300; ++i) {
    const double q = f.scs_qfi(0.01 * i, 5, 0, std::nullopt);
    if (q < prev) decreasing_somewhere = true;
    prev = q;
  }
  p.require(decreasing_somewhere, "d=5 k=0 non-monotone");
  return p;
}

Probe analytic_normal_ordering(const Grid&, const ClosedForms&) {
  Probe p;
  for (const IdentityReport& r : verify_normal_ordering_identities(20))
    p.dev(r.max_deviation, 1e-9, r.name);
  return p;
}

Probe analytic_spectral_qfi(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (int d = 2; d <= 3; ++d) {
      const FockVector v = normalize(scs_state(ScsSpec{a, d, 0}, scs_auto_trunc(a, d, 0))).state;
      const double spec = qfi_spectral(DensityMatrix::from_pure(v));
      p.dev(spec - 4.0 * moments(v).var_n, 1e-6, loc({{"alpha", a}, {"d", double(d)}}));
    }
  return p;
}

// -- optimize --------------------------------------------------------------

// Dense scan: step 1e-2 over the gain domain, then 1e-4 around the best cell.
std::pair<double, double> scan(const std::function<double(double)>& f) {
  double bx = kGainLower, bv = f(bx);
  for (double x = 0.01; x <= kGainUpper + 1e-12; x += 0.01) {
    const double v = f(x);
    if (v > bv) bv = v, bx = x;
  }
  const double lo = std::max(kGainLower, bx - 0.02), hi = std::min(kGainUpper, bx + 0.02);
  for (double x = lo; x <= hi + 1e-12; x += 1e-4) {
    const double v = f(x);
    if (v > bv) bv = v, bx = x;
  }
  return {bx, bv};
}

Probe optimize_grid_agreement(const Grid& g, const ClosedForms&) {
  Probe p;
  const std::vector<double> alphas =
      g.alphas.size() <= 3 ? std::vector<double>{0.5, 2.0} : std::vector<double>{0.5, 1.0, 2.0};
  for (double a : alphas)
    for (SchemeTag s : kSchemes)
      for (int d = 1; d <= g.d_max; ++d)
        for (int k = 0; k < d; ++k) {
          const OptResult r = scs_gain(ScsSpec{a, d, k}, s);
          const auto [gx, gv] = scan([&](double x) { return scs_fidelity(a, x, d, k, s); });
          const std::string w =
              loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) + " scheme=" + name(s);
          p.dev(r.argmax - gx, 1e-3, w + " argmax");
          p.dev(std::min(r.value - gv, 0.0), 1e-8, w + " value");
        }
  return p;
}

Probe optimize_stationarity(const Grid& g, const ClosedForms&) {
  Probe p;
  for (double a : g.alphas)
    for (SchemeTag s : kSchemes)
      for (int d = 1; d <= g.d_max; ++d)
        for (int k = 0; k < d; ++k) {
          const OptResult r = scs_gain(ScsSpec{a, d, k}, s);
          if (r.boundary_hit) continue;
          const double h = 1e-5;
          const double deriv = (scs_fidelity(a, r.argmax + h, d, k, s) -
                                scs_fidelity(a, r.argmax - h, d, k, s)) / (2 * h);
          p.dev(deriv, 1e-5, loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) +
                                 " scheme=" + name(s));
        }
  return p;
}

// -- channel ---------------------------------------------------------------

Probe channel_bs_unitarity(const Grid&, const ClosedForms&) {
  Probe p;
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  const Eigen::Index N = 12;
  for (double gamma : {0.0, 0.01, 0.3, 0.5, 0.99, 1.0}) {
    TwoModeFock s;
    s.amps = Eigen::MatrixXcd::Zero(N, N);
    for (Eigen::Index i = 0; i < N; ++i)
      for (Eigen::Index j = 0; i + j < N; ++j) s.amps(i, j) = complex(nd(rng), nd(rng));
    s.amps /= s.amps.norm();
    const TwoModeFock o = bs_apply(s, BeamSplitter(gamma));
    p.dev(o.amps.squaredNorm() - 1.0, 1e-12, loc({{"gamma", gamma}}));
    for (Eigen::Index n = 0; n < N; ++n) {
      double in = 0.0, out = 0.0;
      for (Eigen::Index j = 0; j <= n; ++j) {
        in += std::norm(s.amps(j, n - j));
        out += std::norm(o.amps(j, n - j));
      }
      p.dev(in - out, 1e-12, loc({{"gamma", gamma}, {"block", double(n)}}));
    }
  }
  return p;
}

Probe channel_sim_vs_kraus(const Grid& g, const ClosedForms&) {
  Probe p;
  const std::vector<double> alphas =
      g.alphas.size() <= 3 ? std::vector<double>{0.5, 2.0} : std::vector<double>{0.5, 1.0, 1.5, 2.0};
  for (double gamma : {0.001, 0.01, 0.1})
    for (double a : alphas)
      for (SchemeTag s : kSchemes)
        for (int d = 2; d <= 4; ++d)
          for (int k = 0; k < d; ++k) {
            const std::string w = loc({{"gamma", gamma}, {"alpha", a}, {"d", double(d)},
                                       {"k", double(k)}}) + " scheme=" + name(s);
            const SimVsKraus c = compare_sim_vs_kraus(ScsSpec{a, d, k}, s, gamma, 30);
            p.dev((c.p_sim - c.p_kraus) / c.p_kraus, 1e-8, w + " scs probability");
            p.dev(1.0 - c.state_fidelity, 1e-10, w + " scs overlap");
            const SimVsKraus h = compare_sim_vs_kraus(HesSpec{a, d, k}, s, gamma, 30);
            p.dev((h.p_sim - h.p_kraus) / h.p_kraus, 1e-8, w + " hes probability");
            p.dev(1.0 - h.state_fidelity, 1e-10, w + " hes overlap");
          }
  return p;
}

double hes_prob(double a, int d, int k, SchemeTag s, double gamma) {
  HybridState h = hes_state(HesSpec{a, d, k}, 30);
  h.amps /= std::sqrt(h.norm_squared());
  return scheme_success_prob(h, s, gamma);
}

double scs_prob(double a, int d, int k, SchemeTag s, double gamma) {
  return scheme_success_prob(normalize(scs_state(ScsSpec{a, d, k}, 30)).state, s, gamma);
}

Probe channel_hes_k_independence(const Grid&, const ClosedForms&) {
  Probe p;
  for (double a : {0.2, 1.0, 2.0})
    for (SchemeTag s : kSchemes)
      for (int d = 2; d <= 4; ++d) {
        const double p0 = hes_prob(a, d, 0, s, 0.01);
        for (int k = 1; k < d; ++k)
          p.dev(hes_prob(a, d, k, s, 0.01) - p0, 1e-12,
                loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) + " scheme=" + name(s));
      }
  return p;
}

Probe channel_success_monotone(const Grid&, const ClosedForms&) {
  Probe p;
  for (SchemeTag s : kSchemes)
    for (int d = 2; d <= 4; ++d)
      for (int k = 0; k < d; ++k) {
        double ph = -1.0, ps = -1.0;
        for (int i = 0; i <= 10; ++i) {
          const double a = 1.5 + 0.1 * i;
          const std::string w =
              loc({{"alpha", a}, {"d", double(d)}, {"k", double(k)}}) + " scheme=" + name(s);
          const double h = hes_prob(a, d, k, s, 0.01), c = scs_prob(a, d, k, s, 0.01);
          p.require(h > ph, w + " hes");
          p.require(c > ps, w + " scs");
          ph = h;
          ps = c;
        }
      }
  return p;
}

Probe channel_small_alpha_spread(const Grid&, const ClosedForms&) {
  Probe p;
  for (SchemeTag s : kSchemes)
    for (int d = 2; d <= 4; ++d) {
      auto spread = [&](double a) {
        double lo = INFINITY, hi = -INFINITY;
        for (int k = 0; k < d; ++k) {
          const double v = scs_prob(a, d, k, s, 0.01);
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        return hi - lo;
      };
      p.require(spread(0.2) >= 5.0 * spread(2.0),
                loc({{"d", double(d)}}) + " scheme=" + name(s));
    }
  return p;
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"fock.ladder_commutator", fock_ladder_commutator},
      {"fock.adjointness", fock_adjointness},
      {"fock.coherent_moments", fock_coherent_moments},
      {"fock.min_trunc_monotone", fock_min_trunc_monotone},
      {"states.scs_gram", states_scs_gram},
      {"states.hes_gram", states_hes_gram},
      {"states.pseudo_number", states_pseudo_number},
      {"states.hes_poisson_marginal", states_hes_poisson},
      {"states.addition_overlap_equivalence", states_addition_overlap},
      {"states.quadrature_zero", states_quadrature_zero},
      {"amplify.subtract_exact", amplify_subtract_exact},
      {"amplify.norm_factor_equivalence", amplify_norm_factors},
      {"amplify.propositions", amplify_propositions},
      {"analytic.hes_fidelity_equivalence", analytic_hes_fidelity},
      {"analytic.scs_fidelity_equivalence", analytic_scs_fidelity},
      {"analytic.hes_qfi_equivalence", analytic_hes_qfi},
      {"analytic.scs_qfi_equivalence", analytic_scs_qfi},
      {"analytic.hes_gain_stationarity", analytic_gain_stationarity},
      {"analytic.scheme_ordering", analytic_scheme_ordering},
      {"analytic.normalized_qfi", analytic_normalized_qfi},
      {"analytic.scs_qfi_shape", analytic_scs_qfi_shape},
      {"analytic.normal_ordering", analytic_normal_ordering},
      {"analytic.spectral_qfi", analytic_spectral_qfi},
      {"optimize.grid_agreement", optimize_grid_agreement},
      {"optimize.stationarity", optimize_stationarity},
      {"channel.bs_unitarity", channel_bs_unitarity},
      {"channel.sim_vs_kraus", channel_sim_vs_kraus},
      {"channel.hes_k_independence", channel_hes_k_independence},
      {"channel.success_monotone", channel_success_monotone},
      {"channel.small_alpha_k_spread", channel_small_alpha_spread},
  };
  return checks;
}

}  // namespace

CheckSummary run_checks(CheckLevel level, std::ostream& os, const ClosedForms& forms) {
  const Grid grid = make_grid(level);
  CheckSummary sum;
  for (const Check& c : all_checks()) {
    Probe p;
    try {
      p = c.fn(grid, forms);
    } catch (const std::exception& e) {
      p.ok = false;
      p.first = std::string("exception: ") + e.what();
    }
    if (p.ok) {
      ++sum.passed;
      os << "PASS " << c.name << '\n';
    } else {
      if (sum.failed == 0) sum.first_failure = c.name;
      ++sum.failed;
      os << "FAIL " << c.name << ": " << p.first << '\n';
    }
  }
  os << (sum.failed ? "FAILED " : "OK ") << sum.passed << " passed, " << sum.failed
     << " failed";
  if (sum.failed) os << "; first failure: " << sum.first_failure;
  os << '\n';
  return sum;
}

int check_suite(CheckLevel level, std::ostream& os, const ClosedForms& forms) {
  return run_checks(level, os, forms).failed == 0 ? 0 : 1;
}

}  // namespace scamp

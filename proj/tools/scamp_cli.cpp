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

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "scamp/analytic.hpp"
#include "scamp/checks.hpp"
#include "scamp/errors.hpp"
#include "scamp/optimize.hpp"
#include "scamp/sweep.hpp"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumeric = 3 };

struct SweepArgs {
  std::string config;
  std::map<std::string, std::string> overrides;
};

void add_sweep_options(CLI::App* sub, SweepArgs& args, bool with_family) {
  sub->add_option("--config", args.config, "key=value configuration file");
  struct Key {
    const char* flag;
    const char* key;
    const char* help;
  };
  static const Key keys[] = {
      {"--alpha-min", "alpha_min", "smallest alpha"},
      {"--alpha-max", "alpha_max", "largest alpha"},
      {"--steps", "steps", "number of alpha grid points"},
      {"--d", "d", "qudit dimension"},
      {"--k", "k", "qudit indices: comma list or 'all'"},
      {"--scheme", "scheme", "aadag or adag2"},
      {"--gamma", "gamma", "heralding coupling for success probabilities"},
      {"--trunc", "trunc", "'auto' or a fixed Fock truncation"},
      {"--out", "out", "output CSV path (stdout if absent)"},
      {"--threads", "threads", "worker threads"},
  };
  for (const Key& k : keys) {
    const std::string key = k.key;
    sub->add_option_function<std::string>(
        k.flag, [&args, key](const std::string& v) { args.overrides[key] = v; },
        k.help);
  }
  if (with_family) {
    sub->add_option_function<std::string>(
        "--family", [&args](const std::string& v) { args.overrides["family"] = v; },
        "hes or scs");
  }
}

bool failed_status(const std::string& s) { return s != "ok" && s != "boundary_hit"; }

int run_sweep_command(const SweepArgs& args, std::optional<scamp::Family> forced,
                      bool need_gamma) {
  std::map<std::string, std::string> kv;
  if (!args.config.empty()) kv = scamp::read_key_value_file(args.config);
  for (const auto& [k, v] : args.overrides) kv[k] = v;
  if (forced) {
    if (auto it = kv.find("family"); it != kv.end()) {
      const auto f = scamp::parse_family(it->second);
      if (f != forced)
        throw scamp::ConfigError("config family '" + it->second +
                                 "' does not match the subcommand");
    }
  }
  scamp::SweepConfig cfg;
  scamp::apply_config(cfg, kv);
  if (forced) cfg.family = *forced;
  if (need_gamma && !cfg.gamma) cfg.gamma = 0.01;
  const auto records = scamp::run_sweep(cfg);
  if (cfg.out.empty()) {
    scamp::emit_csv(records, std::cout);
    std::cout.flush();
  } else {
    scamp::emit_csv(records, cfg.out);
  }
  int bad = 0;
  for (const auto& r : records)
    if (failed_status(r.status)) ++bad;
  if (bad) {
    std::cerr << "scamp: " << bad << " sweep cell(s) failed; see the status column\n";
    return kNumeric;
  }
  return kOk;
}

int run_crossing(double lo, double hi, double min_lo, double min_hi) {
  const auto ratio = [](double a) { return scamp::qfi_ratio(a, scamp::QfiFamily::hes()); };
  const double star = scamp::find_crossing(ratio, 1.0, lo, hi);
  const double h = 1e-5;
  const auto slope = [&](double a) { return (ratio(a + h) - ratio(a - h)) / (2.0 * h); };
  const double amin = scamp::find_crossing(slope, 0.0, min_lo, min_hi);
  std::cout << "alpha_star=" << scamp::format_double(star) << '\n'
            << "ratio_min_alpha=" << scamp::format_double(amin) << '\n'
            << "ratio_min=" << scamp::format_double(ratio(amin)) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amplification of cat-state and hybrid-entangled qudits"};
  app.require_subcommand(1);

  SweepArgs hes_args, scs_args, prob_args;
  auto* hes = app.add_subcommand("hes-sweep", "HES fidelity, gain and QFI sweep");
  add_sweep_options(hes, hes_args, false);
  auto* scs = app.add_subcommand("scs-sweep", "SCS fidelity, gain and QFI sweep");
  add_sweep_options(scs, scs_args, false);
  auto* prob = app.add_subcommand("prob-sweep", "sweep including heralded success probabilities");
  add_sweep_options(prob, prob_args, true);

  double lo = 0.5, hi = 1.2, min_lo = 1.2, min_hi = 1.7;
  auto* cross = app.add_subcommand("crossing", "HES QFI ratio crossing and minimum");
  cross->add_option("--lo", lo, "bracket start for the ratio = 1 crossing");
  cross->add_option("--hi", hi, "bracket end for the ratio = 1 crossing");
  cross->add_option("--min-lo", min_lo, "bracket start for the ratio minimum");
  cross->add_option("--min-hi", min_hi, "bracket end for the ratio minimum");

  std::string level = "quick";
  auto* check = app.add_subcommand("check", "run the property suites");
  check->add_option("--level", level, "quick or full");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*hes) return run_sweep_command(hes_args, scamp::Family::hes, false);
    if (*scs) return run_sweep_command(scs_args, scamp::Family::scs, false);
    if (*prob) return run_sweep_command(prob_args, std::nullopt, true);
    if (*cross) return run_crossing(lo, hi, min_lo, min_hi);
    if (*check) {
      const auto lv = scamp::parse_check_level(level);
      if (!lv) {
        std::cerr << "scamp: unknown check level '" << level << "' (use quick or full)\n";
        return kUsage;
      }
      return scamp::check_suite(*lv, std::cout) == 0 ? kOk : kCheckFailed;
    }
  } catch (const scamp::ConfigError& e) {
    std::cerr << "scamp: " << e.what() << '\n';
    return kUsage;
  } catch (const scamp::IoError& e) {
    std::cerr << "scamp: " << e.what() << '\n';
    return kUsage;
  } catch (const scamp::PreconditionError& e) {
    std::cerr << "scamp: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "scamp: " << e.what() << '\n';
    return kNumeric;
  }
  return kUsage;
}

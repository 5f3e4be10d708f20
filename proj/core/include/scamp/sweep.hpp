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
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scamp/scheme.hpp"

namespace scamp {

/** Bad configuration text or values. */
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/** Unreadable or unwritable file. */
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { hes, scs };

std::string to_string(Family f);
std::optional<Family> parse_family(std::string_view text);

struct SweepConfig {
  Family family = Family::hes;
  int d = 2;
  std::vector<int> k_list{0};
  SchemeTag scheme = SchemeTag::aadag;
  double alpha_min = 0.05;
  double alpha_max = 3.0;
  int steps = 60;
  std::optional<double> gamma;
  std::optional<std::size_t> trunc;  ///< nullopt selects auto_trunc
  std::string out;                   ///< empty writes to stdout
  int threads = 1;
};

void validate(const SweepConfig& cfg);

/** alpha_min + i (alpha_max - alpha_min) / (steps - 1), i < steps. */
std::vector<double> alpha_grid(const SweepConfig& cfg);

struct SweepRecord {
  double alpha = 0.0;
  int d = 0;
  int k = 0;
  SchemeTag scheme = SchemeTag::aadag;
  std::optional<double> F_opt;
  std::optional<double> G;
  std::optional<double> qfi_in;
  std::optional<double> qfi_out;
  std::optional<double> qfi_ratio;
  std::optional<double> p_success;
  std::size_t trunc_used = 0;
  std::string status = "ok";

  bool operator==(const SweepRecord&) const = default;
};

/** One record per (k, alpha), ordered by k then alpha. */
std::vector<SweepRecord> run_sweep(const SweepConfig& cfg);

/** Single cell of a sweep; errors end up in `status`. */
SweepRecord sweep_cell(const SweepConfig& cfg, int k, double alpha);

inline constexpr const char* kCsvHeader =
    "alpha,d,k,scheme,F_opt,G,qfi_in,qfi_out,qfi_ratio,p_success,trunc_used,"
    "status";

/** Shortest locale-independent text with 12 significant digits. */
std::string format_double(double x);

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& os);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
std::vector<SweepRecord> parse_csv(std::istream& is);

/** key=value lines; '#' starts a comment. */
std::map<std::string, std::string> parse_key_values(std::istream& is);
std::map<std::string, std::string> read_key_value_file(const std::string& path);

/** Overwrite fields of `cfg` from parsed keys; unknown keys are an error. */
void apply_config(SweepConfig& cfg, const std::map<std::string, std::string>& kv);

/** "0,1,3" or "all" (0..d-1); empty text gives an empty list. */
std::vector<int> parse_k_list(const std::string& text, int d);

}  // namespace scamp

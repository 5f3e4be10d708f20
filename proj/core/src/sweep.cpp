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

#include "scamp/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "scamp/analytic.hpp"
#include "scamp/channel.hpp"
#include "scamp/errors.hpp"
#include "scamp/optimize.hpp"
#include "scamp/states.hpp"

namespace scamp {

std::string to_string(Family f) { return f == Family::hes ? "hes" : "scs"; }

std::optional<Family> parse_family(std::string_view text) {
  if (text == "hes" || text == "HES") return Family::hes;
  if (text == "scs" || text == "SCS") return Family::scs;
  return std::nullopt;
}

void validate(const SweepConfig& cfg) {
  if (cfg.d < 1) throw ConfigError("d must be >= 1");
  if (!std::isfinite(cfg.alpha_min) || !std::isfinite(cfg.alpha_max) ||
      cfg.alpha_min < 0.0 || !(cfg.alpha_min < cfg.alpha_max))
    throw ConfigError("need 0 <= alpha_min < alpha_max");
  if (cfg.steps < 2) throw ConfigError("steps must be >= 2");
  for (int k : cfg.k_list)
    if (k < 0 || k >= cfg.d) throw ConfigError("k_list entries must lie in 0..d-1");
  if (cfg.gamma && !(*cfg.gamma > 0.0 && *cfg.gamma <= 1.0))
    throw ConfigError("gamma must lie in (0, 1]");
  if (cfg.trunc && *cfg.trunc < 1) throw ConfigError("trunc must be >= 1");
  if (cfg.threads < 1) throw ConfigError("threads must be >= 1");
}

std::vector<double> alpha_grid(const SweepConfig& cfg) {
  std::vector<double> a(std::size_t(cfg.steps));
  const double h = (cfg.alpha_max - cfg.alpha_min) / double(cfg.steps - 1);
  for (int i = 0; i < cfg.steps; ++i) a[std::size_t(i)] = cfg.alpha_min + i * h;
  a.back() = cfg.alpha_max;
  return a;
}

namespace {

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ';';
  return s;
}

std::string error_status(const std::exception& e) {
  const char* kind = "error";
  if (dynamic_cast<const TruncationError*>(&e)) kind = "truncation_error";
  else if (dynamic_cast<const DivergenceError*>(&e)) kind = "divergence";
  else if (dynamic_cast<const NumericError*>(&e)) kind = "numeric_error";
  else if (dynamic_cast<const PreconditionError*>(&e)) kind = "precondition";
  return std::string(kind) + ": " + sanitize(e.what());
}

double tail_checked(double norm_squared) {
  if (1.0 - norm_squared > 1e-12)
    throw TruncationError("input state truncation drops mass", 1.0 - norm_squared);
  return std::sqrt(norm_squared);
}

}  // namespace

SweepRecord sweep_cell(const SweepConfig& cfg, int k, double alpha) {
  SweepRecord r;
  r.alpha = alpha;
  r.d = cfg.d;
  r.k = k;
  r.scheme = cfg.scheme;
  const SchemeTag s = cfg.scheme;
  try {
    r.trunc_used = cfg.trunc ? *cfg.trunc
                   : cfg.family == Family::scs ? scs_auto_trunc(alpha, cfg.d, 2)
                                               : auto_trunc(alpha, 2);
    if (cfg.family == Family::hes) {
      r.qfi_in = hes_qfi(alpha, std::nullopt);
      r.qfi_out = hes_qfi(alpha, s);
      const double g = hes_gain(alpha, s);
      r.G = g;
      r.F_opt = hes_fidelity(alpha, g, s);
      r.qfi_ratio = qfi_ratio(alpha, QfiFamily::hes());
      if (cfg.gamma) {
        HybridState h = hes_state(HesSpec{alpha, cfg.d, k}, r.trunc_used);
        h.amps /= tail_checked(h.norm_squared());
        r.p_success = scheme_success_prob(h, s, *cfg.gamma);
      }
    } else {
      const ScsSpec spec{alpha, cfg.d, k};
      r.qfi_in = scs_qfi(alpha, cfg.d, k, std::nullopt);
      r.qfi_out = scs_qfi(alpha, cfg.d, k, s);
      const OptResult opt = scs_gain(spec, s);
      r.G = opt.argmax;
      r.F_opt = opt.value;
      r.qfi_ratio = qfi_ratio(alpha, QfiFamily::scs(cfg.d, k));
      if (cfg.gamma) {
        FockVector v = scs_state(spec, r.trunc_used);
        v.amps /= tail_checked(v.norm_squared());
        r.p_success = scheme_success_prob(v, s, *cfg.gamma);
      }
      if (!opt.converged) r.status = "not_converged";
      else if (opt.boundary_hit) r.status = "boundary_hit";
    }
  } catch (const std::exception& e) {
    r.status = error_status(e);
  }
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::vector<double> alphas = alpha_grid(cfg);
  std::vector<std::pair<int, double>> cells;
  for (int k : cfg.k_list)
    for (double a : alphas) cells.emplace_back(k, a);
  std::vector<SweepRecord> out(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++)
      out[i] = sweep_cell(cfg, cells[i].first, cells[i].second);
  };
  const int nt = std::min<int>(cfg.threads, int(std::max<std::size_t>(cells.size(), 1)));
  if (nt <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
  }
  return out;
}

std::string format_double(double x) {
  if (!std::isfinite(x)) throw NumericError("format_double: non-finite value");
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string opt_field(const std::optional<double>& v) {
  return v && std::isfinite(*v) ? format_double(*v) : std::string();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& s, const std::string& what) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("cannot parse " + what + " from '" + s + "'");
  return v;
}

long parse_long(const std::string& s, const std::string& what) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ConfigError("cannot parse " + what + " from '" + s + "'");
  return v;
}

std::optional<double> parse_opt(const std::string& s, const std::string& what) {
  if (s.empty()) return std::nullopt;
  return parse_double(s, what);
}

}  // namespace

void emit_csv(const std::vector<SweepRecord>& records, std::ostream& os) {
  std::string text = kCsvHeader;
  text += '\n';
  for (const SweepRecord& r : records) {
    text += format_double(r.alpha) + ',' + std::to_string(r.d) + ',' +
            std::to_string(r.k) + ',' + to_string(r.scheme) + ',' +
            opt_field(r.F_opt) + ',' + opt_field(r.G) + ',' +
            opt_field(r.qfi_in) + ',' + opt_field(r.qfi_out) + ',' +
            opt_field(r.qfi_ratio) + ',' + opt_field(r.p_success) + ',' +
            std::to_string(r.trunc_used) + ',' + sanitize(r.status) + '\n';
  }
  os.write(text.data(), std::streamsize(text.size()));
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  emit_csv(records, f);
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

std::vector<SweepRecord> parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader)
    throw ConfigError("CSV header mismatch");
  std::vector<SweepRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 12) throw ConfigError("CSV row must have 12 fields");
    SweepRecord r;
    r.alpha = parse_double(f[0], "alpha");
    r.d = int(parse_long(f[1], "d"));
    r.k = int(parse_long(f[2], "k"));
    const auto s = parse_scheme(f[3]);
    if (!s) throw ConfigError("unknown scheme '" + f[3] + "'");
    r.scheme = *s;
    r.F_opt = parse_opt(f[4], "F_opt");
    r.G = parse_opt(f[5], "G");
    r.qfi_in = parse_opt(f[6], "qfi_in");
    r.qfi_out = parse_opt(f[7], "qfi_out");
    r.qfi_ratio = parse_opt(f[8], "qfi_ratio");
    r.p_success = parse_opt(f[9], "p_success");
    r.trunc_used = std::size_t(parse_long(f[10], "trunc_used"));
    r.status = f[11];
    out.push_back(std::move(r));
  }
  return out;
}

std::map<std::string, std::string> parse_key_values(std::istream& is) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open config '" + path + "'");
  return parse_key_values(f);
}

std::vector<int> parse_k_list(const std::string& text, int d) {
  const std::string t = trim(text);
  std::vector<int> ks;
  if (t.empty()) return ks;
  if (t == "all") {
    for (int k = 0; k < d; ++k) ks.push_back(k);
    return ks;
  }
  for (const std::string& part : split(t, ','))
    ks.push_back(int(parse_long(trim(part), "k")));
  return ks;
}

void apply_config(SweepConfig& cfg, const std::map<std::string, std::string>& kv) {
  // d first so that "k=all" resolves against the configured dimension.
  if (auto it = kv.find("d"); it != kv.end()) cfg.d = int(parse_long(it->second, "d"));
  for (const auto& [key, val] : kv) {
    if (key == "d") continue;
    if (key == "family") {
      const auto f = parse_family(val);
      if (!f) throw ConfigError("unknown family '" + val + "'");
      cfg.family = *f;
    } else if (key == "k") {
      cfg.k_list = parse_k_list(val, cfg.d);
    } else if (key == "scheme") {
      const auto s = parse_scheme(val);
      if (!s) throw ConfigError("unknown scheme '" + val + "'");
      cfg.scheme = *s;
    } else if (key == "alpha_min") {
      cfg.alpha_min = parse_double(val, key);
    } else if (key == "alpha_max") {
      cfg.alpha_max = parse_double(val, key);
    } else if (key == "steps") {
      cfg.steps = int(parse_long(val, key));
    } else if (key == "gamma") {
      if (val.empty() || val == "none") cfg.gamma.reset();
      else cfg.gamma = parse_double(val, key);
    } else if (key == "trunc") {
      if (val.empty() || val == "auto") cfg.trunc.reset();
      else cfg.trunc = std::size_t(parse_long(val, key));
    } else if (key == "out") {
      cfg.out = val;
    } else if (key == "threads") {
      cfg.threads = int(parse_long(val, key));
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

}  // namespace scamp

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


#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <locale>
#include <sstream>

#include "catch2/catch_amalgamated.hpp"
#include "scamp/analytic.hpp"
#include "scamp/sweep.hpp"

using namespace scamp;
using Catch::Approx;

namespace {

std::string to_csv(const std::vector<SweepRecord>& r) {
  std::ostringstream os;
  emit_csv(r, os);
  return os.str();
}

SweepConfig small_scs() {
  SweepConfig c;
  c.family = Family::scs;
  c.d = 3;
  c.k_list = {0, 1, 2};
  c.alpha_min = 0.3;
  c.alpha_max = 2.4;
  c.steps = 4;
  c.gamma = 0.01;
  return c;
}

}  // namespace

TEST_CASE("hes sweep gain column follows the closed form") {
  SweepConfig c;
  c.steps = 60;
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 60);
  CHECK(rows.front().alpha == 0.05);
  CHECK(rows.back().alpha == 3.0);
  for (const SweepRecord& r : rows) {
    CHECK(r.status == "ok");
    REQUIRE(r.G.has_value());
    const double x = r.alpha * r.alpha;
    // Stationary point of (1 + g x)^2 e^{-x (g - 1)^2}.
    const double g = (x - 1.0 + std::sqrt((1.0 - x) * (1.0 - x) + 8.0 * x)) / (2.0 * x);
    CHECK(*r.G == Approx(g).margin(1e-6));
    CHECK_FALSE(r.p_success.has_value());
  }
}

TEST_CASE("scs d = 5 sweep ratio exceeds one on 1.9 < alpha < 2.5") {
  SweepConfig c;
  c.family = Family::scs;
  c.d = 5;
  c.k_list = {0};
  const auto rows = run_sweep(c);
  int seen = 0;
  for (const SweepRecord& r : rows)
    if (r.alpha > 1.9 + 1e-9 && r.alpha < 2.5) {
      ++seen;
      REQUIRE(r.qfi_ratio.has_value());
      CHECK(*r.qfi_ratio > 1.0);
    }
  CHECK(seen >= 10);
}

TEST_CASE("empty k list gives a header-only file") {
  SweepConfig c = small_scs();
  c.k_list.clear();
  const auto rows = run_sweep(c);
  CHECK(rows.empty());
  CHECK(to_csv(rows) == std::string(kCsvHeader) + "\n");
}

TEST_CASE("csv round trip and determinism") {
  const SweepConfig c = small_scs();
  const auto rows = run_sweep(c);
  REQUIRE(rows.size() == 12);
  const std::string text = to_csv(rows);
  std::istringstream is(text);
  const auto back = parse_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(back[i].alpha == Approx(rows[i].alpha).epsilon(1e-11));
    CHECK(back[i].k == rows[i].k);
    CHECK(back[i].status == rows[i].status);
    CHECK(*back[i].F_opt == Approx(*rows[i].F_opt).epsilon(1e-11));
    CHECK(*back[i].p_success == Approx(*rows[i].p_success).epsilon(1e-11));
  }
  // Values already at 12 digits are a fixed point.
  CHECK(to_csv(back) == text);
  std::istringstream again(to_csv(back));
  CHECK(parse_csv(again) == back);

  SweepConfig threaded = c;
  threaded.threads = 4;
  CHECK(to_csv(run_sweep(threaded)) == text);
  CHECK(to_csv(run_sweep(c)) == text);
}

TEST_CASE("csv text ignores the global locale") {
  const std::string before = format_double(1234567.5);
  const char* prev = std::setlocale(LC_ALL, nullptr);
  const std::string saved = prev ? prev : "C";
  if (std::setlocale(LC_ALL, "de_DE.UTF-8") || std::setlocale(LC_ALL, "fr_FR.UTF-8")) {
    CHECK(format_double(1234567.5) == before);
    std::setlocale(LC_ALL, saved.c_str());
  }
  CHECK(before == "1234567.5");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(1.0 / 3.0) == "0.333333333333");
  CHECK(format_double(2.0) == "2");
  CHECK(format_double(1e-20) == "1e-20");
  CHECK_THROWS(format_double(std::nan("")));
}

TEST_CASE("csv parsing rejects malformed input") {
  std::istringstream bad_header("alpha,d\n");
  CHECK_THROWS_AS(parse_csv(bad_header), ConfigError);
  std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(parse_csv(short_row), ConfigError);
}

TEST_CASE("failed cells carry a status") {
  SweepConfig c;
  c.scheme = SchemeTag::adag2;
  c.alpha_min = 0.0;
  c.alpha_max = 1.0;
  c.steps = 3;
  const auto rows = run_sweep(c);
  CHECK(rows[0].status.rfind("divergence", 0) == 0);
  CHECK(rows[1].status == "ok");
  CHECK(to_csv(rows).find("divergence") != std::string::npos);

  SweepConfig t = small_scs();
  t.trunc = 3;
  for (const SweepRecord& r : run_sweep(t))
    if (r.alpha > 1.0) CHECK(r.status.rfind("truncation_error", 0) == 0);
}

TEST_CASE("key=value configuration") {
  std::istringstream is(
      "# comment line\n"
      "family = scs   # trailing comment\n"
      "k=all\n"
      "d=4\n"
      "scheme=adag2\n"
      "alpha_min=0.5\nalpha_max=1.5\nsteps=11\n"
      "gamma=0.02\ntrunc=40\nout=x.csv\nthreads=2\n");
  SweepConfig c;
  apply_config(c, parse_key_values(is));
  CHECK(c.family == Family::scs);
  CHECK(c.d == 4);
  CHECK(c.k_list == std::vector<int>{0, 1, 2, 3});
  CHECK(c.scheme == SchemeTag::adag2);
  CHECK(c.alpha_min == 0.5);
  CHECK(c.alpha_max == 1.5);
  CHECK(c.steps == 11);
  CHECK(c.gamma == 0.02);
  CHECK(c.trunc == std::size_t(40));
  CHECK(c.out == "x.csv");
  CHECK(c.threads == 2);
  CHECK_NOTHROW(validate(c));

  const auto grid = alpha_grid(c);
  REQUIRE(grid.size() == 11);
  CHECK(grid[5] == Approx(1.0).epsilon(1e-15));

  std::istringstream unknown("colour=blue\n");
  SweepConfig u;
  CHECK_THROWS_AS(apply_config(u, parse_key_values(unknown)), ConfigError);
  std::istringstream noeq("steps 4\n");
  CHECK_THROWS_AS(parse_key_values(noeq), ConfigError);
  std::istringstream badnum("steps=four\n");
  CHECK_THROWS_AS(apply_config(u, parse_key_values(badnum)), ConfigError);
  CHECK_THROWS_AS(read_key_value_file("/nonexistent/scamp.cfg"), IoError);

  CHECK(parse_k_list("", 3).empty());
  CHECK(parse_k_list("2, 0", 3) == std::vector<int>{2, 0});
}

TEST_CASE("configuration validation") {
  SweepConfig c;
  c.steps = 1;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SweepConfig{};
  c.alpha_min = 2.0;
  c.alpha_max = 1.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SweepConfig{};
  c.d = 3;
  c.k_list = {3};
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = SweepConfig{};
  c.gamma = 1.5;
  CHECK_THROWS_AS(validate(c), ConfigError);
}

TEST_CASE("csv file output") {
  const std::string path = "sweep_file_test.csv";
  const auto rows = run_sweep(small_scs());
  emit_csv(rows, path);
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(buf.str() == to_csv(rows));
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit_csv(rows, "/nonexistent/dir/out.csv"), IoError);
}

// Copyright 2026 The nmqc Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/sweep.hpp"
#include "curve_stats.hpp"
#include "doctest.h"

using namespace nmqc;

namespace {

RunConfig build_from(std::initializer_list<std::pair<const char*, const char*>>
                         pairs) {
  ConfigBuilder b;
  for (const auto& [k, v] : pairs) b.set(k, v);
  return b.build();
}

std::string csv_string(const FidelityCurve& curve) {
  std::ostringstream os;
  write_csv(curve, os);
  return os.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("nmqc_test_" + std::to_string(std::rand()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("flag-style keys build a validated config") {
  const RunConfig c = build_from({{"protocol", "cqd"},
                                  {"channel", "dephasing"},
                                  {"regime", "strong"},
                                  {"tmax", "20"},
                                  {"steps", "200"}});
  CHECK(c.protocol == Protocol::Cqd);
  CHECK(c.channel == ChannelKind::Dephasing);
  CHECK(c.regime == Regime::Strong);
  for (double r : c.slot_ratios) CHECK(r == kStrongRatio);
  CHECK(c.tmax == 20.0);
  CHECK(c.steps == 200);
  CHECK(c.mode == RunMode::Analytic);
}

TEST_CASE("regimes map to the documented ratios") {
  CHECK(build_from({{"protocol", "qd"}, {"channel", "damping"},
                    {"regime", "weak"}})
            .slot_ratios[0] == kWeakRatio);
  CHECK(build_from({{"protocol", "qd"}, {"channel", "damping"},
                    {"regime", "markovian"}})
            .slot_ratios[2] == kMarkovianRatio);
}

TEST_CASE("config rejections") {
  ConfigBuilder conflict;
  conflict.set("protocol", "cqd");
  conflict.set("channel", "damping");
  conflict.set("regime", "strong");
  conflict.set("gamma-ratio", "0.5");
  CHECK_THROWS_AS(conflict.build(), ConfigError);

  ConfigBuilder single_qubit_initial;
  single_qubit_initial.set("protocol", "bb84");
  single_qubit_initial.set("channel", "damping");
  single_qubit_initial.set("initial", "phi+");
  CHECK_THROWS_AS(single_qubit_initial.build(), ConfigError);

  ConfigBuilder b;
  CHECK_THROWS_AS(b.set("frobnicate", "1"), ConfigError);
  CHECK_THROWS_AS(b.set("protocol", "qqd"), ConfigError);
  CHECK_THROWS_AS(b.set("tmax", "ten"), ConfigError);
  CHECK_THROWS_AS(b.set("tmax", "-3"), ConfigError);
  CHECK_THROWS_AS(b.set("steps", "1"), ConfigError);
  CHECK_THROWS_AS(b.set("gamma-ratio", "slot5=0.1"), ConfigError);
  CHECK_THROWS_AS(b.set("depol-ratios", "0.1,0.2"), ConfigError);

  // the offending token is named
  try {
    b.set("steps", "many");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("many") != std::string::npos);
  }

  ConfigBuilder custom_missing;
  custom_missing.set("protocol", "cqd");
  custom_missing.set("channel", "damping");
  custom_missing.set("regime", "custom");
  CHECK_THROWS_AS(custom_missing.build(), ConfigError);

  ConfigBuilder wrong_channel_key;
  wrong_channel_key.set("protocol", "cqd");
  wrong_channel_key.set("channel", "depolarizing");
  wrong_channel_key.set("regime", "custom");
  wrong_channel_key.set("gamma-ratio", "0.1");
  CHECK_THROWS_AS(wrong_channel_key.build(), ConfigError);

  ConfigBuilder missing_protocol;
  missing_protocol.set("channel", "damping");
  CHECK_THROWS_AS(missing_protocol.build(), ConfigError);
}

TEST_CASE("per-slot ratio overrides") {
  const RunConfig c = build_from({{"protocol", "cqd"},
                                  {"channel", "damping"},
                                  {"regime", "custom"},
                                  {"gamma-ratio", "0.2"},
                                  {"gamma-ratio", "slot3=0.05"}});
  CHECK(c.slot_ratios[0] == 0.2);
  CHECK(c.slot_ratios[1] == 0.2);
  CHECK(c.slot_ratios[2] == 0.05);
  CHECK(c.slot_ratios[3] == 0.2);

  // ratios without an explicit regime imply custom
  const RunConfig implied = build_from(
      {{"protocol", "cqd"}, {"channel", "damping"}, {"gamma-ratio", "0.3"}});
  CHECK(implied.regime == Regime::Custom);
  CHECK(implied.slot_ratios[3] == 0.3);
}

TEST_CASE("depolarizing regime defaults") {
  const double bound = homogeneous_depol_bound_ratio();
  const RunConfig strong = build_from(
      {{"protocol", "cqd"}, {"channel", "depolarizing"}, {"regime", "strong"}});
  CHECK(strong.depol_ratios[0] == bound);
  CHECK_FALSE(strong.depol_markovian);

  const RunConfig markovian = build_from({{"protocol", "cqd"},
                                          {"channel", "depolarizing"},
                                          {"regime", "markovian"}});
  CHECK(markovian.depol_markovian);

  const RunConfig custom = build_from({{"protocol", "cqd"},
                                       {"channel", "depolarizing"},
                                       {"regime", "custom"},
                                       {"depol-ratios", "0.2,0.2,5"}});
  CHECK(custom.depol_ratios[2] == 5.0);
}

TEST_CASE("config files: comments, overrides, errors") {
  ConfigBuilder b;
  b.load_text("# a comment\n"
              "protocol = cqd\n"
              "channel = damping   # trailing comment\n"
              "\n"
              "gamma-ratio = slot1=0.07\n"
              "tmax = 10\n",
              "inline");
  b.set("tmax", "25");  // flag wins over the file value
  const RunConfig c = b.build();
  CHECK(c.slot_ratios[0] == 0.07);
  CHECK(c.tmax == 25.0);

  ConfigBuilder bad;
  try {
    bad.load_text("protocol = cqd\nchannel damping\n", "inline");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("inline:2") != std::string::npos);
  }

  ConfigBuilder missing;
  CHECK_THROWS_AS(missing.load_file("/nonexistent/nmqc.conf"), IoError);
}

TEST_CASE("run_sweep curve shapes") {
  RunConfig dephasing = build_from({{"protocol", "cqd"},
                                    {"channel", "dephasing"},
                                    {"regime", "strong"},
                                    {"tmax", "20"},
                                    {"steps", "100"}});
  const FidelityCurve curve = run_sweep(dephasing);
  REQUIRE(curve.times.size() == 100);
  CHECK(curve.times.front() == 0.0);
  CHECK(curve.times.back() == 20.0);
  for (std::size_t i = 1; i < curve.times.size(); ++i)
    CHECK(curve.times[i] > curve.times[i - 1]);
  CHECK(curve.analytic.front() == doctest::Approx(1.0));
  CHECK(curve_stats::non_increasing(curve.analytic, 1e-12));
  CHECK(curve.analytic.back() >= 0.5);
  CHECK(curve.analytic.back() < 0.52);

  RunConfig bbm = build_from({{"protocol", "bbm"},
                              {"channel", "damping"},
                              {"regime", "strong"},
                              {"tmax", "100"},
                              {"steps", "400"},
                              {"mode", "both"}});
  const FidelityCurve revived = run_sweep(bbm);
  CHECK(revived.max_abs_diff <= 1e-10);
  CHECK_FALSE(curve_stats::non_increasing(revived.analytic, 1e-6));
}

TEST_CASE("CSV layout") {
  // hand-built single-sample curve
  FidelityCurve tiny;
  tiny.config = build_from({{"protocol", "bbm"},
                            {"channel", "damping"},
                            {"regime", "strong"},
                            {"steps", "2"}});
  tiny.times = {0.0};
  tiny.analytic = {1.0};
  const std::string text = csv_string(tiny);
  CHECK(text.find("# protocol=bbm\n") != std::string::npos);
  CHECK(text.find("gamma_t,fidelity_analytic\n0,1\n") != std::string::npos);
  CHECK(text.find("\r") == std::string::npos);

  RunConfig both_cfg = build_from({{"protocol", "bbm"},
                                   {"channel", "damping"},
                                   {"regime", "weak"},
                                   {"tmax", "5"},
                                   {"steps", "3"},
                                   {"mode", "both"}});
  const std::string both_text = csv_string(run_sweep(both_cfg));
  CHECK(both_text.find("gamma_t,fidelity_analytic,fidelity_oracle,abs_diff\n") !=
        std::string::npos);
  CHECK(both_text.find("# max_abs_diff=") != std::string::npos);

  RunConfig oracle_cfg = build_from({{"protocol", "bbm"},
                                     {"channel", "damping"},
                                     {"regime", "weak"},
                                     {"tmax", "5"},
                                     {"steps", "3"},
                                     {"mode", "oracle"}});
  CHECK(csv_string(run_sweep(oracle_cfg)).find("gamma_t,fidelity_oracle\n") !=
        std::string::npos);
}

TEST_CASE("grid CSV is ratio-major") {
  RunConfig cfg = build_from({{"protocol", "cqd"},
                              {"channel", "damping"},
                              {"regime", "strong"},
                              {"tmax", "2"},
                              {"steps", "3"}});
  const FidelityGrid grid = run_grid(cfg, {0.01, 0.1});
  REQUIRE(grid.values.size() == 6);

  std::ostringstream os;
  write_csv(grid, os);
  std::istringstream is(os.str());
  std::string line;
  std::vector<std::array<double, 2>> rows;  // (ratio, gamma_t)
  bool past_header = false;
  while (std::getline(is, line)) {
    if (past_header) {
      const auto c1 = line.find(',');
      const auto c2 = line.find(',', c1 + 1);
      rows.push_back({std::stod(line.substr(0, c1)),
                      std::stod(line.substr(c1 + 1, c2 - c1 - 1))});
    }
    if (line == "ratio,gamma_t,fidelity") past_header = true;
  }
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == std::array<double, 2>{0.01, 0.0});
  CHECK(rows[2] == std::array<double, 2>{0.01, 2.0});
  CHECK(rows[3] == std::array<double, 2>{0.1, 0.0});
  CHECK(rows[5] == std::array<double, 2>{0.1, 2.0});

  CHECK_THROWS_AS(run_grid(cfg, {}), ArgumentError);
}

TEST_CASE("identical configs produce byte-identical CSV") {
  RunConfig cfg = build_from({{"protocol", "ekert"},
                              {"channel", "damping"},
                              {"regime", "weak"},
                              {"tmax", "30"},
                              {"steps", "50"},
                              {"mode", "both"}});
  CHECK(csv_string(run_sweep(cfg)) == csv_string(run_sweep(cfg)));
}

TEST_CASE("io failures surface as IoError") {
  RunConfig cfg = build_from({{"protocol", "bbm"},
                              {"channel", "damping"},
                              {"regime", "weak"},
                              {"steps", "2"},
                              {"tmax", "1"}});
  const FidelityCurve curve = run_sweep(cfg);
  CHECK_THROWS_AS(write_csv(curve, "/nonexistent-dir/x/y.csv"), IoError);
}

TEST_CASE("figure presets") {
  CHECK(list_presets().size() == 17);

  const auto fig1d = figure_preset("fig1d");
  REQUIRE(fig1d.size() == 4);
  int damping = 0, dephasing = 0, strong = 0, markovian = 0;
  for (const PresetEntry& e : fig1d) {
    damping += e.config.channel == ChannelKind::Damping;
    dephasing += e.config.channel == ChannelKind::Dephasing;
    strong += e.config.slot_ratios[0] == kStrongRatio;
    markovian += e.config.slot_ratios[0] == kMarkovianRatio;
  }
  CHECK(damping == 2);
  CHECK(dephasing == 2);
  CHECK(strong == 2);
  CHECK(markovian == 2);

  const auto fig5a = figure_preset("fig5a");
  REQUIRE(fig5a.size() == 30);
  CHECK(fig5a.front().config.slot_ratios[0] == doctest::Approx(0.001));
  CHECK(fig5a.back().config.slot_ratios[0] == doctest::Approx(0.030));

  const auto fig3b = figure_preset("fig3b");
  REQUIRE(fig3b.size() == 2);
  CHECK(fig3b[0].config.depol_ratios[2] == 5.0);
  CHECK_FALSE(fig3b[0].config.depol_markovian);
  CHECK(fig3b[1].config.depol_markovian);

  const auto fig2a = figure_preset("fig2a");
  REQUIRE(fig2a.size() == 1);
  CHECK(fig2a[0].is_grid);
  CHECK(fig2a[0].grid_ratios.size() == 50);

  try {
    figure_preset("fig9z");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("fig1a") != std::string::npos);
  }
}

TEST_CASE("run_figure writes one file per preset entry") {
  TempDir dir;
  std::vector<std::string> written;
  run_figure("fig3b", dir.path.string(),
             [&](const std::string& p) { written.push_back(p); });
  REQUIRE(written.size() == 2);
  for (const std::string& p : written) {
    CHECK(std::filesystem::exists(p));
    std::ifstream is(p);
    std::string first;
    std::getline(is, first);
    CHECK(first.rfind("# tool=nmqc", 0) == 0);
  }
  CHECK(written[0].find("fig3b__nonmarkovian.csv") != std::string::npos);
}

TEST_CASE("verify_all") {
  CHECK_THROWS_AS(verify_all(5, {}), ArgumentError);

  std::vector<std::string> lines;
  const bool ok = verify_all(10, [&](const std::string& l) {
    lines.push_back(l);
  });
  CHECK(ok);
  REQUIRE_FALSE(lines.empty());
  CHECK(lines.back().find("PASS") != std::string::npos);
  int cases = 0;
  for (const std::string& l : lines) cases += l.rfind("case ", 0) == 0;
  CHECK(cases == 162);
  bool has_normalization = false;
  for (const std::string& l : lines)
    has_normalization |= l.rfind("normalization:", 0) == 0 &&
                         l.find("1/4") != std::string::npos;
  CHECK(has_normalization);
}

TEST_CASE("verify_all flags a broken normalization through F(0)") {
  // doubling the depolarizing CQD form emulates a 1/2 prefactor
  AnalyticOverride broken = [](Protocol p, const SlotAssignment& a, double t,
                               BellKind kind) {
    const double v = analytic_fidelity(p, a, t, kind).value;
    return (p == Protocol::Cqd && a.kind == ChannelKind::Depolarizing)
               ? 2.0 * v
               : v;
  };
  std::vector<std::string> lines;
  const bool ok =
      verify_all(10, [&](const std::string& l) { lines.push_back(l); },
                 broken);
  CHECK_FALSE(ok);
  bool reported = false;
  for (const std::string& l : lines)
    reported |= l.rfind("zero-time violation", 0) == 0 &&
                l.find("protocol=cqd") != std::string::npos &&
                l.find("F(0)=2") != std::string::npos;
  CHECK(reported);
}

TEST_CASE("verify verdicts are grid-density independent") {
  auto verdicts = [](int density) {
    std::vector<std::string> out;
    verify_all(density, [&](const std::string& l) {
      if (l.rfind("case ", 0) == 0)
        out.push_back(l.substr(0, l.find(" max_abs_diff")) +
                      (l.find(" PASS") != std::string::npos ? " PASS"
                                                            : " FAIL"));
    });
    return out;
  };
  CHECK(verdicts(10) == verdicts(100));
}

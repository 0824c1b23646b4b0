// Copyright 2026 The dtcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
};

// Runs the binary through the shell; stderr is folded into stdout.
Outcome dtcsim(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" + DTCSIM_EXE + "' " + args + " 2>&1";
  Outcome o;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return o;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) o.out.append(buf, n);
  const int status = pclose(p);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("dtc_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ListPresets) {
  const Outcome o = dtcsim("list-presets");
  EXPECT_EQ(o.code, 0);
  for (const char* name : {"fig2-perfect", "fig2-fermion-imperfect", "fig2-boson-imperfect",
                           "fig4-interacting-inhomogeneous-noisy"}) {
    EXPECT_NE(o.out.find(name), std::string::npos) << name;
  }
}

TEST(Cli, Version) {
  const Outcome o = dtcsim("--version");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("dtcsim"), std::string::npos);
}

TEST(Cli, RunPresetWritesOutputs) {
  const fs::path dir = scratch("run");
  const Outcome o =
      dtcsim("run --preset fig2-boson --set schedule.n_periods=16 --out-dir '" + dir.string() + "'");
  ASSERT_EQ(o.code, 0) << o.out;
  for (const char* f : {"timeseries.csv", "spectrum.csv", "peaks.json", "metadata.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  const auto meta = nlohmann::json::parse(slurp(dir / "metadata.json"));
  EXPECT_EQ(meta["config"]["schedule"]["n_periods"], 16);
  fs::remove_all(dir);
}

TEST(Cli, DumpConfigRoundTrip) {
  const fs::path dir = scratch("dump");
  const Outcome a = dtcsim("run --preset fig2-fermion --dump-config");
  ASSERT_EQ(a.code, 0) << a.out;
  std::ofstream(dir / "c.json") << a.out;
  const Outcome b = dtcsim("run --config '" + (dir / "c.json").string() + "' --dump-config");
  ASSERT_EQ(b.code, 0) << b.out;
  EXPECT_EQ(a.out, b.out);
  fs::remove_all(dir);
}

TEST(Cli, ConfigErrorsExitTwo) {
  const fs::path dir = scratch("bad");
  std::ofstream(dir / "broken.json") << "{\n  \"name\": \"x\",\n  \"model\": \n}\n";
  Outcome o = dtcsim("run --config '" + (dir / "broken.json").string() + "'");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("broken.json:4:1:"), std::string::npos) << o.out;

  o = dtcsim("run --preset fig2-boson --set schedule.bogus=1");
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("schedule.bogus"), std::string::npos) << o.out;

  o = dtcsim("run --preset nope");
  EXPECT_EQ(o.code, 2);
  o = dtcsim("frobnicate");
  EXPECT_EQ(o.code, 2);
  fs::remove_all(dir);
}

TEST(Cli, EnvironmentOutputRoot) {
  const fs::path dir = scratch("env");
  const Outcome o = dtcsim("run --preset fig2-perfect --set schedule.n_periods=8",
                           "DTCSIM_OUT_DIR='" + dir.string() + "'");
  ASSERT_EQ(o.code, 0) << o.out;
  EXPECT_TRUE(fs::exists(dir / "fig2-perfect" / "metadata.json"));
  fs::remove_all(dir);
}

TEST(Cli, SweepWritesTable) {
  const fs::path dir = scratch("sweep");
  std::ofstream(dir / "s.json") << R"({
    "base_preset": "fig2-boson",
    "axes": [{"name": "epsilon", "values": [0.0, 0.3]}],
    "reduce": ["subharmonic_weight", "split_detected"]
  })";
  const Outcome o = dtcsim("sweep --config '" + (dir / "s.json").string() +
                           "' --set base.schedule.n_periods=16 --threads 2 --out-dir '" +
                           (dir / "out").string() + "'");
  ASSERT_EQ(o.code, 0) << o.out;
  const std::string csv = slurp(dir / "out" / "sweep.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "epsilon,subharmonic_weight,split_detected");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_TRUE(fs::exists(dir / "out" / "sweep_config.json"));
  fs::remove_all(dir);
}

}  // namespace

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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dtc/config.hpp"
#include "dtc/runner.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 1;

std::filesystem::path output_root() {
  const char* env = std::getenv("DTCSIM_OUT_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path("dtcsim_out");
}

std::filesystem::path resolve_out_dir(const std::string& flag, const std::string& from_config,
                                      const std::string& name) {
  if (!flag.empty()) return flag;
  if (!from_config.empty()) return from_config;
  return output_root() / name;
}

// Inlines base_preset so that --set can reach into base.
nlohmann::json expand_base_preset(nlohmann::json j) {
  if (!j.is_object() || !j.contains("base_preset") || j.contains("base")) return j;
  if (!j["base_preset"].is_string()) return j;
  const dtc::Preset& p = dtc::find_preset(j["base_preset"].get<std::string>());
  j["base"] = nlohmann::json::parse(dtc::to_json(p.config).dump());
  j.erase("base_preset");
  return j;
}

nlohmann::json with_overrides(nlohmann::json j, const std::vector<std::string>& sets) {
  for (const std::string& s : sets) dtc::apply_override(j, s);
  return j;
}

int cmd_list_presets() {
  std::printf("%-44s %-26s %s\n", "NAME", "FIGURE", "DESCRIPTION");
  for (const dtc::Preset& p : dtc::presets()) {
    std::printf("%-44s %-26s %s\n", p.name.c_str(), p.figure.c_str(), p.description.c_str());
  }
  std::printf("\naliases:\n");
  for (const auto& [alias, target] : dtc::preset_aliases()) {
    std::printf("  %-42s -> %s\n", alias.c_str(), target.c_str());
  }
  return 0;
}

int cmd_run(const std::string& preset, const std::string& config_file, const std::string& out_dir,
            const std::vector<std::string>& sets, bool dump) {
  dtc::RunConfig config;
  try {
    nlohmann::json j;
    if (!preset.empty()) {
      const dtc::Preset& p = dtc::find_preset(preset);
      j = nlohmann::json::parse(dtc::to_json(p.config).dump());
    } else {
      j = dtc::read_json_file(config_file);
    }
    config = dtc::run_config_from_json(with_overrides(std::move(j), sets));
  } catch (const dtc::ConfigError& e) {
    std::cerr << "dtcsim: config error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (dump) {
    std::cout << dtc::to_json(config).dump(2) << "\n";
    return 0;
  }
  const std::filesystem::path dir = resolve_out_dir(out_dir, config.output_dir, config.name);
  try {
    const dtc::RunResult r = dtc::run(config, dir);
    for (const std::string& w : r.warnings) std::cerr << "dtcsim: warning: " << w << "\n";
    std::printf("run %s -> %s\n", config.name.c_str(), dir.string().c_str());
    std::printf("  samples: %zu\n", r.times.size());
    if (r.peaks) {
      std::printf("  peak_frequency: %s f_D\n", dtc::format_double(r.peaks->peak_frequency).c_str());
      std::printf("  subharmonic_weight: %s\n",
                  dtc::format_double(r.peaks->subharmonic_weight).c_str());
      std::printf("  split_detected: %s\n", r.peaks->split_detected ? "true" : "false");
    }
  } catch (const std::exception& e) {
    std::cerr << "dtcsim: run failed: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

int cmd_sweep(const std::string& config_file, const std::string& out_dir,
              const std::vector<std::string>& sets, int threads) {
  dtc::SweepConfig config;
  try {
    config = dtc::sweep_config_from_json(
        with_overrides(expand_base_preset(dtc::read_json_file(config_file)), sets));
    if (threads >= 0) config.threads = threads;
  } catch (const dtc::ConfigError& e) {
    std::cerr << "dtcsim: config error: " << e.what() << "\n";
    return kExitConfig;
  }
  const std::filesystem::path dir =
      resolve_out_dir(out_dir, config.base.output_dir, "sweep-" + config.base.name);
  try {
    const std::vector<dtc::SweepRow> rows = dtc::sweep(config);
    dtc::write_sweep_csv(config, rows, dir / "sweep.csv");
    nlohmann::ordered_json meta = dtc::to_json(config);
    meta["base"].erase("output_dir");
    std::ofstream(dir / "sweep_config.json") << meta.dump(2) << "\n";
    std::printf("sweep %s: %zu points -> %s\n", config.base.name.c_str(), rows.size(),
                (dir / "sweep.csv").string().c_str());
  } catch (const dtc::ConfigError& e) {
    std::cerr << "dtcsim: config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "dtcsim: sweep failed: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Driven spin-chain simulator for discrete time crystals"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("dtcsim ") + DTC_VERSION);

  std::string preset;
  std::string config_file;
  std::string out_dir;
  std::vector<std::string> sets;
  bool dump = false;
  int threads = -1;

  CLI::App* run = app.add_subcommand("run", "Simulate one configuration and write its outputs");
  auto* preset_opt = run->add_option("--preset", preset, "Preset name (see list-presets)");
  auto* config_opt = run->add_option("--config", config_file, "RunConfig JSON file")
                         ->check(CLI::ExistingFile);
  preset_opt->excludes(config_opt);
  run->add_option("--out-dir", out_dir, "Output directory");
  run->add_option("--set", sets, "Override a field, e.g. schedule.epsilon=0.2")
      ->allow_extra_args(false);
  run->add_flag("--dump-config", dump, "Print the resolved config as JSON and exit");

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate metrics over a parameter grid");
  sweep->add_option("--config", config_file, "SweepConfig JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  sweep->add_option("--out-dir", out_dir, "Output directory");
  sweep->add_option("--set", sets, "Override a field, e.g. base.schedule.n_periods=32")
      ->allow_extra_args(false);
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  app.add_subcommand("list-presets", "Print the preset registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (run->parsed()) {
    if (preset.empty() && config_file.empty()) {
      std::cerr << "dtcsim: run needs --preset or --config\n";
      return kExitConfig;
    }
    return cmd_run(preset, config_file, out_dir, sets, dump);
  }
  if (sweep->parsed()) return cmd_sweep(config_file, out_dir, sets, threads);
  return cmd_list_presets();
}

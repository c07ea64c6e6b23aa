// Command-line front end: run a configured scenario, list the bundled
// presets, or validate a config file.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sheath/config.hpp"
#include "sheath/errors.hpp"
#include "sheath/io.hpp"
#include "sheath/run.hpp"

namespace fs = std::filesystem;
using namespace sheath;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInstability = 3;

struct Source {
  std::string text;
  RunConfig cfg;
};

Source load(const std::string& config_path, const std::string& preset,
            const std::vector<std::string>& overrides) {
  Source src;
  if (!preset.empty()) {
    src.text = preset_text(preset);
  } else {
    std::ifstream f(config_path, std::ios::binary);
    if (!f) throw IoError("cannot open '" + config_path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    src.text = buf.str();
  }
  src.cfg = parse_config(src.text);
  for (const auto& o : overrides) apply_override(src.cfg, o);
  return src;
}

class FileSink : public SnapshotSink {
public:
  FileSink(fs::path dir, std::uint64_t every, double interval)
      : dir_(std::move(dir)), every_(every), interval_(interval), next_time_(interval) {}

  void on_snapshot(const PlasmaState& s, const Mesh& mesh) override {
    bool due = every_ > 0 && s.step % every_ == 0;
    if (interval_ > 0.0 && s.time >= next_time_) {
      due = true;
      while (next_time_ <= s.time) next_time_ += interval_;
    }
    if (!due) return;
    char name[64];
    std::snprintf(name, sizeof name, "snapshot_%09llu.csv", static_cast<unsigned long long>(s.step));
    write_snapshot(s, mesh, dir_ / name);
  }

private:
  fs::path dir_;
  std::uint64_t every_;
  double interval_;
  double next_time_;
};

int cmd_run(const std::string& config_path, const std::string& preset,
            const std::vector<std::string>& overrides, const std::string& out_override) {
  Source src = load(config_path, preset, overrides);
  RunConfig& cfg = src.cfg;
  if (!out_override.empty()) cfg.output_dir = out_override;

  const fs::path dir = cfg.output_dir;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  const NondimParams p = cfg.params();
  const Mesh mesh(cfg.n_cells);
  SchemeConfig scheme = cfg.scheme;
  FileSink sink(dir, scheme.snapshot_every, cfg.snapshot_interval);
  if (cfg.snapshot_interval > 0.0) scheme.snapshot_every = 1;

  RunSummary summary;
  summary.scenario = cfg.scenario;
  summary.config_text = src.text;
  summary.overrides = overrides;
  summary.targets = theoretical_targets(p);

  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };
  try {
    RunResult r = run(init_uniform(mesh), scheme, mesh, p, &sink);
    summary.wall_clock_s = elapsed();
    summary.final = r.final;
    summary.history = std::move(r.history);
    summary.steps = r.steps;
    summary.time = r.final_state.time;
    summary.reached_steady = r.reached_steady;
    summary.warnings = r.warnings;
    summary.checks = evaluate_checks(cfg.checks, r.final);
    if (cfg.snapshot_final) write_snapshot(r.final_state, mesh, dir / "final.csv");
    write_summary(summary, dir / "summary.json");
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
    std::printf("%s: %llu steps to t = %.6g, ambipolarity %.4g, phi peak %.6g (target %.6g)\n",
                cfg.scenario.c_str(), static_cast<unsigned long long>(summary.steps),
                summary.time, r.final.ambipolarity_err, r.final.phi_peak,
                summary.targets.phi_peak);
    for (const auto& c : summary.checks) {
      std::printf("check %s: %.6g <= %.6g %s\n", c.name.c_str(), c.value, c.threshold,
                  c.pass ? "PASS" : "FAIL");
    }
    return kExitOk;
  } catch (const InstabilityError& e) {
    summary.wall_clock_s = elapsed();
    summary.status = "instability";
    summary.error = e.what();
    summary.steps = e.step();
    if (const PlasmaState* last = e.last_good()) {
      summary.time = last->time;
      write_snapshot(*last, mesh, dir / "last_good.csv");
    }
    write_summary(summary, dir / "summary.json");
    std::cerr << "instability: " << e.what() << "\n";
    return kExitInstability;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"1D two-fluid plasma sheath simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::vector<std::string> overrides;

  auto* run_cmd = app.add_subcommand("run", "Run a scenario");
  auto* cfg_opt = run_cmd->add_option("--config", config_path, "Config file");
  run_cmd->add_option("--preset", preset, "Bundled preset instead of a file")->excludes(cfg_opt);
  run_cmd->add_option("--override", overrides, "section.key=value, repeatable");
  run_cmd->add_option("--output-dir", out_dir, "Replaces output.dir");

  auto* presets_cmd = app.add_subcommand("presets", "Bundled scenario presets");
  presets_cmd->require_subcommand(1);
  auto* list_cmd = presets_cmd->add_subcommand("list", "Print preset names");
  std::string show_name;
  auto* show_cmd = presets_cmd->add_subcommand("show", "Print a preset's config text");
  show_cmd->add_option("name", show_name)->required();

  auto* check_cmd = app.add_subcommand("check-config", "Parse and validate, print canonical form");
  auto* check_cfg = check_cmd->add_option("--config", config_path, "Config file");
  check_cmd->add_option("--preset", preset, "Bundled preset")->excludes(check_cfg);
  check_cmd->add_option("--override", overrides, "section.key=value, repeatable");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd || *check_cmd) {
      if (config_path.empty() && preset.empty()) {
        std::cerr << "error: --config or --preset is required\n";
        return kExitConfig;
      }
    }
    if (*run_cmd) return cmd_run(config_path, preset, overrides, out_dir);
    if (*list_cmd) {
      for (const auto& n : preset_names()) std::cout << n << "\n";
      return kExitOk;
    }
    if (*show_cmd) {
      std::cout << preset_text(show_name);
      return kExitOk;
    }
    if (*check_cmd) {
      const Source src = load(config_path, preset, overrides);
      std::cout << to_config_text(src.cfg);
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ParameterError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

#pragma once

// CSV profile snapshots and the JSON run summary.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sheath/config.hpp"
#include "sheath/diagnostics.hpp"
#include "sheath/run.hpp"
#include "sheath/state.hpp"

namespace sheath {

/// Failure to read or write a file; the message names the path.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kSnapshotHeader = "x,ne,ni,ue,ui,flux_e,flux_i,phi";

/// One row per cell in increasing x, every value printed with %.17g.
/// flux_e and flux_i are the stored momenta, so reading them back recovers
/// the state exactly.
std::string format_snapshot(const PlasmaState& s, const Mesh& mesh);
void write_snapshot(const PlasmaState& s, const Mesh& mesh, const std::filesystem::path& path);

struct Snapshot {
  std::vector<double> x;
  PlasmaState state; ///< densities, momenta and phi; time and step are not stored
};
Snapshot parse_snapshot(const std::string& text);
Snapshot read_snapshot(const std::filesystem::path& path);

struct CheckResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct RunSummary {
  std::string status = "ok"; ///< "ok" or "instability"
  std::string scenario;
  std::optional<Diagnostics> final; ///< absent when no step completed
  std::vector<DiagnosticsRecord> history;
  std::uint64_t steps = 0;
  double time = 0.0;
  bool reached_steady = false;
  double wall_clock_s = 0.0;
  std::string config_text; ///< input bytes, echoed unchanged
  std::vector<std::string> overrides;
  TheoreticalTargets targets{};
  std::vector<CheckResult> checks;
  std::vector<std::string> warnings;
  std::string error;
};

/// Evaluates the thresholds enabled in cfg.checks against d.
std::vector<CheckResult> evaluate_checks(const AcceptanceChecks& checks, const Diagnostics& d);

std::string format_summary(const RunSummary& summary);
void write_summary(const RunSummary& summary, const std::filesystem::path& path);

} // namespace sheath

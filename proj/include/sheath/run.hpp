#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sheath/diagnostics.hpp"
#include "sheath/integrators.hpp"

namespace sheath {

struct DiagnosticsRecord {
  std::uint64_t step = 0;
  double time = 0.0;
  double dt = 0.0;
  double ambipolarity_err = 0.0;
  double phi_peak = 0.0;
  double ion_total = 0.0;
  double steady_residual = 0.0;
};

/// Receives read-only snapshots at the configured cadence.
class SnapshotSink {
public:
  virtual ~SnapshotSink() = default;
  virtual void on_snapshot(const PlasmaState& s, const Mesh& mesh) = 0;
};

struct RunResult {
  PlasmaState final_state;
  Diagnostics final;
  std::vector<DiagnosticsRecord> history;
  std::uint64_t steps = 0;
  bool reached_steady = false;
  std::uint64_t clamped_ghosts = 0;
  std::vector<std::string> warnings;
};

/// Steps until t >= t_final, or until the density residual stays below
/// steady_tol for steady_window consecutive steps. A state at step 0 gets
/// its potential from one Poisson solve first. InstabilityError propagates
/// with the last finite state attached.
RunResult run(PlasmaState initial, const SchemeConfig& cfg, const Mesh& mesh,
              const NondimParams& p, SnapshotSink* sink = nullptr);

} // namespace sheath

#pragma once

// Run configuration in a sectioned key = value text format:
//
//   # comment
//   [plasma]
//   eps = 1/1836
//
// Keys are fixed per section and unknown keys are rejected. Numbers accept a
// plain decimal/exponent form or a fraction a/b.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheath/integrators.hpp"
#include "sheath/params.hpp"

namespace sheath {

/// Optional pass/fail checks evaluated on the final diagnostics.
struct AcceptanceChecks {
  std::optional<double> ambipolarity_max;
  std::optional<double> phi_peak_rel_tol;
  std::optional<double> oscillation_max;
};

struct RunConfig {
  std::string scenario = "custom";

  double eps = 1.0 / 1836.0;
  double kappa = 0.0025;
  double chi = 4e-4;
  double macro_to_mfp = 0.0;
  double sigma_ratio = 0.1;

  std::size_t n_cells = 256;
  SchemeConfig scheme;

  std::string output_dir = "out";
  double snapshot_interval = 0.0; ///< in t units, 0 = off; combines with scheme.snapshot_every
  bool snapshot_final = true;

  AcceptanceChecks checks;

  NondimParams params() const;
  /// Throws ConfigError naming the violated constraint.
  void validate() const;
};

/// Parses and validates. Errors carry the 1-based line number when the
/// problem is local to a line.
RunConfig parse_config(std::string_view text);

/// Applies `section.key=value` on top of a parsed config and revalidates.
void apply_override(RunConfig& cfg, std::string_view assignment);

/// Parses a number: decimal, exponent or a/b.
double parse_number(std::string_view text);

/// Canonical text form; parse_config(to_config_text(c)) reproduces c.
std::string to_config_text(const RunConfig& cfg);

std::vector<std::string> preset_names();
/// Config text of a bundled preset; ConfigError for an unknown name.
std::string preset_text(std::string_view name);

} // namespace sheath

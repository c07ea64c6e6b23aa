#pragma once

// Post-step measurements of a plasma state.

#include <cstddef>
#include <span>
#include <vector>

#include "sheath/integrators.hpp"
#include "sheath/params.hpp"
#include "sheath/state.hpp"

namespace sheath {

/// Width of the sheath region next to each wall, in Debye lengths.
inline constexpr double kSheathWidthDebye = 5.0;

/// True for cells whose center lies within 5 sqrt(chi) of a wall.
std::vector<bool> sheath_mask(const Mesh& mesh, const NondimParams& p);

/// max_j |F_e - F_i| / max_j |F_i| with F = n u; 0 when the ions are at rest.
double ambipolarity_error(const PlasmaState& s);
/// Cell where |F_e - F_i| peaks.
std::size_t ambipolarity_peak_cell(const PlasmaState& s);

/// High-frequency energy fraction of a field in [0, 1]:
///   sum_{j=1}^{N-2} (m_{j+1} - 2 m_j + m_{j-1})^2 / (16 sum_{j=1}^{N-2} (m_j - mean)^2 + floor),
/// clamped to 1. A cell-to-cell sawtooth scores 1, affine profiles 0.
double oscillation_index(std::span<const double> field);

/// Per-cell indicator n_e dx / sqrt(eps chi) of the first-order electron
/// diffusion error in the sheath.
std::vector<double> numerical_diffusion_estimate(const PlasmaState& s, const NondimParams& p,
                                                 double dx);

/// Deviation of each wall cell from the linear extrapolation of its two
/// inner neighbours, averaged over both walls.
double wall_momentum_jump(std::span<const double> momentum);

double phi_peak(const PlasmaState& s);

/// Ion Mach number |u_i| / sqrt(1 + kappa) at the innermost cell of the left
/// and right sheath masks (reported, not asserted).
struct SheathEdgeMach {
  double left = 0.0;
  double right = 0.0;
};
SheathEdgeMach ion_mach_at_sheath_edge(const PlasmaState& s, const Mesh& mesh,
                                       const NondimParams& p);

/// Minimax fit of a cos(b (x - 1/2)) in relative error, over samples not excluded.
/// Requires positive samples.
struct CosineFit {
  double a = 0.0;
  double b = 0.0;
  double max_rel_residual = 0.0;
};
CosineFit fit_bulk_cosine(std::span<const double> x, std::span<const double> values,
                          const std::vector<bool>& exclude);

struct Diagnostics {
  double ambipolarity_err = 0.0;
  double phi_peak = 0.0;
  double phi_peak_rel_err = 0.0;
  double ion_total = 0.0;
  double steady_residual = 0.0;
  TimeStepBudget dt_budget;
  std::vector<double> sheath_diffusion_estimate;
  double oscillation_index = 0.0;
  SheathEdgeMach sheath_edge_mach;
};

Diagnostics measure(const PlasmaState& s, const Mesh& mesh, const NondimParams& p,
                    double steady_residual, const TimeStepBudget& budget);

} // namespace sheath

#pragma once

// Discrete Poisson equation d2phi/dx2 = (n_e - n_i)/chi on the cell centers,
// with the grounded walls imposed at the faces through phi_0 = -phi_1 and
// phi_{N+1} = -phi_N.

#include <span>
#include <string>
#include <vector>

namespace sheath {

/// Row j: sub[j] x[j-1] + diag[j] x[j] + super[j] x[j+1] = rhs[j].
/// sub[0] and super[N-1] are unused.
struct TridiagonalSystem {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> rhs;

  std::size_t size() const noexcept { return diag.size(); }
  /// max_j |A x - rhs|_j
  double residual_max(std::span<const double> x) const;
};

/// Assembles the system in the dx^2-scaled form (1, -2, 1 | dx^2 (n_e - n_i)/chi);
/// the wall rows read (-3, 1) and (1, -3).
TridiagonalSystem assemble_poisson(std::span<const double> n_e, std::span<const double> n_i,
                                   double chi, double dx);

/// Thomas elimination; requires a diagonally dominant system.
std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys);

/// Potential at the cell centers. Throws ConfigError for chi <= 0 and
/// std::invalid_argument for mismatched or too short inputs.
std::vector<double> solve_poisson(std::span<const double> n_e, std::span<const double> n_i,
                                  double chi, double dx);

struct ResolutionCheck {
  bool ok = true;
  std::string message;
};

/// Warns (does not fail) when the cell width exceeds the Debye length sqrt(chi).
ResolutionCheck poisson_resolution_check(double dx, double chi);

} // namespace sheath

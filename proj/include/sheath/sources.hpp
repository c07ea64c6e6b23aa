#pragma once

// Ionization closures, collision rates, and momentum sources.

#include <cmath>
#include <span>
#include <vector>

#include "sheath/params.hpp"
#include "sheath/state.hpp"

namespace sheath {

/// nu_i = (L0/lambda_i) sqrt(8 kappa / pi + (pi^2 / 4) u^2), u normalized.
inline double ion_collision_rate(double u_i, double kappa, double macro_to_mfp) {
  if (macro_to_mfp == 0.0) return 0.0;
  constexpr double pi = constants::kPi;
  return macro_to_mfp * std::sqrt(8.0 * kappa / pi + 0.25 * pi * pi * u_i * u_i);
}

/// Ionization rate that restores the ion count lost during a convective
/// substep: (sum n_i_old - sum n_i_star) / (dt sum n_e_star).
double ionization_rate_I0(std::span<const double> n_i_old, std::span<const double> n_e_star,
                          std::span<const double> n_i_star, double dt);

/// Boundary-flux form: (m_N - m_1) / (sum n_e dx).
double ionization_rate_I1(double m_first, double m_last, std::span<const double> n_e,
                          double dx);

inline double electron_momentum_source(double n, double m, double phi_left, double phi_right,
                                       double dx, double eps, double nu_e) {
  return n * (phi_right - phi_left) / (2.0 * dx) / eps - nu_e * m;
}

inline double ion_momentum_source(double n, double m, double phi_left, double phi_right,
                                  double dx, double nu_i) {
  return -n * (phi_right - phi_left) / (2.0 * dx) - nu_i * m;
}

/// Momentum rate of one cell; phi_left/phi_right are the potentials of
/// cells j-1 and j+1. The ion friction rate is taken from the cell's own
/// velocity.
///   electrons: +n (phi_r - phi_l)/(2 dx)/eps - nu_e m
///   ions:      -n (phi_r - phi_l)/(2 dx)    - nu_i(u) m
inline double momentum_source(ConservedPair cell, Species species, double phi_left,
                              double phi_right, double dx, double nu_e,
                              const NondimParams& p) {
  if (species == Species::electron) {
    return electron_momentum_source(cell.n, cell.m, phi_left, phi_right, dx, p.eps, nu_e);
  }
  const double nu_i = ion_collision_rate(floored_velocity(cell.n, cell.m), p.kappa,
                                         p.macro_to_mfp);
  return ion_momentum_source(cell.n, cell.m, phi_left, phi_right, dx, nu_i);
}

/// min(1/nu_iz (if > 0), 1/max(nu_e, max_j nu_i,j), sqrt(eps chi)).
double source_dt(double nu_iz, double nu_e, std::span<const double> ion_velocity,
                 const NondimParams& p);

/// Collision part of source_dt only; +inf when collisionless.
double collision_dt(double nu_e, std::span<const double> ion_velocity, const NondimParams& p);
double ionization_dt(double nu_iz);

} // namespace sheath

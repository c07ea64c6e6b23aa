#include "sheath/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sheath/errors.hpp"

namespace sheath {

std::string_view to_string(ElectronBc bc) {
  return bc == ElectronBc::classical ? "classical" : "consistent";
}

ElectronBc parse_electron_bc(std::string_view name) {
  if (name == "classical") return ElectronBc::classical;
  if (name == "consistent") return ElectronBc::consistent;
  throw ConfigError("unknown electron_bc '" + std::string(name) + "'");
}

ConservedPair electron_ghost_classical(ConservedPair b, WallSide side, double u_wall) {
  return {b.n, 2.0 * outward_sign(side) * b.n * u_wall - b.m};
}

ElectronGhost electron_ghost_consistent(ConservedPair b, double phi_b, WallSide side,
                                        const NondimParams& p, double nu_iz, double dx) {
  const double u_wall = p.u_wall();
  const double u_b = floored_velocity(b.n, b.m);
  const double u_g = 2.0 * outward_sign(side) * u_wall - u_b;
  const double phi_g = potential_ghost(phi_b);
  double exponent = -0.5 * p.eps * (u_g * u_g - u_b * u_b) + (phi_g - phi_b) -
                    dx * p.eps * (p.nu_e + nu_iz) * u_wall;
  ElectronGhost g;
  if (std::abs(exponent) > kGhostExponentClamp) {
    exponent = std::clamp(exponent, -kGhostExponentClamp, kGhostExponentClamp);
    g.clamped = true;
  }
  const double n_g = b.n * std::exp(exponent);
  g.cell = {n_g, n_g * u_g};
  g.phi = phi_g;
  return g;
}

GhostPair wall_ghosts(ConservedPair e_b, ConservedPair i_b, double phi_b, WallSide side,
                      ElectronBc bc, const NondimParams& p, double nu_iz, double dx) {
  GhostPair g;
  g.ion = ion_ghost(i_b);
  g.phi = potential_ghost(phi_b);
  if (bc == ElectronBc::classical) {
    g.electron = electron_ghost_classical(e_b, side, p.u_wall());
  } else {
    const ElectronGhost eg = electron_ghost_consistent(e_b, phi_b, side, p, nu_iz, dx);
    g.electron = eg.cell;
    g.clamped = eg.clamped;
  }
  return g;
}

} // namespace sheath

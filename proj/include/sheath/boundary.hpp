#pragma once

// Ghost cells at the two grounded, absorbing walls.

#include <string_view>

#include "sheath/params.hpp"
#include "sheath/state.hpp"

namespace sheath {

enum class WallSide { left, right };

/// Outward normal sign e_n: -1 on the left wall, +1 on the right wall.
constexpr double outward_sign(WallSide side) { return side == WallSide::left ? -1.0 : 1.0; }

enum class ElectronBc { classical, consistent };

std::string_view to_string(ElectronBc bc);
ElectronBc parse_electron_bc(std::string_view name);

/// Bound on |exponent| in the consistent electron ghost density.
inline constexpr double kGhostExponentClamp = 50.0;

/// Ions leave the domain supersonically: the ghost copies the boundary cell.
constexpr ConservedPair ion_ghost(ConservedPair boundary) { return boundary; }

/// Density extrapolated, momentum set so that the face average equals the
/// outgoing thermal flux e_n n_B u_wall.
ConservedPair electron_ghost_classical(ConservedPair boundary, WallSide side, double u_wall);

/// Grounded wall at the face: (phi_G + phi_B)/2 = 0.
constexpr double potential_ghost(double phi_boundary) { return -phi_boundary; }

struct ElectronGhost {
  ConservedPair cell;
  double phi = 0.0;
  bool clamped = false; ///< exponent hit kGhostExponentClamp
};

/// Ghost built from the steady non-conservative electron momentum balance:
///   phi_G = -phi_B,  u_G = 2 e_n u_wall - u_B,
///   n_G = n_B exp(-(eps/2)(u_G^2 - u_B^2) + (phi_G - phi_B)
///                 - dx eps (nu_e + nu_iz) u_wall).
ElectronGhost electron_ghost_consistent(ConservedPair boundary, double phi_boundary,
                                        WallSide side, const NondimParams& p, double nu_iz,
                                        double dx);

struct GhostPair {
  ConservedPair electron;
  ConservedPair ion;
  double phi = 0.0;
  bool clamped = false;
};

/// All ghost values of one wall.
GhostPair wall_ghosts(ConservedPair electron_boundary, ConservedPair ion_boundary,
                      double phi_boundary, WallSide side, ElectronBc bc,
                      const NondimParams& p, double nu_iz, double dx);

} // namespace sheath

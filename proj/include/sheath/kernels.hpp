#pragma once

// Data-parallel stencil kernels of the convective substeps.
//
// Every kernel exists twice: kernels::serial is the reference loop and
// kernels::omp the OpenMP-parallel one. Each output element depends only on
// its own stencil, so the two are bit-identical for any thread count.
//
// Arrays named *_pad carry ghost cells: one layer (length N + 2) for the
// first-order kernels, two layers (length N + 4) for MUSCL-Hancock.
// Interface k of a first-order kernel sits between padded cells k and k + 1,
// i.e. interface 0 is the left wall and interface N the right wall.

#include <cmath>
#include <span>
#include <string_view>

#include "sheath/riemann.hpp"

namespace sheath {

enum class Backend { serial, openmp };

std::string_view to_string(Backend b);
Backend parse_backend(std::string_view name);

/// minmod(a, b): the smaller-magnitude argument when signs agree, else 0.
inline double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return std::abs(a) < std::abs(b) ? a : b;
}

struct FaceStates {
  ConservedPair left;  ///< value at the cell's left face
  ConservedPair right; ///< value at the cell's right face
};

/// Minmod-limited linear reconstruction on the conserved variables.
inline FaceStates limited_faces(ConservedPair l, ConservedPair c, ConservedPair r) {
  const double sn = minmod(c.n - l.n, r.n - c.n);
  const double sm = minmod(c.m - l.m, r.m - c.m);
  return {{c.n - 0.5 * sn, c.m - 0.5 * sm}, {c.n + 0.5 * sn, c.m + 0.5 * sm}};
}

/// MUSCL-Hancock face states of the center cell after the half-step
/// predictor U -= (dt / 2dx) (F(U_right) - F(U_left)). A zero slope gives
/// back the cell value on both faces.
inline FaceStates muscl_reconstruct(ConservedPair l, ConservedPair c, ConservedPair r,
                                    double v_th, double dt_over_dx, bool zero_slope = false) {
  FaceStates f = zero_slope ? FaceStates{c, c} : limited_faces(l, c, r);
  const ConservedPair fl = physical_flux(f.left, v_th);
  const ConservedPair fr = physical_flux(f.right, v_th);
  const double hn = 0.5 * dt_over_dx * (fr.n - fl.n);
  const double hm = 0.5 * dt_over_dx * (fr.m - fl.m);
  f.left.n -= hn;
  f.left.m -= hm;
  f.right.n -= hn;
  f.right.m -= hm;
  return f;
}

namespace kernels {

/// Output of N + 1 interface fluxes.
struct FluxView {
  std::span<double> n;
  std::span<double> m;
};

namespace serial {
/// Numerical flux at the N + 1 interfaces of a one-ghost padded species.
void interface_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out);
/// Density component of interface_fluxes only.
void density_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out);
/// u_new[j] = u_old[j] - dt/dx (F[j + 1] - F[j]) over the N cells.
void apply_divergence(std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new);
/// MUSCL-Hancock fluxes from a two-ghost padded species (length N + 4).
/// zero_edge_slopes forces a zero slope in the first/last cell and ghost.
void muscl_fluxes(const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out);
} // namespace serial

namespace omp {
/// Minimum loop length before the OpenMP region is entered.
inline constexpr std::size_t kParallelThreshold = 2048;

void interface_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out);
void density_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out);
void apply_divergence(std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new);
void muscl_fluxes(const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out);
} // namespace omp

/// Backend dispatch.
void interface_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out);
void density_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out);
void apply_divergence(Backend b, std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new);
void muscl_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out);

/// Number of OpenMP threads the omp backend would use (1 without OpenMP).
int available_threads();

} // namespace kernels
} // namespace sheath

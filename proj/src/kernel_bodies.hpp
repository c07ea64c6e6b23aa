#pragma once

// Per-element bodies shared by the serial and OpenMP kernel loops.

#include "sheath/kernels.hpp"

namespace sheath::kernels::detail {

inline void interface_flux_at(const FluxPolicy& pol, std::span<const double> n_pad,
                              std::span<const double> m_pad, FluxView out, std::size_t k) {
  const ConservedPair f =
      numerical_flux(pol, {n_pad[k], m_pad[k]}, {n_pad[k + 1], m_pad[k + 1]});
  out.n[k] = f.n;
  out.m[k] = f.m;
}

inline void density_flux_at(const FluxPolicy& pol, std::span<const double> n_pad,
                            std::span<const double> m_pad, std::span<double> out,
                            std::size_t k) {
  const ConservedPair l{n_pad[k], m_pad[k]};
  const ConservedPair r{n_pad[k + 1], m_pad[k + 1]};
  if (pol.is_rusanov_family()) {
    out[k] = 0.5 * (l.m + r.m) - 0.5 * wave_speeds(pol, l, r).lambda_max * (r.n - l.n);
  } else {
    const WaveSpeeds s = wave_speeds(pol, l, r);
    const double span = s.b_plus - s.b_minus;
    out[k] = span > 0.0 ? (s.b_plus * l.m - s.b_minus * r.m + s.b_plus * s.b_minus * (r.n - l.n)) /
                              span
                        : 0.5 * (l.m + r.m);
  }
}

inline void divergence_at(std::span<const double> u_old, std::span<const double> flux,
                          double dt_over_dx, std::span<double> u_new, std::size_t j) {
  u_new[j] = u_old[j] - dt_over_dx * (flux[j + 1] - flux[j]);
}

/// Reconstructed faces of padded (two-ghost) cell p, 1 <= p <= N + 2.
inline FaceStates muscl_cell(const FluxPolicy& pol, std::span<const double> n2,
                             std::span<const double> m2, double dt_over_dx, bool zero_edges,
                             std::size_t p) {
  const std::size_t last = n2.size() - 2; // padded index of the right ghost
  const bool edge = zero_edges && (p <= 2 || p >= last - 1);
  return muscl_reconstruct({n2[p - 1], m2[p - 1]}, {n2[p], m2[p]}, {n2[p + 1], m2[p + 1]},
                           pol.v_th, dt_over_dx, edge);
}

/// Interface k (0..N) lies between padded cells k + 1 and k + 2.
inline void muscl_flux_at(const FluxPolicy& pol, std::span<const double> n2,
                          std::span<const double> m2, double dt_over_dx, bool zero_edges,
                          FluxView out, std::size_t k) {
  const FaceStates a = muscl_cell(pol, n2, m2, dt_over_dx, zero_edges, k + 1);
  const FaceStates b = muscl_cell(pol, n2, m2, dt_over_dx, zero_edges, k + 2);
  const ConservedPair f = numerical_flux(pol, a.right, b.left);
  out.n[k] = f.n;
  out.m[k] = f.m;
}

} // namespace sheath::kernels::detail

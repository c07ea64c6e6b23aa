#include "kernel_bodies.hpp"

namespace sheath::kernels::serial {

void interface_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out) {
  const std::size_t faces = n_pad.size() - 1;
  for (std::size_t k = 0; k < faces; ++k) detail::interface_flux_at(pol, n_pad, m_pad, out, k);
}

void density_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out) {
  const std::size_t faces = n_pad.size() - 1;
  for (std::size_t k = 0; k < faces; ++k) detail::density_flux_at(pol, n_pad, m_pad, out, k);
}

void apply_divergence(std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new) {
  const std::size_t n = u_old.size();
  for (std::size_t j = 0; j < n; ++j) detail::divergence_at(u_old, flux, dt_over_dx, u_new, j);
}

void muscl_fluxes(const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out) {
  const std::size_t faces = n_pad2.size() - 3;
  for (std::size_t k = 0; k < faces; ++k) {
    detail::muscl_flux_at(pol, n_pad2, m_pad2, dt_over_dx, zero_edge_slopes, out, k);
  }
}

} // namespace sheath::kernels::serial

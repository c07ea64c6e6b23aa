#include "sheath/kernels.hpp"

#include <string>

#include "sheath/errors.hpp"

namespace sheath {

std::string_view to_string(Backend b) { return b == Backend::serial ? "serial" : "openmp"; }

Backend parse_backend(std::string_view name) {
  if (name == "serial") return Backend::serial;
  if (name == "openmp") return Backend::openmp;
  throw ConfigError("unknown backend '" + std::string(name) + "'");
}

namespace kernels {

void interface_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out) {
  if (b == Backend::serial) serial::interface_fluxes(pol, n_pad, m_pad, out);
  else omp::interface_fluxes(pol, n_pad, m_pad, out);
}

void density_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out) {
  if (b == Backend::serial) serial::density_fluxes(pol, n_pad, m_pad, out);
  else omp::density_fluxes(pol, n_pad, m_pad, out);
}

void apply_divergence(Backend b, std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new) {
  if (b == Backend::serial) serial::apply_divergence(u_old, flux, dt_over_dx, u_new);
  else omp::apply_divergence(u_old, flux, dt_over_dx, u_new);
}

void muscl_fluxes(Backend b, const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out) {
  if (b == Backend::serial) serial::muscl_fluxes(pol, n_pad2, m_pad2, dt_over_dx, zero_edge_slopes, out);
  else omp::muscl_fluxes(pol, n_pad2, m_pad2, dt_over_dx, zero_edge_slopes, out);
}

} // namespace kernels
} // namespace sheath

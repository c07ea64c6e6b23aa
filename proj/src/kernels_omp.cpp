#include "kernel_bodies.hpp"

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sheath::kernels::omp {

// Signed loop indices keep older OpenMP runtimes happy.
using index_t = std::int64_t;

void interface_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                      std::span<const double> m_pad, FluxView out) {
  const auto faces = static_cast<index_t>(n_pad.size() - 1);
#pragma omp parallel for schedule(static) if (faces >= static_cast<index_t>(kParallelThreshold))
  for (index_t k = 0; k < faces; ++k) {
    detail::interface_flux_at(pol, n_pad, m_pad, out, static_cast<std::size_t>(k));
  }
}

void density_fluxes(const FluxPolicy& pol, std::span<const double> n_pad,
                    std::span<const double> m_pad, std::span<double> out) {
  const auto faces = static_cast<index_t>(n_pad.size() - 1);
#pragma omp parallel for schedule(static) if (faces >= static_cast<index_t>(kParallelThreshold))
  for (index_t k = 0; k < faces; ++k) {
    detail::density_flux_at(pol, n_pad, m_pad, out, static_cast<std::size_t>(k));
  }
}

void apply_divergence(std::span<const double> u_old, std::span<const double> flux,
                      double dt_over_dx, std::span<double> u_new) {
  const auto n = static_cast<index_t>(u_old.size());
#pragma omp parallel for schedule(static) if (n >= static_cast<index_t>(kParallelThreshold))
  for (index_t j = 0; j < n; ++j) {
    detail::divergence_at(u_old, flux, dt_over_dx, u_new, static_cast<std::size_t>(j));
  }
}

void muscl_fluxes(const FluxPolicy& pol, std::span<const double> n_pad2,
                  std::span<const double> m_pad2, double dt_over_dx, bool zero_edge_slopes,
                  FluxView out) {
  const auto faces = static_cast<index_t>(n_pad2.size() - 3);
#pragma omp parallel for schedule(static) if (faces >= static_cast<index_t>(kParallelThreshold))
  for (index_t k = 0; k < faces; ++k) {
    detail::muscl_flux_at(pol, n_pad2, m_pad2, dt_over_dx, zero_edge_slopes, out,
                          static_cast<std::size_t>(k));
  }
}

} // namespace sheath::kernels::omp

namespace sheath::kernels {

int available_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

} // namespace sheath::kernels

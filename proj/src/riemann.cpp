#include "sheath/riemann.hpp"

#include <limits>

#include "sheath/errors.hpp"

namespace sheath {

std::string_view to_string(FluxVariant v) {
  switch (v) {
  case FluxVariant::rusanov: return "rusanov";
  case FluxVariant::hll: return "hll";
  case FluxVariant::fixed_hll: return "fixed-hll";
  case FluxVariant::scaled_fixed_hll: return "scaled-fixed-hll";
  case FluxVariant::controlled_rusanov: return "controlled-rusanov";
  }
  return "?";
}

FluxVariant parse_flux_variant(std::string_view name) {
  for (FluxVariant v : {FluxVariant::rusanov, FluxVariant::hll, FluxVariant::fixed_hll,
                        FluxVariant::scaled_fixed_hll, FluxVariant::controlled_rusanov}) {
    if (to_string(v) == name) return v;
  }
  throw ConfigError("unknown flux variant '" + std::string(name) + "'");
}

FluxPolicy FluxPolicy::make(FluxVariant variant, Species species, const NondimParams& p,
                            double dx, double ion_diffusion_tuning) {
  const bool ion_only =
      variant == FluxVariant::fixed_hll || variant == FluxVariant::scaled_fixed_hll;
  if (species == Species::electron && ion_only) {
    throw ConfigError(std::string(to_string(variant)) + " is an ion flux");
  }
  if (species == Species::ion && variant == FluxVariant::controlled_rusanov) {
    throw ConfigError("controlled-rusanov is an electron flux");
  }
  FluxPolicy pol;
  pol.variant = variant;
  pol.v_th = species == Species::electron ? p.v_th_e() : p.v_th_i();
  pol.eps = p.eps;
  pol.chi = p.chi;
  pol.dx = dx;
  pol.kappa = p.kappa;
  pol.macro_to_mfp = p.macro_to_mfp;
  pol.tuning = ion_diffusion_tuning;
  pol.validate();
  return pol;
}

void FluxPolicy::validate() const {
  if (!(v_th > 0.0)) throw ConfigError("flux policy needs a positive thermal speed");
  switch (variant) {
  case FluxVariant::controlled_rusanov:
    if (!(eps > 0.0) || !(chi > 0.0)) {
      throw ConfigError("controlled-rusanov needs eps and chi");
    }
    break;
  case FluxVariant::scaled_fixed_hll:
    if (!(dx > 0.0)) throw ConfigError("scaled-fixed-hll needs dx");
    if (!(tuning >= 0.0)) throw ConfigError("ion_diffusion_tuning must be >= 0");
    if (!(macro_to_mfp >= 0.0) || !(kappa > 0.0)) {
      throw ConfigError("scaled-fixed-hll needs kappa and macro_to_mfp");
    }
    break;
  default:
    break;
  }
}

double species_convective_dt(const FluxPolicy& pol, std::span<const double> n_padded,
                             std::span<const double> m_padded, double dx) {
  double smax = 0.0;
  for (std::size_t k = 0; k + 1 < n_padded.size(); ++k) {
    const ConservedPair l{n_padded[k], m_padded[k]};
    const ConservedPair r{n_padded[k + 1], m_padded[k + 1]};
    smax = std::max(smax, cfl_speed(pol, l, r));
  }
  if (smax <= 0.0) return std::numeric_limits<double>::infinity();
  return dx / (2.0 * smax);
}

} // namespace sheath

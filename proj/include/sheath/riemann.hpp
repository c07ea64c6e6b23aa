#pragma once

// Interface fluxes for the isothermal Euler subsystems of each species.
//
//   rusanov             lambda = max(|u_L|, |u_R|) + v_th
//   hll                 b+- = u_roe +- v_th
//   fixed-hll           b+- = u_roe +- u_B                     (ions)
//   scaled-fixed-hll    b+- = u_roe +- max(M u_B, v_th),
//                       M = 1 / (1 + tuning dx nu_i(u_roe))     (ions)
//   controlled-rusanov  lambda = sqrt(eps chi)(max|u| + v_th)   (electrons)
//
// All HLL bounds are clamped so that b- <= 0 <= b+.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <string_view>

#include "sheath/params.hpp"
#include "sheath/sources.hpp"
#include "sheath/state.hpp"

namespace sheath {

enum class FluxVariant { rusanov, hll, fixed_hll, scaled_fixed_hll, controlled_rusanov };

std::string_view to_string(FluxVariant v);
/// Parses the config spelling (`fixed-hll`, ...); throws ConfigError.
FluxVariant parse_flux_variant(std::string_view name);

struct WaveSpeeds {
  double b_minus = 0.0;
  double b_plus = 0.0;
  double lambda_max = 0.0;
};

/// A flux variant bound to the species context it needs.
struct FluxPolicy {
  FluxVariant variant = FluxVariant::rusanov;
  double v_th = 1.0;
  double eps = 0.0;          // controlled-rusanov
  double chi = 0.0;          // controlled-rusanov
  double dx = 0.0;           // scaled-fixed-hll
  double kappa = 0.0;        // scaled-fixed-hll (ion collision rate)
  double macro_to_mfp = 0.0; // scaled-fixed-hll
  double tuning = 30.0;      // scaled-fixed-hll

  /// Binds a variant to a species. Throws ConfigError when the variant is not
  /// allowed for that species.
  static FluxPolicy make(FluxVariant variant, Species species, const NondimParams& p,
                         double dx, double ion_diffusion_tuning = 30.0);

  /// Throws ConfigError when context required by the variant is missing.
  void validate() const;

  bool is_rusanov_family() const {
    return variant == FluxVariant::rusanov || variant == FluxVariant::controlled_rusanov;
  }
  /// Same policy with the controlled diffusion rescaling removed.
  FluxPolicy unscaled() const {
    FluxPolicy out = *this;
    if (variant == FluxVariant::controlled_rusanov) out.variant = FluxVariant::rusanov;
    return out;
  }
};

inline ConservedPair physical_flux(ConservedPair u, double v_th) {
  const double vel = floored_velocity(u.n, u.m);
  return {u.m, u.m * vel + u.n * v_th * v_th};
}

inline double roe_velocity(ConservedPair left, ConservedPair right) {
  const double sl = std::sqrt(std::max(left.n, kDensityFloor));
  const double sr = std::sqrt(std::max(right.n, kDensityFloor));
  return (sl * floored_velocity(left.n, left.m) + sr * floored_velocity(right.n, right.m)) /
         (sl + sr);
}

inline double max_abs_velocity(ConservedPair left, ConservedPair right) {
  return std::max(std::abs(floored_velocity(left.n, left.m)),
                  std::abs(floored_velocity(right.n, right.m)));
}

/// Rusanov flux with an explicit diffusion coefficient.
inline ConservedPair rusanov_flux_with(ConservedPair left, ConservedPair right, double v_th,
                                       double lambda) {
  const ConservedPair fl = physical_flux(left, v_th);
  const ConservedPair fr = physical_flux(right, v_th);
  return {0.5 * (fl.n + fr.n) - 0.5 * lambda * (right.n - left.n),
          0.5 * (fl.m + fr.m) - 0.5 * lambda * (right.m - left.m)};
}

inline ConservedPair rusanov_flux(ConservedPair left, ConservedPair right, double v_th) {
  return rusanov_flux_with(left, right, v_th, max_abs_velocity(left, right) + v_th);
}

inline ConservedPair hll_flux(ConservedPair left, ConservedPair right, double v_th,
                              WaveSpeeds s) {
  const double bp = s.b_plus;
  const double bm = s.b_minus;
  const ConservedPair fl = physical_flux(left, v_th);
  const ConservedPair fr = physical_flux(right, v_th);
  const double span = bp - bm;
  if (span <= 0.0) {
    return {0.5 * (fl.n + fr.n), 0.5 * (fl.m + fr.m)};
  }
  const double inv = 1.0 / span;
  const double diff = bp * bm * inv;
  return {(bp * fl.n - bm * fr.n) * inv + diff * (right.n - left.n),
          (bp * fl.m - bm * fr.m) * inv + diff * (right.m - left.m)};
}

/// HLL bounds from a Roe velocity and a half-width, clamped around zero.
inline WaveSpeeds clamped_speeds(double u_roe, double half_width) {
  WaveSpeeds s;
  s.b_plus = std::max(0.0, u_roe + half_width);
  s.b_minus = std::min(0.0, u_roe - half_width);
  s.lambda_max = std::max(-s.b_minus, s.b_plus);
  return s;
}

/// Scaling factor of the ion Bohm-speed diffusion, 1/(1 + tuning dx nu_i).
inline double ion_diffusion_factor(const FluxPolicy& pol, double u_roe) {
  const double nu_i = ion_collision_rate(u_roe, pol.kappa, pol.macro_to_mfp);
  return 1.0 / (1.0 + pol.tuning * pol.dx * nu_i);
}

inline WaveSpeeds wave_speeds(const FluxPolicy& pol, ConservedPair left, ConservedPair right) {
  switch (pol.variant) {
  case FluxVariant::rusanov: {
    const double lam = max_abs_velocity(left, right) + pol.v_th;
    return {-lam, lam, lam};
  }
  case FluxVariant::controlled_rusanov: {
    const double lam = std::sqrt(pol.eps * pol.chi) * (max_abs_velocity(left, right) + pol.v_th);
    return {-lam, lam, lam};
  }
  case FluxVariant::hll:
    return clamped_speeds(roe_velocity(left, right), pol.v_th);
  case FluxVariant::fixed_hll:
    return clamped_speeds(roe_velocity(left, right), NondimParams::u_bohm());
  case FluxVariant::scaled_fixed_hll: {
    const double u_roe = roe_velocity(left, right);
    const double width =
        std::max(ion_diffusion_factor(pol, u_roe) * NondimParams::u_bohm(), pol.v_th);
    return clamped_speeds(u_roe, width);
  }
  }
  return {};
}

inline ConservedPair numerical_flux(const FluxPolicy& pol, ConservedPair left,
                                    ConservedPair right) {
  if (pol.is_rusanov_family()) {
    return rusanov_flux_with(left, right, pol.v_th, wave_speeds(pol, left, right).lambda_max);
  }
  return hll_flux(left, right, pol.v_th, wave_speeds(pol, left, right));
}

/// Signal speed bounding the interface Riemann problem for the CFL budget.
/// Rescaled diffusion does not change it: controlled-rusanov reports the
/// plain Rusanov speed, scaled-fixed-hll the fixed-hll one.
inline double cfl_speed(const FluxPolicy& pol, ConservedPair left, ConservedPair right) {
  FluxPolicy p = pol.unscaled();
  if (p.variant == FluxVariant::scaled_fixed_hll) p.variant = FluxVariant::fixed_hll;
  return wave_speeds(p, left, right).lambda_max;
}

/// Largest dt with dt <= dx / (2 max_interface speed) for one species, with
/// ghost cells supplied by the caller (padded arrays of length N + 2).
double species_convective_dt(const FluxPolicy& pol, std::span<const double> n_padded,
                             std::span<const double> m_padded, double dx);

} // namespace sheath

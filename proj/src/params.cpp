#include "sheath/params.hpp"

#include <cmath>
#include <string>

#include "sheath/errors.hpp"

namespace sheath {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ParameterError(std::string(name) + " must be finite and > 0, got " +
                         std::to_string(v));
  }
}

} // namespace

PhysicalSetup PhysicalSetup::with_gap_scaled(double c) const {
  require_positive(c, "gap scale");
  PhysicalSetup out = *this;
  out.L0 *= c;
  out.macro_to_mfp *= c;
  return out;
}

double electron_collision_rate(double eps, double macro_to_mfp, double sigma_ratio) {
  return sigma_ratio * macro_to_mfp * std::sqrt(8.0 / (constants::kPi * eps));
}

NondimParams NondimParams::make(double eps, double kappa, double chi,
                                double macro_to_mfp, double sigma_ratio) {
  require_positive(eps, "eps");
  require_positive(kappa, "kappa");
  require_positive(chi, "chi");
  require_positive(sigma_ratio, "sigma_ratio");
  if (eps > 1.0) throw ParameterError("eps = m_e/m_i must be <= 1");
  if (!(macro_to_mfp >= 0.0) || !std::isfinite(macro_to_mfp)) {
    throw ParameterError("macro_to_mfp must be finite and >= 0");
  }
  NondimParams p{};
  p.eps = eps;
  p.kappa = kappa;
  p.chi = chi;
  p.macro_to_mfp = macro_to_mfp;
  p.sigma_ratio = sigma_ratio;
  p.nu_e = electron_collision_rate(eps, macro_to_mfp, sigma_ratio);
  return p;
}

double NondimParams::v_th_e() const { return 1.0 / std::sqrt(eps); }
double NondimParams::v_th_i() const { return std::sqrt(kappa); }
double NondimParams::u_wall() const { return 1.0 / std::sqrt(2.0 * constants::kPi * eps); }
double NondimParams::inv_plasma_freq() const { return std::sqrt(eps * chi); }
double NondimParams::debye_length() const { return std::sqrt(chi); }

NondimParams derive_nondim(const PhysicalSetup& s) {
  require_positive(s.n0, "n0");
  require_positive(s.Te, "Te");
  require_positive(s.Ti, "Ti");
  require_positive(s.mass_ratio, "mass_ratio");
  require_positive(s.L0, "L0");
  using namespace constants;
  const double e2 = kElementaryCharge * kElementaryCharge;
  const double chi = kBoltzmann * s.Te * kVacuumPermittivity / (e2 * s.n0 * s.L0 * s.L0);
  return NondimParams::make(s.mass_ratio, s.Ti / s.Te, chi, s.macro_to_mfp, s.sigma_ratio);
}

TheoreticalTargets theoretical_targets(const NondimParams& p) {
  require_positive(p.eps, "eps");
  TheoreticalTargets t{};
  t.v_f_bar = 0.5 * std::log(2.0 * constants::kPi * p.eps);
  t.v_s_bar = 0.5;
  t.phi_peak = t.v_s_bar - t.v_f_bar;
  return t;
}

} // namespace sheath

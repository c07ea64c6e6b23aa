#pragma once

// Physical and non-dimensional parameter sets for the bounded two-fluid
// plasma. Every scheme consumes NondimParams only; PhysicalSetup exists to
// build one from laboratory quantities.

namespace sheath {

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;         // J/K
inline constexpr double kElementaryCharge = 1.602176634e-19; // C
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m
inline constexpr double kElectronMass = 9.1093837015e-31;  // kg
inline constexpr double kPi = 3.14159265358979323846;
} // namespace constants

struct PhysicalSetup {
  double n0;           ///< reference (mean ion) number density [m^-3]
  double Te;           ///< electron temperature [K]
  double Ti;           ///< ion temperature [K]
  double mass_ratio;   ///< m_e / m_i
  double L0;           ///< wall gap [m]
  double macro_to_mfp; ///< L0 / ion mean free path; 0 means collisionless
  double sigma_ratio;  ///< electron-neutral over ion-neutral cross section

  /// Same plasma in a gap c times wider. The mean free path is a property of
  /// the gas, so L0/lambda_i scales with the gap.
  PhysicalSetup with_gap_scaled(double c) const;
};

/// Non-dimensional parameters, normalized by the Bohm speed, the wall gap and
/// the electron temperature.
struct NondimParams {
  double eps;          ///< m_e / m_i
  double kappa;        ///< T_i / T_e
  double chi;          ///< (lambda_D / L0)^2
  double nu_e;         ///< constant electron-neutral collision rate
  double macro_to_mfp; ///< L0 / lambda_i
  double sigma_ratio;  ///< sigma_en / sigma_in

  /// Validates and fills the derived electron collision rate.
  static NondimParams make(double eps, double kappa, double chi,
                           double macro_to_mfp = 0.0, double sigma_ratio = 0.1);

  double v_th_e() const;
  double v_th_i() const;
  static constexpr double u_bohm() { return 1.0; }
  /// Outgoing thermal electron speed at a wall, 1/sqrt(2 pi eps).
  double u_wall() const;
  /// Inverse normalized electron plasma frequency, sqrt(eps chi).
  double inv_plasma_freq() const;
  double debye_length() const;
};

NondimParams derive_nondim(const PhysicalSetup& setup);

/// nu_e = sigma_ratio * macro_to_mfp * sqrt(8 / (pi eps)).
double electron_collision_rate(double eps, double macro_to_mfp, double sigma_ratio);

struct TheoreticalTargets {
  double v_f_bar;  ///< floating-wall (sheath) drop, ln(2 pi eps)/2
  double v_s_bar;  ///< pre-sheath drop, 1/2
  double phi_peak; ///< expected center potential relative to the wall
};

TheoreticalTargets theoretical_targets(const NondimParams& p);

} // namespace sheath

#include "sheath/sources.hpp"

#include <algorithm>
#include <limits>

#include "sheath/errors.hpp"

namespace sheath {

namespace {

double plain_sum(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

} // namespace

double ionization_rate_I0(std::span<const double> n_i_old, std::span<const double> n_e_star,
                          std::span<const double> n_i_star, double dt) {
  const double electrons = plain_sum(n_e_star);
  if (!(electrons > 0.0)) throw DegenerateStateError("no electrons left for ionization");
  if (!(dt > 0.0)) throw DegenerateStateError("ionization rate needs dt > 0");
  return (plain_sum(n_i_old) - plain_sum(n_i_star)) / (dt * electrons);
}

double ionization_rate_I1(double m_first, double m_last, std::span<const double> n_e,
                          double dx) {
  const double electrons = plain_sum(n_e) * dx;
  if (!(electrons > 0.0)) throw DegenerateStateError("no electrons left for ionization");
  return (m_last - m_first) / electrons;
}

double ionization_dt(double nu_iz) {
  return nu_iz > 0.0 ? 1.0 / nu_iz : std::numeric_limits<double>::infinity();
}

double collision_dt(double nu_e, std::span<const double> ion_velocity, const NondimParams& p) {
  double nu = nu_e;
  for (double u : ion_velocity) nu = std::max(nu, ion_collision_rate(u, p.kappa, p.macro_to_mfp));
  return nu > 0.0 ? 1.0 / nu : std::numeric_limits<double>::infinity();
}

double source_dt(double nu_iz, double nu_e, std::span<const double> ion_velocity,
                 const NondimParams& p) {
  return std::min({ionization_dt(nu_iz), collision_dt(nu_e, ion_velocity, p),
                   p.inv_plasma_freq()});
}

} // namespace sheath

#include "sheath/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sheath {

std::vector<bool> sheath_mask(const Mesh& mesh, const NondimParams& p) {
  const double width = kSheathWidthDebye * p.debye_length();
  std::vector<bool> mask(mesh.size());
  for (std::size_t j = 0; j < mesh.size(); ++j) {
    const double x = mesh.center(j);
    mask[j] = std::min(x, 1.0 - x) < width;
  }
  return mask;
}

double ambipolarity_error(const PlasmaState& s) {
  double diff = 0.0;
  double ref = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    diff = std::max(diff, std::abs(s.electrons.momentum[j] - s.ions.momentum[j]));
    ref = std::max(ref, std::abs(s.ions.momentum[j]));
  }
  return ref > 0.0 ? diff / ref : 0.0;
}

std::size_t ambipolarity_peak_cell(const PlasmaState& s) {
  std::size_t arg = 0;
  double best = -1.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double d = std::abs(s.electrons.momentum[j] - s.ions.momentum[j]);
    if (d > best) {
      best = d;
      arg = j;
    }
  }
  return arg;
}

double oscillation_index(std::span<const double> m) {
  const std::size_t n = m.size();
  if (n < 3) return 0.0;
  double mean = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) mean += m[j];
  mean /= static_cast<double>(n - 2);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    const double d2 = m[j + 1] - 2.0 * m[j] + m[j - 1];
    num += d2 * d2;
    den += (m[j] - mean) * (m[j] - mean);
  }
  constexpr double floor = 1e-300;
  return std::min(1.0, num / (16.0 * den + floor));
}

std::vector<double> numerical_diffusion_estimate(const PlasmaState& s, const NondimParams& p,
                                                 double dx) {
  const double scale = dx / p.inv_plasma_freq();
  std::vector<double> out(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) out[j] = s.electrons.density[j] * scale;
  return out;
}

double wall_momentum_jump(std::span<const double> m) {
  const std::size_t n = m.size();
  const double left = std::abs(m[0] - (2.0 * m[1] - m[2]));
  const double right = std::abs(m[n - 1] - (2.0 * m[n - 2] - m[n - 3]));
  return 0.5 * (left + right);
}

double phi_peak(const PlasmaState& s) { return *std::max_element(s.phi.begin(), s.phi.end()); }

SheathEdgeMach ion_mach_at_sheath_edge(const PlasmaState& s, const Mesh& mesh,
                                       const NondimParams& p) {
  const std::vector<bool> mask = sheath_mask(mesh, p);
  const double cs = std::sqrt(1.0 + p.kappa);
  SheathEdgeMach out;
  const std::size_t n = mesh.size();
  std::size_t jl = 0;
  while (jl + 1 < n && mask[jl + 1]) ++jl;
  std::size_t jr = n - 1;
  while (jr > 0 && mask[jr - 1]) --jr;
  out.left = std::abs(floored_velocity(s.ions.density[jl], s.ions.momentum[jl])) / cs;
  out.right = std::abs(floored_velocity(s.ions.density[jr], s.ions.momentum[jr])) / cs;
  return out;
}

namespace {

struct AmplitudeFit {
  double a = 0.0;
  double max_rel = 1.0;
};

/// For fixed b, the amplitude minimizing max_j |a c_j - v_j| / |v_j| balances
/// the extreme ratios r_j = c_j / v_j: a = 2 / (r_min + r_max).
AmplitudeFit fit_amplitude(std::span<const double> x, std::span<const double> v,
                           const std::vector<bool>& exclude, double b) {
  double rmin = std::numeric_limits<double>::infinity();
  double rmax = -rmin;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (exclude[j]) continue;
    const double r = std::cos(b * (x[j] - 0.5)) / v[j];
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  AmplitudeFit f;
  if (!(rmin > 0.0)) return f;
  f.a = 2.0 / (rmin + rmax);
  f.max_rel = (rmax - rmin) / (rmax + rmin);
  return f;
}

} // namespace

CosineFit fit_bulk_cosine(std::span<const double> x, std::span<const double> v,
                          const std::vector<bool>& exclude) {
  // Coarse scan over b in [0, 2 pi], then golden-section refinement.
  constexpr int kScan = 2000;
  const double b_max = 2.0 * 3.14159265358979323846;
  double best_b = 0.0;
  double best = fit_amplitude(x, v, exclude, 0.0).max_rel;
  for (int k = 1; k <= kScan; ++k) {
    const double b = b_max * k / kScan;
    const double e = fit_amplitude(x, v, exclude, b).max_rel;
    if (e < best) {
      best = e;
      best_b = b;
    }
  }
  double lo = std::max(0.0, best_b - b_max / kScan);
  double hi = std::min(b_max, best_b + b_max / kScan);
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  for (int it = 0; it < 100; ++it) {
    const double c = hi - g * (hi - lo);
    const double d = lo + g * (hi - lo);
    if (fit_amplitude(x, v, exclude, c).max_rel < fit_amplitude(x, v, exclude, d).max_rel) hi = d;
    else lo = c;
  }
  CosineFit fit;
  fit.b = 0.5 * (lo + hi);
  const AmplitudeFit f = fit_amplitude(x, v, exclude, fit.b);
  fit.a = f.a;
  fit.max_rel_residual = f.max_rel;
  return fit;
}

Diagnostics measure(const PlasmaState& s, const Mesh& mesh, const NondimParams& p,
                    double steady_residual, const TimeStepBudget& budget) {
  Diagnostics d;
  d.ambipolarity_err = ambipolarity_error(s);
  d.phi_peak = phi_peak(s);
  const double target = theoretical_targets(p).phi_peak;
  d.phi_peak_rel_err = std::abs(d.phi_peak - target) / target;
  d.ion_total = total_number(s.ions.density, mesh.dx());
  d.steady_residual = steady_residual;
  d.dt_budget = budget;
  d.sheath_diffusion_estimate = numerical_diffusion_estimate(s, p, mesh.dx());
  d.oscillation_index = oscillation_index(s.ions.momentum);
  d.sheath_edge_mach = ion_mach_at_sheath_edge(s, mesh, p);
  return d;
}

} // namespace sheath

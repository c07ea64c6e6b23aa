#pragma once

// Shared helpers for the test binaries: random state generators and small
// comparison utilities.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "sheath/state.hpp"

namespace testing {

inline double rel_diff(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
  return std::abs(a - b) / scale;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d = std::max(d, std::abs(a[j] - b[j]));
  return d;
}

inline double max_abs(const std::vector<double>& a) {
  double d = 0.0;
  for (double v : a) d = std::max(d, std::abs(v));
  return d;
}

/// Seeded generator of plausible plasma states.
class StateGen {
public:
  explicit StateGen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  sheath::ConservedPair cell(double n_lo, double n_hi, double u_abs) {
    const double n = uniform(n_lo, n_hi);
    return {n, n * uniform(-u_abs, u_abs)};
  }

  /// Positive densities, bounded velocities, smooth-ish potential.
  sheath::PlasmaState state(std::size_t n, double u_e = 5.0, double u_i = 0.5) {
    sheath::PlasmaState s;
    s.electrons.density.resize(n);
    s.electrons.momentum.resize(n);
    s.ions.density.resize(n);
    s.ions.momentum.resize(n);
    s.phi.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      s.electrons.density[j] = uniform(0.5, 1.5);
      s.electrons.momentum[j] = s.electrons.density[j] * uniform(-u_e, u_e);
      s.ions.density[j] = uniform(0.5, 1.5);
      s.ions.momentum[j] = s.ions.density[j] * uniform(-u_i, u_i);
      s.phi[j] = uniform(0.0, 1.0);
    }
    s.nu_iz = uniform(0.0, 2.0);
    return s;
  }

  /// Random state made mirror-symmetric: even densities and potential, odd momenta.
  sheath::PlasmaState symmetric_state(std::size_t n, double u_e = 5.0, double u_i = 0.5) {
    sheath::PlasmaState s = state(n, u_e, u_i);
    for (std::size_t j = 0; j < n / 2; ++j) {
      const std::size_t k = n - 1 - j;
      s.electrons.density[k] = s.electrons.density[j];
      s.ions.density[k] = s.ions.density[j];
      s.phi[k] = s.phi[j];
      s.electrons.momentum[k] = -s.electrons.momentum[j];
      s.ions.momentum[k] = -s.ions.momentum[j];
    }
    return s;
  }

  /// Quasi-neutral state built from a few low Fourier modes around x = 1/2:
  /// n_e = n_i = 1 + O(0.3), u = O(1.5). With `symmetric`, densities are even
  /// and velocities odd about the center. The potential is left at zero.
  sheath::PlasmaState smooth_state(const sheath::Mesh& mesh, bool symmetric) {
    constexpr double two_pi = 6.283185307179586;
    double a[3], b[3], c[3], d[3];
    for (int k = 0; k < 3; ++k) {
      a[k] = uniform(-0.1, 0.1);
      b[k] = symmetric ? 0.0 : uniform(-0.1, 0.1);
      c[k] = uniform(-0.5, 0.5);
      d[k] = symmetric ? 0.0 : uniform(-0.5, 0.5);
    }
    sheath::PlasmaState s = sheath::init_uniform(mesh);
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      const double y = mesh.center(j) - 0.5;
      double n = 1.0, u = 0.0;
      for (int k = 0; k < 3; ++k) {
        const double w = two_pi * (k + 1) * y;
        n += a[k] * std::cos(w) + b[k] * std::sin(w);
        u += c[k] * std::sin(w) + d[k] * std::cos(w);
      }
      s.electrons.density[j] = s.ions.density[j] = n;
      s.electrons.momentum[j] = s.ions.momentum[j] = n * u;
    }
    return s;
  }

private:
  std::mt19937_64 rng_;
};

/// Largest deviation of a state from its own mirror image.
inline double asymmetry(const sheath::PlasmaState& s) {
  const sheath::PlasmaState m = sheath::mirror(s);
  return std::max({max_abs_diff(s.electrons.density, m.electrons.density),
                   max_abs_diff(s.ions.density, m.ions.density),
                   max_abs_diff(s.electrons.momentum, m.electrons.momentum),
                   max_abs_diff(s.ions.momentum, m.ions.momentum),
                   max_abs_diff(s.phi, m.phi)});
}

} // namespace testing

#include "sheath/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sheath/errors.hpp"

namespace sheath {

double TridiagonalSystem::residual_max(std::span<const double> x) const {
  const std::size_t n = size();
  double r = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double ax = diag[j] * x[j];
    if (j > 0) ax += sub[j] * x[j - 1];
    if (j + 1 < n) ax += super[j] * x[j + 1];
    r = std::max(r, std::abs(ax - rhs[j]));
  }
  return r;
}

TridiagonalSystem assemble_poisson(std::span<const double> n_e, std::span<const double> n_i,
                                   double chi, double dx) {
  if (!(chi > 0.0)) throw ConfigError("Poisson solve needs chi > 0");
  if (n_e.size() != n_i.size()) throw std::invalid_argument("density fields differ in length");
  const std::size_t n = n_e.size();
  if (n < 2) throw std::invalid_argument("Poisson solve needs at least 2 cells");

  TridiagonalSystem sys;
  sys.sub.assign(n, 1.0);
  sys.diag.assign(n, -2.0);
  sys.super.assign(n, 1.0);
  sys.rhs.resize(n);
  sys.sub[0] = 0.0;
  sys.super[n - 1] = 0.0;
  sys.diag[0] = -3.0;
  sys.diag[n - 1] = -3.0;
  const double scale = dx * dx / chi;
  for (std::size_t j = 0; j < n; ++j) sys.rhs[j] = scale * (n_e[j] - n_i[j]);
  return sys;
}

std::vector<double> solve_tridiagonal(const TridiagonalSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<double> c(n), d(n), x(n);
  c[0] = sys.super[0] / sys.diag[0];
  d[0] = sys.rhs[0] / sys.diag[0];
  for (std::size_t j = 1; j < n; ++j) {
    const double denom = sys.diag[j] - sys.sub[j] * c[j - 1];
    c[j] = j + 1 < n ? sys.super[j] / denom : 0.0;
    d[j] = (sys.rhs[j] - sys.sub[j] * d[j - 1]) / denom;
  }
  x[n - 1] = d[n - 1];
  for (std::size_t j = n - 1; j-- > 0;) x[j] = d[j] - c[j] * x[j + 1];
  return x;
}

std::vector<double> solve_poisson(std::span<const double> n_e, std::span<const double> n_i,
                                  double chi, double dx) {
  return solve_tridiagonal(assemble_poisson(n_e, n_i, chi, dx));
}

ResolutionCheck poisson_resolution_check(double dx, double chi) {
  ResolutionCheck out;
  const double debye = std::sqrt(chi);
  if (dx > debye) {
    out.ok = false;
    out.message = "cell width " + std::to_string(dx) + " exceeds the Debye length " +
                  std::to_string(debye) + "; the Poisson coupling is under-resolved";
  }
  return out;
}

} // namespace sheath

#include "sheath/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sheath/errors.hpp"

namespace sheath {

Mesh::Mesh(std::size_t n_cells) : n_(n_cells), dx_(1.0 / static_cast<double>(n_cells)) {
  if (n_cells < 4) throw ParameterError("mesh needs at least 4 cells");
}

std::vector<double> Mesh::centers() const {
  std::vector<double> x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = center(j);
  return x;
}

double SpeciesState::velocity(std::size_t j) const {
  const double n = density.at(j);
  if (!(n >= kDensityFloor)) {
    throw DegenerateStateError("density " + std::to_string(n) + " below floor at cell " +
                               std::to_string(j));
  }
  return momentum[j] / n;
}

PlasmaState init_uniform(const Mesh& mesh) {
  const std::size_t n = mesh.size();
  PlasmaState s;
  s.electrons.density.assign(n, 1.0);
  s.electrons.momentum.assign(n, 0.0);
  s.ions.density.assign(n, 1.0);
  s.ions.momentum.assign(n, 0.0);
  s.phi.assign(n, 0.0);
  return s;
}

namespace {

SpeciesState mirror_species(const SpeciesState& s) {
  SpeciesState out;
  out.density.assign(s.density.rbegin(), s.density.rend());
  out.momentum.resize(s.momentum.size());
  std::transform(s.momentum.rbegin(), s.momentum.rend(), out.momentum.begin(),
                 [](double m) { return -m; });
  return out;
}

bool finite_seq(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

} // namespace

PlasmaState mirror(const PlasmaState& s) {
  PlasmaState out = s;
  out.electrons = mirror_species(s.electrons);
  out.ions = mirror_species(s.ions);
  out.phi.assign(s.phi.rbegin(), s.phi.rend());
  return out;
}

double total_number(const std::vector<double>& density, double dx) {
  double sum = 0.0;
  for (double n : density) sum += n;
  return sum * dx;
}

bool all_finite(const PlasmaState& s) {
  return finite_seq(s.electrons.density) && finite_seq(s.electrons.momentum) &&
         finite_seq(s.ions.density) && finite_seq(s.ions.momentum) && finite_seq(s.phi) &&
         std::isfinite(s.nu_iz);
}

} // namespace sheath

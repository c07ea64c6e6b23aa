#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sheath {

/// Dimensionless density floor. Divisions by a density use
/// max(n, kDensityFloor); the floor never enters a conserved update.
inline constexpr double kDensityFloor = 1e-12;

/// Uniform cell-centered grid on [0, 1].
class Mesh {
public:
  explicit Mesh(std::size_t n_cells);

  std::size_t size() const noexcept { return n_; }
  double dx() const noexcept { return dx_; }
  /// Center of cell j (0-based): (j + 1/2) dx.
  double center(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * dx_; }
  std::vector<double> centers() const;

private:
  std::size_t n_;
  double dx_;
};

/// One species' conserved fields, stored as one sequence per field.
struct SpeciesState {
  std::vector<double> density;
  std::vector<double> momentum;

  std::size_t size() const noexcept { return density.size(); }
  /// Checked velocity m_j / n_j; throws DegenerateStateError below the floor.
  double velocity(std::size_t j) const;
};

/// Cell value of one species: density and momentum.
struct ConservedPair {
  double n;
  double m;
};

enum class Species { electron, ion };

struct PlasmaState {
  SpeciesState electrons;
  SpeciesState ions;
  std::vector<double> phi;
  double nu_iz = 0.0; ///< ionization rate from the last completed step
  double time = 0.0;
  std::uint64_t step = 0;

  std::size_t size() const noexcept { return phi.size(); }
  SpeciesState& species(Species s) { return s == Species::electron ? electrons : ions; }
  const SpeciesState& species(Species s) const {
    return s == Species::electron ? electrons : ions;
  }
};

/// Unit densities at rest, zero potential, t = 0.
PlasmaState init_uniform(const Mesh& mesh);

/// Reflection x -> 1 - x: reverses every field and negates momenta.
PlasmaState mirror(const PlasmaState& s);

/// Sum of n_j dx.
double total_number(const std::vector<double>& density, double dx);

/// m / max(n, floor); never throws.
inline double floored_velocity(double n, double m) noexcept {
  return m / (n > kDensityFloor ? n : kDensityFloor);
}

/// True if every field of the state is finite.
bool all_finite(const PlasmaState& s);

} // namespace sheath

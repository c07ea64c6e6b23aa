#pragma once

// Time stepping: classical Lie splitting, modified Lie splitting with
// controlled density diffusion, and Strang splitting with RK2 source
// half-steps around a MUSCL-Hancock convective step.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sheath/boundary.hpp"
#include "sheath/kernels.hpp"
#include "sheath/params.hpp"
#include "sheath/riemann.hpp"
#include "sheath/state.hpp"

namespace sheath {

enum class Splitting { lie_classical, lie_modified, strang };

std::string_view to_string(Splitting s);
Splitting parse_splitting(std::string_view name);

struct SchemeConfig {
  Splitting splitting = Splitting::lie_modified;
  FluxVariant electron_flux = FluxVariant::controlled_rusanov;
  FluxVariant ion_flux = FluxVariant::scaled_fixed_hll;
  ElectronBc electron_bc = ElectronBc::consistent;
  double ion_diffusion_tuning = 30.0;
  double cfl_safety = 0.9;
  double t_final = 4.0;
  std::optional<double> dt_cap;
  double steady_tol = 1e-6;    ///< 0 disables the steady-state stop
  std::uint32_t steady_window = 100;
  std::uint64_t snapshot_every = 0; ///< steps between snapshots, 0 = none
  std::uint64_t history_every = 1000;
  Backend backend = Backend::openmp;

  /// Throws ConfigError naming the violated constraint.
  void validate() const;
};

struct TimeStepBudget {
  double dt_convective = 0.0;
  double dt_source = 0.0; ///< min of the ionization and collision budgets
  double dt_plasma = 0.0; ///< sqrt(eps chi)
  double dt_chosen = 0.0;
  bool cap_exceeds_budget = false;

  double min_budget() const;
};

/// Non-finite field after a step. Carries the index of the failing step and,
/// when raised by run(), the last finite state.
class InstabilityError : public std::runtime_error {
public:
  InstabilityError(std::uint64_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  std::uint64_t step() const noexcept { return step_; }
  const PlasmaState* last_good() const noexcept { return last_good_.get(); }
  void attach(PlasmaState s) { last_good_ = std::make_shared<PlasmaState>(std::move(s)); }

private:
  std::uint64_t step_;
  std::shared_ptr<const PlasmaState> last_good_;
};

/// Intermediate values of the most recent step, kept for invariant checks.
struct StepTrace {
  double dt = 0.0;
  SpeciesState electrons_pre; ///< input to the convective substep
  SpeciesState ions_pre;
  SpeciesState electrons_star; ///< after the convective substep
  SpeciesState ions_star;
  std::vector<double> electron_flux_n, electron_flux_m; ///< N + 1 interfaces
  std::vector<double> ion_flux_n, ion_flux_m;
  double nu_iz = 0.0;
  std::uint32_t clamped_ghosts = 0;
};

/// Owns the scratch buffers for one stepping context.
class Stepper {
public:
  Stepper(const SchemeConfig& cfg, const Mesh& mesh, const NondimParams& p);

  /// Advances `in` by dt into `out` with the configured splitting. `out` is
  /// resized as needed; `in` is untouched. Throws InstabilityError.
  void advance(const PlasmaState& in, PlasmaState& out, double dt);

  void step_lie_classical(const PlasmaState& in, PlasmaState& out, double dt);
  void step_lie_modified(const PlasmaState& in, PlasmaState& out, double dt);
  void step_strang(const PlasmaState& in, PlasmaState& out, double dt);

  TimeStepBudget choose_dt(const PlasmaState& s) const;

  const StepTrace& trace() const noexcept { return trace_; }
  const FluxPolicy& electron_policy() const noexcept { return pol_e_; }
  const FluxPolicy& ion_policy() const noexcept { return pol_i_; }

private:
  struct Padded {
    std::vector<double> n, m;
  };
  void fill_padded(const SpeciesState& e, const SpeciesState& i, std::span<const double> phi,
                   double nu_iz, std::size_t layers);
  void convective_first_order(const PlasmaState& in, const FluxPolicy& pol_e,
                              const FluxPolicy& pol_i, double dt, PlasmaState& out);
  void add_momentum_sources(const SpeciesState& from, Species sp, std::span<const double> phi,
                            double dt, SpeciesState& into) const;
  void finish(const PlasmaState& in, PlasmaState& out, double dt) const;

  SchemeConfig cfg_;
  Mesh mesh_;
  NondimParams p_;
  FluxPolicy pol_e_, pol_i_;
  Padded pe_, pi_;
  std::vector<double> fen_, fem_, fin_, fim_;
  PlasmaState scratch_, scratch2_;
  StepTrace trace_;
};

/// Single-step conveniences returning a new state.
PlasmaState step_lie_classical(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                               const NondimParams& p, double dt);
PlasmaState step_lie_modified(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                              const NondimParams& p, double dt);
PlasmaState step_strang(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                        const NondimParams& p, double dt);
TimeStepBudget choose_dt(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                         const NondimParams& p);

/// max_j max(|dn_e|, |dn_i|) / dt between two consecutive states.
double steady_residual(const PlasmaState& before, const PlasmaState& after, double dt);

} // namespace sheath

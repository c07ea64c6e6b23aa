#include "sheath/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sheath/errors.hpp"
#include "sheath/poisson.hpp"
#include "sheath/sources.hpp"

namespace sheath {

std::string_view to_string(Splitting s) {
  switch (s) {
  case Splitting::lie_classical: return "lie-classical";
  case Splitting::lie_modified: return "lie-modified";
  case Splitting::strang: return "strang";
  }
  return "?";
}

Splitting parse_splitting(std::string_view name) {
  for (Splitting s : {Splitting::lie_classical, Splitting::lie_modified, Splitting::strang}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown splitting '" + std::string(name) + "'");
}

void SchemeConfig::validate() const {
  if (electron_flux == FluxVariant::fixed_hll || electron_flux == FluxVariant::scaled_fixed_hll) {
    throw ConfigError("electron_flux = " + std::string(to_string(electron_flux)) +
                      " is only defined for ions");
  }
  if (ion_flux == FluxVariant::controlled_rusanov) {
    throw ConfigError("ion_flux = controlled-rusanov is only defined for electrons");
  }
  if (electron_flux == FluxVariant::controlled_rusanov && splitting != Splitting::lie_modified) {
    throw ConfigError("electron_flux = controlled-rusanov requires splitting = lie-modified");
  }
  if (!(cfl_safety > 0.0 && cfl_safety <= 1.0)) throw ConfigError("cfl_safety must be in (0, 1]");
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw ConfigError("t_final must be >= 0");
  if (dt_cap && !(*dt_cap > 0.0)) throw ConfigError("dt_cap must be > 0");
  if (!(steady_tol >= 0.0)) throw ConfigError("steady_tol must be >= 0");
  if (steady_window == 0) throw ConfigError("steady_window must be >= 1");
  if (!(ion_diffusion_tuning >= 0.0)) throw ConfigError("ion_diffusion_tuning must be >= 0");
  if (history_every == 0) throw ConfigError("history_every must be >= 1");
}

double TimeStepBudget::min_budget() const {
  return std::min({dt_convective, dt_source, dt_plasma});
}

namespace {

/// Writes both species with `layers` ghost layers on each side.
std::uint32_t pad_species(const SpeciesState& e, const SpeciesState& i,
                          std::span<const double> phi, double nu_iz, std::size_t layers,
                          ElectronBc bc, const NondimParams& p, double dx,
                          std::vector<double>& en, std::vector<double>& em,
                          std::vector<double>& in, std::vector<double>& im) {
  const std::size_t n = e.size();
  const std::size_t len = n + 2 * layers;
  en.resize(len);
  em.resize(len);
  in.resize(len);
  im.resize(len);
  std::copy(e.density.begin(), e.density.end(), en.begin() + layers);
  std::copy(e.momentum.begin(), e.momentum.end(), em.begin() + layers);
  std::copy(i.density.begin(), i.density.end(), in.begin() + layers);
  std::copy(i.momentum.begin(), i.momentum.end(), im.begin() + layers);

  const GhostPair gl = wall_ghosts({e.density[0], e.momentum[0]}, {i.density[0], i.momentum[0]},
                                   phi[0], WallSide::left, bc, p, nu_iz, dx);
  const GhostPair gr =
      wall_ghosts({e.density[n - 1], e.momentum[n - 1]}, {i.density[n - 1], i.momentum[n - 1]},
                  phi[n - 1], WallSide::right, bc, p, nu_iz, dx);
  for (std::size_t l = 0; l < layers; ++l) {
    en[l] = gl.electron.n;
    em[l] = gl.electron.m;
    in[l] = gl.ion.n;
    im[l] = gl.ion.m;
    en[len - 1 - l] = gr.electron.n;
    em[len - 1 - l] = gr.electron.m;
    in[len - 1 - l] = gr.ion.n;
    im[len - 1 - l] = gr.ion.m;
  }
  return static_cast<std::uint32_t>(gl.clamped) + static_cast<std::uint32_t>(gr.clamped);
}

void resize_like(PlasmaState& s, std::size_t n) {
  for (SpeciesState* sp : {&s.electrons, &s.ions}) {
    sp->density.resize(n);
    sp->momentum.resize(n);
  }
  s.phi.resize(n);
}

double neighbour_phi(std::span<const double> phi, std::size_t j, int side) {
  const std::size_t n = phi.size();
  if (side < 0) return j == 0 ? potential_ghost(phi[0]) : phi[j - 1];
  return j + 1 == n ? potential_ghost(phi[n - 1]) : phi[j + 1];
}

} // namespace

Stepper::Stepper(const SchemeConfig& cfg, const Mesh& mesh, const NondimParams& p)
    : cfg_(cfg), mesh_(mesh), p_(p) {
  cfg_.validate();
  pol_e_ = FluxPolicy::make(cfg.electron_flux, Species::electron, p, mesh.dx(),
                            cfg.ion_diffusion_tuning);
  pol_i_ = FluxPolicy::make(cfg.ion_flux, Species::ion, p, mesh.dx(), cfg.ion_diffusion_tuning);
  const std::size_t faces = mesh.size() + 1;
  fen_.resize(faces);
  fem_.resize(faces);
  fin_.resize(faces);
  fim_.resize(faces);
  resize_like(scratch_, mesh.size());
  resize_like(scratch2_, mesh.size());
}

void Stepper::fill_padded(const SpeciesState& e, const SpeciesState& i,
                          std::span<const double> phi, double nu_iz, std::size_t layers) {
  trace_.clamped_ghosts += pad_species(e, i, phi, nu_iz, layers, cfg_.electron_bc, p_,
                                       mesh_.dx(), pe_.n, pe_.m, pi_.n, pi_.m);
}

void Stepper::convective_first_order(const PlasmaState& in, const FluxPolicy& pol_e,
                                     const FluxPolicy& pol_i, double dt, PlasmaState& out) {
  fill_padded(in.electrons, in.ions, in.phi, in.nu_iz, 1);
  const Backend b = cfg_.backend;
  kernels::interface_fluxes(b, pol_e, pe_.n, pe_.m, {fen_, fem_});
  kernels::interface_fluxes(b, pol_i, pi_.n, pi_.m, {fin_, fim_});
  const double r = dt / mesh_.dx();
  kernels::apply_divergence(b, in.electrons.density, fen_, r, out.electrons.density);
  kernels::apply_divergence(b, in.electrons.momentum, fem_, r, out.electrons.momentum);
  kernels::apply_divergence(b, in.ions.density, fin_, r, out.ions.density);
  kernels::apply_divergence(b, in.ions.momentum, fim_, r, out.ions.momentum);
}

void Stepper::add_momentum_sources(const SpeciesState& from, Species sp,
                                   std::span<const double> phi, double dt,
                                   SpeciesState& into) const {
  const std::size_t n = from.size();
  const double dx = mesh_.dx();
  for (std::size_t j = 0; j < n; ++j) {
    const double s = momentum_source({from.density[j], from.momentum[j]}, sp,
                                     neighbour_phi(phi, j, -1), neighbour_phi(phi, j, +1), dx,
                                     p_.nu_e, p_);
    into.momentum[j] = from.momentum[j] + dt * s;
  }
}

void Stepper::finish(const PlasmaState& in, PlasmaState& out, double dt) const {
  out.time = in.time + dt;
  out.step = in.step + 1;
  if (!all_finite(out)) {
    throw InstabilityError(out.step, "non-finite field at step " + std::to_string(out.step) +
                                         ", t = " + std::to_string(out.time));
  }
}

void Stepper::advance(const PlasmaState& in, PlasmaState& out, double dt) {
  try {
    switch (cfg_.splitting) {
    case Splitting::lie_classical: step_lie_classical(in, out, dt); break;
    case Splitting::lie_modified: step_lie_modified(in, out, dt); break;
    case Splitting::strang: step_strang(in, out, dt); break;
    }
  } catch (const DegenerateStateError& e) {
    // a collapsed intermediate state is how a blow-up usually shows first
    throw InstabilityError(in.step + 1, std::string("degenerate state at step ") +
                                            std::to_string(in.step + 1) + ": " + e.what());
  }
}

void Stepper::step_lie_classical(const PlasmaState& in, PlasmaState& out, double dt) {
  const std::size_t n = mesh_.size();
  resize_like(out, n);
  trace_ = StepTrace{};
  trace_.dt = dt;

  // Step 1: convection of both species.
  PlasmaState& star = scratch_;
  convective_first_order(in, pol_e_, pol_i_, dt, star);

  // Step 2: potential from the star densities.
  out.phi = solve_poisson(star.electrons.density, star.ions.density, p_.chi, mesh_.dx());

  // Step 3: ionization closing the ion balance.
  const double nu =
      ionization_rate_I0(in.ions.density, star.electrons.density, star.ions.density, dt);

  // Step 4: sources with the new potential.
  for (std::size_t j = 0; j < n; ++j) {
    const double gain = dt * nu * star.electrons.density[j];
    out.electrons.density[j] = star.electrons.density[j] + gain;
    out.ions.density[j] = star.ions.density[j] + gain;
  }
  add_momentum_sources(star.electrons, Species::electron, out.phi, dt, out.electrons);
  add_momentum_sources(star.ions, Species::ion, out.phi, dt, out.ions);
  out.nu_iz = nu;

  trace_.electrons_pre = in.electrons;
  trace_.ions_pre = in.ions;
  trace_.electrons_star = star.electrons;
  trace_.ions_star = star.ions;
  trace_.electron_flux_n = fen_;
  trace_.electron_flux_m = fem_;
  trace_.ion_flux_n = fin_;
  trace_.ion_flux_m = fim_;
  trace_.nu_iz = nu;
  finish(in, out, dt);
}

void Stepper::step_lie_modified(const PlasmaState& in, PlasmaState& out, double dt) {
  const std::size_t n = mesh_.size();
  resize_like(out, n);
  trace_ = StepTrace{};
  trace_.dt = dt;

  // Steps 1-3: momenta and potential as in the classical scheme, with the
  // standard electron diffusion.
  PlasmaState& star = scratch_;
  convective_first_order(in, pol_e_.unscaled(), pol_i_, dt, star);
  trace_.electrons_pre = in.electrons;
  trace_.ions_pre = in.ions;
  trace_.electrons_star = star.electrons;
  trace_.ions_star = star.ions;
  trace_.electron_flux_n = fen_;
  trace_.electron_flux_m = fem_;
  trace_.ion_flux_n = fin_;
  trace_.ion_flux_m = fim_;

  out.phi = solve_poisson(star.electrons.density, star.ions.density, p_.chi, mesh_.dx());

  // Time-n densities carrying the time-(n+1) momenta.
  PlasmaState& mixed = scratch2_;
  mixed.electrons.density = in.electrons.density;
  mixed.ions.density = in.ions.density;
  add_momentum_sources(star.electrons, Species::electron, out.phi, dt, mixed.electrons);
  add_momentum_sources(star.ions, Species::ion, out.phi, dt, mixed.ions);

  // Step 4: densities from the new particle fluxes with controlled diffusion.
  fill_padded(mixed.electrons, mixed.ions, out.phi, in.nu_iz, 1);
  const Backend b = cfg_.backend;
  kernels::density_fluxes(b, pol_e_, pe_.n, pe_.m, fen_);
  kernels::density_fluxes(b, pol_i_, pi_.n, pi_.m, fin_);
  const double r = dt / mesh_.dx();
  kernels::apply_divergence(b, in.electrons.density, fen_, r, out.electrons.density);
  kernels::apply_divergence(b, in.ions.density, fin_, r, out.ions.density);

  // Steps 5-6: ionization restoring the ion count.
  const double nu =
      ionization_rate_I0(in.ions.density, out.electrons.density, out.ions.density, dt);
  for (std::size_t j = 0; j < n; ++j) {
    const double gain = dt * nu * out.electrons.density[j];
    out.ions.density[j] += gain;
    out.electrons.density[j] += gain;
  }
  out.electrons.momentum = mixed.electrons.momentum;
  out.ions.momentum = mixed.ions.momentum;
  out.nu_iz = nu;
  trace_.nu_iz = nu;
  finish(in, out, dt);
}

void Stepper::step_strang(const PlasmaState& in, PlasmaState& out, double dt) {
  const std::size_t n = mesh_.size();
  const double dx = mesh_.dx();
  resize_like(out, n);
  trace_ = StepTrace{};
  trace_.dt = dt;

  auto i1 = [&](const PlasmaState& s) {
    return ionization_rate_I1(s.ions.momentum[0], s.ions.momentum[n - 1], s.electrons.density,
                              dx);
  };
  // dst = base + h S(eval; nu, phi)
  auto stage = [&](const PlasmaState& base, const PlasmaState& eval, double nu,
                   std::span<const double> phi, double h, PlasmaState& dst) {
    for (std::size_t j = 0; j < n; ++j) {
      const double gain = h * nu * eval.electrons.density[j];
      const double se = momentum_source({eval.electrons.density[j], eval.electrons.momentum[j]},
                                        Species::electron, neighbour_phi(phi, j, -1),
                                        neighbour_phi(phi, j, +1), dx, p_.nu_e, p_);
      const double si = momentum_source({eval.ions.density[j], eval.ions.momentum[j]},
                                        Species::ion, neighbour_phi(phi, j, -1),
                                        neighbour_phi(phi, j, +1), dx, p_.nu_e, p_);
      dst.electrons.density[j] = base.electrons.density[j] + gain;
      dst.ions.density[j] = base.ions.density[j] + gain;
      dst.electrons.momentum[j] = base.electrons.momentum[j] + h * se;
      dst.ions.momentum[j] = base.ions.momentum[j] + h * si;
    }
  };

  PlasmaState& s1 = scratch_;
  PlasmaState& s2 = scratch2_;

  // Step 1: RK2 source half step with phi^n.
  stage(in, in, i1(in), in.phi, 0.25 * dt, s1);
  stage(in, s1, i1(s1), in.phi, 0.5 * dt, s2);

  // Step 2: MUSCL-Hancock convection.
  fill_padded(s2.electrons, s2.ions, in.phi, in.nu_iz, 2);
  const Backend b = cfg_.backend;
  const double r = dt / dx;
  kernels::muscl_fluxes(b, pol_e_, pe_.n, pe_.m, r, true, {fen_, fem_});
  kernels::muscl_fluxes(b, pol_i_, pi_.n, pi_.m, r, true, {fin_, fim_});
  PlasmaState& s3 = scratch_;
  kernels::apply_divergence(b, s2.electrons.density, fen_, r, s3.electrons.density);
  kernels::apply_divergence(b, s2.electrons.momentum, fem_, r, s3.electrons.momentum);
  kernels::apply_divergence(b, s2.ions.density, fin_, r, s3.ions.density);
  kernels::apply_divergence(b, s2.ions.momentum, fim_, r, s3.ions.momentum);
  trace_.electrons_pre = s2.electrons;
  trace_.ions_pre = s2.ions;
  trace_.electrons_star = s3.electrons;
  trace_.ions_star = s3.ions;
  trace_.electron_flux_n = fen_;
  trace_.electron_flux_m = fem_;
  trace_.ion_flux_n = fin_;
  trace_.ion_flux_m = fim_;

  // Step 3: potential at n+1.
  out.phi = solve_poisson(s3.electrons.density, s3.ions.density, p_.chi, dx);

  // Step 4: RK2 source half step with phi^{n+1}.
  PlasmaState& s4 = scratch2_;
  stage(s3, s3, i1(s3), out.phi, 0.25 * dt, s4);
  const double nu4 = i1(s4);
  stage(s3, s4, nu4, out.phi, 0.5 * dt, out);
  out.nu_iz = nu4;
  trace_.nu_iz = nu4;
  finish(in, out, dt);
}

TimeStepBudget Stepper::choose_dt(const PlasmaState& s) const {
  std::vector<double> en, em, in, im;
  pad_species(s.electrons, s.ions, s.phi, s.nu_iz, 1, cfg_.electron_bc, p_, mesh_.dx(), en, em,
              in, im);
  TimeStepBudget b;
  b.dt_convective = std::min(species_convective_dt(pol_e_, en, em, mesh_.dx()),
                             species_convective_dt(pol_i_, in, im, mesh_.dx()));
  std::vector<double> ui(s.size());
  for (std::size_t j = 0; j < ui.size(); ++j) {
    ui[j] = floored_velocity(s.ions.density[j], s.ions.momentum[j]);
  }
  b.dt_source = std::min(ionization_dt(s.nu_iz), collision_dt(p_.nu_e, ui, p_));
  b.dt_plasma = p_.inv_plasma_freq();
  const double budget = b.min_budget();
  if (cfg_.dt_cap) {
    b.dt_chosen = *cfg_.dt_cap;
    b.cap_exceeds_budget = *cfg_.dt_cap > budget;
  } else {
    b.dt_chosen = cfg_.cfl_safety * budget;
  }
  return b;
}

PlasmaState step_lie_classical(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                               const NondimParams& p, double dt) {
  Stepper st(cfg, mesh, p);
  PlasmaState out;
  st.step_lie_classical(s, out, dt);
  return out;
}

PlasmaState step_lie_modified(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                              const NondimParams& p, double dt) {
  Stepper st(cfg, mesh, p);
  PlasmaState out;
  st.step_lie_modified(s, out, dt);
  return out;
}

PlasmaState step_strang(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                        const NondimParams& p, double dt) {
  Stepper st(cfg, mesh, p);
  PlasmaState out;
  st.step_strang(s, out, dt);
  return out;
}

TimeStepBudget choose_dt(const PlasmaState& s, const SchemeConfig& cfg, const Mesh& mesh,
                         const NondimParams& p) {
  return Stepper(cfg, mesh, p).choose_dt(s);
}

double steady_residual(const PlasmaState& before, const PlasmaState& after, double dt) {
  double r = 0.0;
  for (std::size_t j = 0; j < before.size(); ++j) {
    r = std::max({r, std::abs(after.electrons.density[j] - before.electrons.density[j]),
                  std::abs(after.ions.density[j] - before.ions.density[j])});
  }
  return r / dt;
}

} // namespace sheath

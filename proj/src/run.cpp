#include "sheath/run.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "sheath/poisson.hpp"

namespace sheath {

namespace {

DiagnosticsRecord record_of(const PlasmaState& s, const Mesh& mesh, double dt, double residual) {
  DiagnosticsRecord r;
  r.step = s.step;
  r.time = s.time;
  r.dt = dt;
  r.ambipolarity_err = ambipolarity_error(s);
  r.phi_peak = phi_peak(s);
  r.ion_total = total_number(s.ions.density, mesh.dx());
  r.steady_residual = residual;
  return r;
}

} // namespace

RunResult run(PlasmaState initial, const SchemeConfig& cfg, const Mesh& mesh,
              const NondimParams& p, SnapshotSink* sink) {
  Stepper stepper(cfg, mesh, p);
  RunResult result;

  if (const ResolutionCheck rc = poisson_resolution_check(mesh.dx(), p.chi); !rc.ok) {
    result.warnings.push_back(rc.message);
  }

  PlasmaState cur = std::move(initial);
  if (cur.step == 0) {
    cur.phi = solve_poisson(cur.electrons.density, cur.ions.density, p.chi, mesh.dx());
  }
  PlasmaState next;
  TimeStepBudget budget = stepper.choose_dt(cur);
  double residual = 0.0;
  double last_dt = 0.0;
  std::uint32_t quiet_steps = 0;
  bool warned_budget = false;
  const std::uint64_t first_step = cur.step;

  while (cur.time < cfg.t_final) {
    budget = stepper.choose_dt(cur);
    if (budget.cap_exceeds_budget && !warned_budget) {
      warned_budget = true;
      result.warnings.push_back("dt_cap " + std::to_string(budget.dt_chosen) +
                                " exceeds the stability budget " +
                                std::to_string(budget.min_budget()) + " at step " +
                                std::to_string(cur.step));
    }
    const double remaining = cfg.t_final - cur.time;
    if (remaining < 1e-9 * budget.dt_chosen) break;
    const double dt = std::min(budget.dt_chosen, remaining);
    try {
      stepper.advance(cur, next, dt);
    } catch (InstabilityError& e) {
      e.attach(cur);
      throw;
    }
    result.clamped_ghosts += stepper.trace().clamped_ghosts;
    residual = steady_residual(cur, next, dt);
    last_dt = dt;
    std::swap(cur, next);

    if (cur.step % cfg.history_every == 0) result.history.push_back(record_of(cur, mesh, dt, residual));
    if (sink && cfg.snapshot_every > 0 && cur.step % cfg.snapshot_every == 0) {
      sink->on_snapshot(cur, mesh);
    }
    if (cfg.steady_tol > 0.0) {
      quiet_steps = residual < cfg.steady_tol ? quiet_steps + 1 : 0;
      if (quiet_steps >= cfg.steady_window) {
        result.reached_steady = true;
        break;
      }
    }
  }

  result.steps = cur.step - first_step;
  if (result.steps > 0 && (result.history.empty() || result.history.back().step != cur.step)) {
    result.history.push_back(record_of(cur, mesh, last_dt, residual));
  }
  const std::size_t n = mesh.size();
  const double v_th_i = p.v_th_i();
  for (std::size_t j : {std::size_t{0}, n - 1}) {
    if (std::abs(floored_velocity(cur.ions.density[j], cur.ions.momentum[j])) < v_th_i) {
      result.warnings.push_back("ions are subsonic in wall cell " + std::to_string(j) +
                                "; the upwind ion ghost assumes supersonic outflow");
    }
  }
  if (result.clamped_ghosts > 0) {
    result.warnings.push_back("electron ghost exponent clamped " +
                              std::to_string(result.clamped_ghosts) + " times");
  }
  result.final = measure(cur, mesh, p, residual, budget);
  result.final_state = std::move(cur);
  return result;
}

} // namespace sheath

#include <cmath>
#include <limits>

#include "doctest.h"
#include "sheath/errors.hpp"
#include "sheath/integrators.hpp"
#include "sheath/poisson.hpp"
#include "sheath/run.hpp"
#include "sheath/sources.hpp"
#include "support.hpp"

using namespace sheath;
using doctest::Approx;

namespace {

const NondimParams kH = NondimParams::make(1.0 / 1836.0, 0.0025, 4e-4);
const NondimParams kHcoll = NondimParams::make(1.0 / 1836.0, 0.0025, 4e-4, 1e3, 0.1);

SchemeConfig classical() {
  SchemeConfig c;
  c.splitting = Splitting::lie_classical;
  c.electron_flux = FluxVariant::rusanov;
  c.ion_flux = FluxVariant::rusanov;
  c.electron_bc = ElectronBc::classical;
  return c;
}

SchemeConfig modified() { return SchemeConfig{}; }

SchemeConfig strang() {
  SchemeConfig c;
  c.splitting = Splitting::strang;
  c.electron_flux = FluxVariant::rusanov;
  c.ion_flux = FluxVariant::fixed_hll;
  return c;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

} // namespace

TEST_SUITE("integrators") {

TEST_CASE("splitting names") {
  for (auto s : {Splitting::lie_classical, Splitting::lie_modified, Splitting::strang}) {
    CHECK(parse_splitting(to_string(s)) == s);
  }
  CHECK(to_string(Splitting::lie_modified) == "lie-modified");
  CHECK_THROWS_AS(parse_splitting("godunov"), ConfigError);
}

TEST_CASE("scheme validation") {
  CHECK_NOTHROW(classical().validate());
  CHECK_NOTHROW(modified().validate());
  CHECK_NOTHROW(strang().validate());
  SchemeConfig c = strang();
  c.electron_flux = FluxVariant::controlled_rusanov;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = classical();
  c.electron_flux = FluxVariant::fixed_hll;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = classical();
  c.ion_flux = FluxVariant::controlled_rusanov;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = classical();
  c.cfl_safety = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = classical();
  c.dt_cap = 0.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = classical();
  c.steady_window = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("time step selection at rest") {
  const Mesh mesh(256);
  const PlasmaState s = init_uniform(mesh);
  // the wall ghost moves at 2 u_wall, which bounds the electron budget
  const double u_ghost = 2.0 / std::sqrt(2.0 * 3.14159265358979323846 / 1836.0);
  const double lam = u_ghost + std::sqrt(1836.0);
  const double dt_conv = mesh.dx() / (2.0 * lam);
  for (auto cfg : {classical(), modified()}) {
    const auto b = choose_dt(s, cfg, mesh, kH);
    CHECK(b.dt_convective == Approx(dt_conv).epsilon(1e-10));
    CHECK(b.dt_convective == Approx(2.535e-5).epsilon(1e-3));
    CHECK(b.dt_plasma == Approx(std::sqrt(4e-4 / 1836.0)));
    CHECK(b.dt_chosen == Approx(0.9 * dt_conv));
    CHECK_FALSE(b.cap_exceeds_budget);
  }
  SchemeConfig capped = modified();
  capped.dt_cap = 2e-5;
  auto b = choose_dt(s, capped, mesh, kH);
  CHECK(b.dt_chosen == 2e-5);
  CHECK_FALSE(b.cap_exceeds_budget);
  capped.dt_cap = 1e-3;
  b = choose_dt(s, capped, mesh, kH);
  CHECK(b.dt_chosen == 1e-3);
  CHECK(b.cap_exceeds_budget);

  // collisions enter the source budget, which still exceeds the convective one
  b = choose_dt(s, modified(), mesh, kHcoll);
  CHECK(b.dt_source == Approx(1.4625e-4).epsilon(1e-3));
  CHECK(b.min_budget() == b.dt_convective);
}

TEST_CASE("uniform rest state keeps a uniform interior") {
  const Mesh mesh(64);
  const PlasmaState s0 = init_uniform(mesh);
  Stepper st(classical(), mesh, kH);
  PlasmaState out;
  st.advance(s0, out, 1e-5);
  const auto& star = st.trace().electrons_star;
  for (std::size_t j = 1; j + 1 < mesh.size(); ++j) {
    CHECK(star.density[j] == 1.0);
    CHECK(st.trace().ions_star.density[j] == 1.0);
    CHECK(out.electrons.density[j] == out.electrons.density[1]);
    CHECK(out.ions.density[j] == out.ions.density[1]);
  }
  // walls drain electrons first
  CHECK(star.density[0] < 1.0);
  CHECK(out.step == 1);
  CHECK(out.time == 1e-5);
}

TEST_CASE("modified and classical lie agree away from the walls on uniform data") {
  const Mesh mesh(64);
  SchemeConfig a = classical();
  a.ion_flux = FluxVariant::fixed_hll;
  SchemeConfig b = a;
  b.splitting = Splitting::lie_modified;
  const auto s0 = init_uniform(mesh);
  const auto x = step_lie_classical(s0, a, mesh, kH, 1e-5);
  const auto y = step_lie_modified(s0, b, mesh, kH, 1e-5);
  CHECK(x.electrons.momentum == y.electrons.momentum);
  CHECK(x.ions.momentum == y.ions.momentum);
  // the wall cells differ, and with them the ionization rate by O(dt)
  for (std::size_t j = 2; j + 2 < mesh.size(); ++j) {
    CHECK(std::abs(x.electrons.density[j] - y.electrons.density[j]) <= 1e-9);
    CHECK(std::abs(x.ions.density[j] - y.ions.density[j]) <= 1e-9);
  }
}

TEST_CASE("convective substep telescopes") {
  testing::StateGen g(61);
  const Mesh mesh(128);
  for (auto cfg : {classical(), modified(), strang()}) {
    for (int k = 0; k < 20; ++k) {
      const PlasmaState s = g.state(mesh.size());
      Stepper st(cfg, mesh, kH);
      PlasmaState out;
      const double dt = 0.5 * st.choose_dt(s).dt_chosen;
      st.advance(s, out, dt);
      const auto& tr = st.trace();
      const double dx = mesh.dx();
      const std::size_t n = mesh.size();
      auto check = [&](const std::vector<double>& before, const std::vector<double>& after,
                       const std::vector<double>& flux) {
        const double lhs = (sum(after) - sum(before)) * dx;
        const double rhs = -dt * (flux[n] - flux[0]);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, sum(before) * dx));
      };
      check(tr.electrons_pre.density, tr.electrons_star.density, tr.electron_flux_n);
      check(tr.electrons_pre.momentum, tr.electrons_star.momentum, tr.electron_flux_m);
      check(tr.ions_pre.density, tr.ions_star.density, tr.ion_flux_n);
      check(tr.ions_pre.momentum, tr.ions_star.momentum, tr.ion_flux_m);
      if (cfg.splitting != Splitting::strang) {
        CHECK(tr.electrons_pre.density == s.electrons.density);
        CHECK(tr.ions_pre.momentum == s.ions.momentum);
      }
    }
  }
}

TEST_CASE("lie schemes conserve the ion count exactly") {
  testing::StateGen g(62);
  const Mesh mesh(96);
  for (auto cfg : {classical(), modified()}) {
    PlasmaState s = g.state(mesh.size());
    const double total = total_number(s.ions.density, mesh.dx());
    Stepper st(cfg, mesh, kH);
    PlasmaState next;
    for (int k = 0; k < 50; ++k) {
      st.advance(s, next, 0.5 * st.choose_dt(s).dt_chosen);
      std::swap(s, next);
      CHECK(testing::rel_diff(total_number(s.ions.density, mesh.dx()), total) <= 1e-12);
    }
  }
}

TEST_CASE("classical lie preserves the convected charge") {
  testing::StateGen g(63);
  const Mesh mesh(80);
  for (int k = 0; k < 20; ++k) {
    const PlasmaState s = g.state(mesh.size());
    Stepper st(classical(), mesh, kH);
    PlasmaState out;
    st.advance(s, out, 0.5 * st.choose_dt(s).dt_chosen);
    const auto& tr = st.trace();
    for (std::size_t j = 0; j < mesh.size(); ++j) {
      const double before = tr.electrons_star.density[j] - tr.ions_star.density[j];
      const double after = out.electrons.density[j] - out.ions.density[j];
      CHECK(std::abs(after - before) <= 1e-12);
    }
  }
}

TEST_CASE("ionization closures agree after a conservative convective step") {
  testing::StateGen g(64);
  const Mesh mesh(64);
  for (int k = 0; k < 100; ++k) {
    const PlasmaState s = g.state(mesh.size());
    Stepper st(classical(), mesh, kH);
    PlasmaState out;
    st.advance(s, out, 0.5 * st.choose_dt(s).dt_chosen);
    const auto& tr = st.trace();
    const double i1 = ionization_rate_I1(s.ions.momentum.front(), s.ions.momentum.back(),
                                         tr.electrons_star.density, mesh.dx());
    CHECK(std::abs(tr.nu_iz - i1) <= 1e-10 * std::max(1.0, std::abs(i1)));
  }
}

TEST_CASE("every scheme commutes with reflection") {
  testing::StateGen g(65);
  const Mesh mesh(64);
  for (auto cfg : {classical(), modified(), strang()}) {
    for (auto bc : {ElectronBc::classical, ElectronBc::consistent}) {
      cfg.electron_bc = bc;
      PlasmaState s = g.smooth_state(mesh, true);
      REQUIRE(testing::asymmetry(s) == 0.0);
      Stepper st(cfg, mesh, kH);
      PlasmaState next;
      for (int k = 0; k < 50; ++k) {
        st.advance(s, next, st.choose_dt(s).dt_chosen);
        std::swap(s, next);
      }
      const double scale = std::max({testing::max_abs(s.electrons.momentum),
                                     testing::max_abs(s.phi), 1.0});
      CHECK(testing::asymmetry(s) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("mirrored input gives mirrored output") {
  testing::StateGen g(66);
  const Mesh mesh(48);
  for (auto cfg : {classical(), modified(), strang()}) {
    PlasmaState s = g.smooth_state(mesh, false);
    s.phi = solve_poisson(s.electrons.density, s.ions.density, kH.chi, mesh.dx());
    s.electrons.density[3] *= 1.01;
    Stepper st(cfg, mesh, kH);
    const double dt = st.choose_dt(s).dt_chosen;
    PlasmaState a, b;
    st.advance(s, a, dt);
    st.advance(mirror(s), b, dt);
    const PlasmaState ma = mirror(a);
    CHECK(testing::max_abs_diff(ma.electrons.density, b.electrons.density) <= 1e-10);
    CHECK(testing::max_abs_diff(ma.ions.density, b.ions.density) <= 1e-10);
    CHECK(testing::max_abs_diff(ma.electrons.momentum, b.electrons.momentum) <=
          1e-10 * std::max(1.0, testing::max_abs(a.electrons.momentum)));
    CHECK(testing::max_abs_diff(ma.phi, b.phi) <= 1e-10);
  }
}

TEST_CASE("serial and openmp backends step identically") {
  testing::StateGen g(67);
  const Mesh mesh(4096);
  for (auto cfg : {classical(), modified(), strang()}) {
    const PlasmaState s = g.state(mesh.size());
    SchemeConfig ser = cfg;
    ser.backend = Backend::serial;
    Stepper a(cfg, mesh, kH), b(ser, mesh, kH);
    const double dt = 0.5 * a.choose_dt(s).dt_chosen;
    PlasmaState x, y;
    a.advance(s, x, dt);
    b.advance(s, y, dt);
    CHECK(x.electrons.density == y.electrons.density);
    CHECK(x.ions.momentum == y.ions.momentum);
    CHECK(x.phi == y.phi);
  }
}

TEST_CASE("steady residual") {
  const Mesh mesh(8);
  PlasmaState a = init_uniform(mesh);
  PlasmaState b = a;
  CHECK(steady_residual(a, b, 0.1) == 0.0);
  b.ions.density[3] += 1e-3;
  CHECK(steady_residual(a, b, 0.1) == Approx(1e-2));
  b.electrons.density[5] -= 4e-3;
  CHECK(steady_residual(a, b, 0.1) == Approx(4e-2));
}

TEST_CASE("non-finite input raises an instability") {
  const Mesh mesh(32);
  PlasmaState s = init_uniform(mesh);
  s.electrons.momentum[7] = std::numeric_limits<double>::quiet_NaN();
  Stepper st(classical(), mesh, kH);
  PlasmaState out;
  CHECK_THROWS_AS(st.advance(s, out, 1e-6), InstabilityError);
}

TEST_CASE("run") {
  const Mesh mesh(64);
  SUBCASE("zero final time takes no steps") {
    SchemeConfig cfg = modified();
    cfg.t_final = 0.0;
    const auto r = run(init_uniform(mesh), cfg, mesh, kH);
    CHECK(r.steps == 0);
    CHECK(r.final_state.time == 0.0);
    CHECK(r.final_state.electrons.density == init_uniform(mesh).electrons.density);
  }
  SUBCASE("stops at the final time") {
    SchemeConfig cfg = modified();
    cfg.t_final = 1e-3;
    cfg.steady_tol = 0.0;
    const auto r = run(init_uniform(mesh), cfg, mesh, kH);
    CHECK(r.final_state.time == Approx(1e-3).epsilon(1e-12));
    CHECK(r.steps == r.final_state.step);
    CHECK_FALSE(r.history.empty());
    CHECK(r.history.back().step == r.steps);
  }
  SUBCASE("an oversized cap blows up with the last good state attached") {
    SchemeConfig cfg = modified();
    cfg.dt_cap = 0.05;
    cfg.t_final = 10.0;
    cfg.steady_tol = 0.0;
    try {
      run(init_uniform(mesh), cfg, mesh, kH);
      FAIL("expected an instability");
    } catch (const InstabilityError& e) {
      REQUIRE(e.last_good() != nullptr);
      CHECK(all_finite(*e.last_good()));
      CHECK(e.last_good()->step + 1 == e.step());
    }
  }
}

}

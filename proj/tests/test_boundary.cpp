#include <cmath>

#include "doctest.h"
#include "sheath/boundary.hpp"
#include "sheath/errors.hpp"
#include "support.hpp"

using namespace sheath;
using doctest::Approx;

namespace {
const NondimParams kH = NondimParams::make(1.0 / 1836.0, 0.0025, 4e-4);
}

TEST_SUITE("boundary") {

TEST_CASE("ion ghost copies the boundary cell") {
  const auto g = ion_ghost({0.3, 0.5});
  CHECK(g.n == 0.3);
  CHECK(g.m == 0.5);
  const auto gg = ion_ghost(g);
  CHECK(gg.n == g.n);
  CHECK(gg.m == g.m);
}

TEST_CASE("classical electron ghost") {
  const double uw = std::sqrt(1836.0 / (2.0 * 3.14159265358979323846));
  CHECK(uw == Approx(17.0941).epsilon(1e-5));
  const auto g = electron_ghost_classical({0.1, 1.0}, WallSide::right, kH.u_wall());
  CHECK(g.n == 0.1);
  CHECK(g.m == Approx(2.0 * 0.1 * uw - 1.0));
  CHECK(g.m == Approx(2.4188).epsilon(1e-4));

  const auto r = electron_ghost_classical({0.4, 0.7}, WallSide::left, 0.0);
  CHECK(r.m == -0.7);

  testing::StateGen gen(21);
  for (int k = 0; k < 100; ++k) {
    const auto b = gen.cell(0.01, 1.0, 30.0);
    for (auto side : {WallSide::left, WallSide::right}) {
      const auto gh = electron_ghost_classical(b, side, kH.u_wall());
      CHECK(0.5 * (b.m + gh.m) == Approx(outward_sign(side) * b.n * kH.u_wall()).epsilon(1e-13));
    }
  }
}

TEST_CASE("consistent electron ghost") {
  SUBCASE("fixed point without collisions") {
    for (auto side : {WallSide::left, WallSide::right}) {
      const double n = 0.07;
      const ConservedPair b{n, n * outward_sign(side) * kH.u_wall()};
      const auto g = electron_ghost_consistent(b, 0.0, side, kH, 0.0, 1.0 / 256);
      CHECK(g.cell.n == Approx(n).epsilon(1e-14));
      CHECK(g.cell.m == Approx(b.m).epsilon(1e-14));
      CHECK(g.phi == 0.0);
      CHECK_FALSE(g.clamped);
    }
  }
  SUBCASE("right wall regression pin") {
    const double eps = 1.0 / 1836.0;
    const double uw = 1.0 / std::sqrt(2.0 * 3.14159265358979323846 * eps);
    const double uG = 2.0 * uw - 10.0;
    const double expo = -0.5 * eps * (uG * uG - 100.0) + (2.8 - (-2.8));
    CHECK(uG == Approx(24.1882).epsilon(1e-5));
    CHECK(expo == Approx(5.4679).epsilon(1e-4));
    const auto g = electron_ghost_consistent({0.05, 0.5}, -2.8, WallSide::right, kH, 0.0, 0.01);
    CHECK(g.phi == 2.8);
    CHECK(g.cell.n == Approx(0.05 * std::exp(expo)).epsilon(1e-13));
    CHECK(g.cell.m == Approx(g.cell.n * uG).epsilon(1e-13));
  }
  SUBCASE("friction term lowers the ghost density on both walls") {
    const auto p = NondimParams::make(1.0 / 1836.0, 0.0025, 4e-4, 1e3, 0.1);
    const double dx = 1.0 / 256;
    const double nu_iz = 1.5;
    for (auto side : {WallSide::left, WallSide::right}) {
      const double n = 0.05;
      const ConservedPair b{n, n * outward_sign(side) * p.u_wall()};
      const auto g = electron_ghost_consistent(b, 0.0, side, p, nu_iz, dx);
      CHECK(g.cell.n == Approx(n * std::exp(-dx * p.eps * (p.nu_e + nu_iz) * p.u_wall())));
    }
  }
  SUBCASE("small eps with equal potentials") {
    // u_wall grows like eps^(-1/2), so eps u_G^2 / 2 tends to 1/pi rather than 0
    const auto p = NondimParams::make(1e-14, 0.0025, 4e-4);
    const auto g = electron_ghost_consistent({0.3, 0.3 * 5.0}, 0.0, WallSide::right, p, 0.0, 0.01);
    CHECK(g.cell.n == Approx(0.3 * std::exp(-1.0 / 3.14159265358979323846)).epsilon(1e-6));
  }
  SUBCASE("exponent is clamped") {
    const auto g = electron_ghost_consistent({0.05, 0.0}, -40.0, WallSide::right, kH, 0.0, 0.01);
    CHECK(g.clamped);
    CHECK(g.cell.n == Approx(0.05 * std::exp(kGhostExponentClamp)));
  }
}

TEST_CASE("potential ghost") {
  CHECK(potential_ghost(3.0) == -3.0);
  CHECK(potential_ghost(0.0) == 0.0);
  CHECK(potential_ghost(potential_ghost(1.25)) == 1.25);
}

TEST_CASE("wall ghosts mirror between the two walls") {
  testing::StateGen gen(22);
  for (auto bc : {ElectronBc::classical, ElectronBc::consistent}) {
    for (int k = 0; k < 100; ++k) {
      const auto e = gen.cell(0.01, 1.0, 25.0);
      const auto i = gen.cell(0.1, 1.0, 2.0);
      const double phi = gen.uniform(0.0, 1.0);
      const auto r = wall_ghosts(e, i, phi, WallSide::right, bc, kH, 1.5, 1.0 / 256);
      const auto l = wall_ghosts({e.n, -e.m}, {i.n, -i.m}, phi, WallSide::left, bc, kH, 1.5,
                                 1.0 / 256);
      CHECK(l.electron.n == r.electron.n);
      CHECK(l.electron.m == -r.electron.m);
      CHECK(l.ion.n == r.ion.n);
      CHECK(l.ion.m == -r.ion.m);
      CHECK(l.phi == r.phi);
    }
  }
}

TEST_CASE("bc names") {
  CHECK(parse_electron_bc("classical") == ElectronBc::classical);
  CHECK(parse_electron_bc("consistent") == ElectronBc::consistent);
  CHECK(to_string(ElectronBc::consistent) == "consistent");
  CHECK_THROWS_AS(parse_electron_bc("neumann"), ConfigError);
}

}

#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sheath/errors.hpp"
#include "sheath/poisson.hpp"
#include "sheath/state.hpp"
#include "support.hpp"

using namespace sheath;
using doctest::Approx;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Max error against -sin(pi x)/pi^2 for d2phi/dx2 = sin(pi x), phi(0) = phi(1) = 0.
double manufactured_error(std::size_t n) {
  const Mesh mesh(n);
  std::vector<double> ne(n), ni(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) ne[j] = std::sin(kPi * mesh.center(j));
  const auto phi = solve_poisson(ne, ni, 1.0, mesh.dx());
  double err = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    err = std::max(err, std::abs(phi[j] + std::sin(kPi * mesh.center(j)) / (kPi * kPi)));
  }
  return err;
}

} // namespace

TEST_SUITE("poisson") {

TEST_CASE("neutral plasma has zero potential") {
  const std::vector<double> n(64, 0.8);
  for (double v : solve_poisson(n, n, 4e-4, 1.0 / 64)) CHECK(v == 0.0);
}

TEST_CASE("manufactured solution converges at second order") {
  const double e64 = manufactured_error(64);
  const double e128 = manufactured_error(128);
  const double e256 = manufactured_error(256);
  CHECK(e64 / e128 == Approx(4.0).epsilon(0.075));
  CHECK(e128 / e256 == Approx(4.0).epsilon(0.075));
}

TEST_CASE("assembled rows") {
  const std::vector<double> ne{1.0, 2.0, 3.0, 4.0}, ni{1.0, 1.0, 1.0, 1.0};
  const auto sys = assemble_poisson(ne, ni, 0.5, 0.25);
  CHECK(sys.diag[0] == -3.0);
  CHECK(sys.super[0] == 1.0);
  CHECK(sys.diag[1] == -2.0);
  CHECK(sys.sub[1] == 1.0);
  CHECK(sys.diag[3] == -3.0);
  CHECK(sys.sub[3] == 1.0);
  CHECK(sys.rhs[2] == Approx(0.0625 * 2.0 / 0.5));
}

TEST_CASE("residual and maximum principle on random data") {
  testing::StateGen g(31);
  for (int k = 0; k < 50; ++k) {
    const std::size_t n = g.index(4, 300);
    std::vector<double> ne(n), ni(n);
    for (std::size_t j = 0; j < n; ++j) {
      ni[j] = g.uniform(0.1, 2.0);
      ne[j] = ni[j] + g.uniform(0.0, 1.0);
    }
    const double chi = g.uniform(1e-6, 1e-2);
    const double dx = 1.0 / static_cast<double>(n);
    const auto sys = assemble_poisson(ne, ni, chi, dx);
    const auto phi = solve_tridiagonal(sys);
    CHECK(sys.residual_max(phi) <= 1e-10 * std::max(1.0, testing::max_abs(sys.rhs)));
    for (double v : phi) CHECK(v <= 0.0);
  }
}

TEST_CASE("symmetric charge gives a symmetric potential") {
  testing::StateGen g(32);
  const std::size_t n = 128;
  std::vector<double> ne(n), ni(n, 1.0);
  for (std::size_t j = 0; j < n / 2; ++j) ne[j] = ne[n - 1 - j] = g.uniform(0.1, 1.0);
  const auto phi = solve_poisson(ne, ni, 4e-4, 1.0 / n);
  double scale = testing::max_abs(phi);
  for (std::size_t j = 0; j < n; ++j) CHECK(std::abs(phi[j] - phi[n - 1 - j]) <= 1e-12 * scale);
}

TEST_CASE("invalid input") {
  const std::vector<double> a(8, 1.0), b(7, 1.0);
  CHECK_THROWS_AS(solve_poisson(a, a, 0.0, 0.1), ConfigError);
  CHECK_THROWS_AS(solve_poisson(a, a, -1.0, 0.1), ConfigError);
  CHECK_THROWS_AS(solve_poisson(a, b, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("resolution check") {
  CHECK(poisson_resolution_check(1.0 / 256, 4e-4).ok);
  CHECK_FALSE(poisson_resolution_check(0.05, 4e-4).ok);
  CHECK_FALSE(poisson_resolution_check(0.05, 4e-4).message.empty());
  CHECK(poisson_resolution_check(0.02, 0.02 * 0.02).ok);
}

}

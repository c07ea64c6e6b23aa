// Serial versus OpenMP kernels, and a full step on each backend.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sheath/integrators.hpp"
#include "sheath/kernels.hpp"

using namespace sheath;

namespace {

const NondimParams& params() {
  static const NondimParams p = NondimParams::make(1.0 / 1836.0, 0.0025, 4e-4);
  return p;
}

struct Fields {
  std::vector<double> n, m, fn, fm, out;
};

Fields make_fields(std::size_t cells, std::size_t layers) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dens(0.5, 1.5), vel(-5.0, 5.0);
  Fields f;
  f.n.resize(cells + 2 * layers);
  f.m.resize(cells + 2 * layers);
  for (std::size_t j = 0; j < f.n.size(); ++j) {
    f.n[j] = dens(rng);
    f.m[j] = f.n[j] * vel(rng);
  }
  f.fn.resize(cells + 1);
  f.fm.resize(cells + 1);
  f.out.resize(cells);
  return f;
}

template <Backend B>
void BM_InterfaceFluxes(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  const double dx = 1.0 / static_cast<double>(cells);
  const auto pol = FluxPolicy::make(FluxVariant::rusanov, Species::electron, params(), dx);
  Fields f = make_fields(cells, 1);
  for (auto _ : state) {
    kernels::interface_fluxes(B, pol, f.n, f.m, {f.fn, f.fm});
    benchmark::DoNotOptimize(f.fn.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

template <Backend B>
void BM_MusclFluxes(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  const double dx = 1.0 / static_cast<double>(cells);
  const auto pol = FluxPolicy::make(FluxVariant::fixed_hll, Species::ion, params(), dx);
  Fields f = make_fields(cells, 2);
  for (auto _ : state) {
    kernels::muscl_fluxes(B, pol, f.n, f.m, 0.1, true, {f.fn, f.fm});
    benchmark::DoNotOptimize(f.fn.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

template <Backend B>
void BM_Divergence(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  Fields f = make_fields(cells, 0);
  for (auto _ : state) {
    kernels::apply_divergence(B, f.n, f.fn, 0.1, f.out);
    benchmark::DoNotOptimize(f.out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

template <Backend B>
void BM_Step(benchmark::State& state) {
  const auto cells = static_cast<std::size_t>(state.range(0));
  const Mesh mesh(cells);
  SchemeConfig cfg;
  cfg.backend = B;
  cfg.splitting = static_cast<Splitting>(state.range(1));
  if (cfg.splitting != Splitting::lie_modified) cfg.electron_flux = FluxVariant::rusanov;
  if (cfg.splitting == Splitting::strang) cfg.ion_flux = FluxVariant::fixed_hll;
  Stepper st(cfg, mesh, params());
  PlasmaState s = init_uniform(mesh), next;
  const double dt = 0.5 * st.choose_dt(s).dt_chosen;
  for (auto _ : state) {
    st.advance(s, next, dt);
    benchmark::DoNotOptimize(next.phi.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cells));
}

void sizes(benchmark::internal::Benchmark* b) { b->RangeMultiplier(4)->Range(256, 1 << 18); }

void step_sizes(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 3; ++s) {
    for (int n : {256, 4096, 65536}) b->Args({n, s});
  }
}

} // namespace

BENCHMARK(BM_InterfaceFluxes<Backend::serial>)->Apply(sizes);
BENCHMARK(BM_InterfaceFluxes<Backend::openmp>)->Apply(sizes);
BENCHMARK(BM_MusclFluxes<Backend::serial>)->Apply(sizes);
BENCHMARK(BM_MusclFluxes<Backend::openmp>)->Apply(sizes);
BENCHMARK(BM_Divergence<Backend::serial>)->Apply(sizes);
BENCHMARK(BM_Divergence<Backend::openmp>)->Apply(sizes);
BENCHMARK(BM_Step<Backend::serial>)->Apply(step_sizes);
BENCHMARK(BM_Step<Backend::openmp>)->Apply(step_sizes);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>

#include "birat/curve.hpp"
#include "birat/dixon.hpp"
#include "birat/movsurf.hpp"
#include "birat/poly_io.hpp"
#include "birat/surface.hpp"

namespace {

using namespace birat;

Polynomial p(const char* text, const RingPtr& ring) { return parse_polynomial(text, ring); }

PlaneCurveParam squared_circle() {
  const RingPtr& t = rings::curve_t();
  return PlaneCurveParam(p("2*t^2", t), p("1 + t^4", t), p("1 - t^4", t), p("1 + t^4", t));
}

SurfaceParam toric() {
  const RingPtr& r = rings::surface_t();
  return SurfaceParam({p("t3^3 + t1*t3^2 - t2*t3^2 + t1*t2*t3 - t1^2*t2 - t1*t2^2", r),
                       p("t3^3 + t1*t3^2 - t2*t3^2 - t1*t2*t3 + t1^2*t2 - t1*t2^2", r),
                       p("t3^3 - t1*t3^2 + t2*t3^2 - t1*t2*t3 - t1^2*t2 + t1*t2^2", r),
                       p("t3^3 - t1*t3^2 - t2*t3^2 + t1*t2*t3 - t1^2*t2 + t1*t2^2", r)});
}

DixonSystem quartic() {
  const RingPtr& r = dixon_ring();
  return DixonSystem::from_affine(p("t1^2 + t2^2 + 1", r), {p("t1^2", r), p("2", r), p("t1 + t2", r)});
}

Polynomial random_poly(std::mt19937_64& rng, const RingPtr& ring, unsigned degree, unsigned terms) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::size_t> var(0, ring->size() - 1);
  Polynomial out(ring);
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(ring->size());
    for (unsigned e = 0; e < degree; ++e) {
      const std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    out += Polynomial::term(ring, m, coeff(rng));
  }
  return out;
}

void BM_SylvesterDeterminant(benchmark::State& state) {
  const PolyMatrix s = build_sylvester(squared_circle());
  for (auto _ : state) benchmark::DoNotOptimize(det_fraction_free(s));
}
BENCHMARK(BM_SylvesterDeterminant);

void BM_DixonDeterminant(benchmark::State& state) {
  const DixonMatrix d = dixon_matrix(quartic());
  for (auto _ : state) benchmark::DoNotOptimize(det_fraction_free(d.candidate.matrix()));
}
BENCHMARK(BM_DixonDeterminant);

void BM_Gcd(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const RingPtr ring = make_ring({"x", "y", "z"});
  const auto degree = static_cast<unsigned>(state.range(0));
  const Polynomial g = random_poly(rng, ring, degree, 4);
  const Polynomial a = g * random_poly(rng, ring, degree, 4);
  const Polynomial b = g * random_poly(rng, ring, degree, 4);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->Arg(2)->Arg(4)->Arg(6);

void BM_MovingSurfaceBasis(benchmark::State& state) {
  const SurfaceParam param = toric();
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(moving_surface_basis(param, 1, n));
}
BENCHMARK(BM_MovingSurfaceBasis)->Arg(1)->Arg(2);

void BM_CandidateSearch(benchmark::State& state) {
  const SurfaceParam param = toric();
  for (auto _ : state) benchmark::DoNotOptimize(search_implicitization_candidate(param));
}
BENCHMARK(BM_CandidateSearch);

void BM_DixonMatrix(benchmark::State& state) {
  const DixonSystem sys = quartic();
  for (auto _ : state) benchmark::DoNotOptimize(dixon_matrix(sys));
}
BENCHMARK(BM_DixonMatrix);

void BM_DixonProperness(benchmark::State& state) {
  const DixonSystem sys = quartic();
  const DixonMatrix d = dixon_matrix(sys);
  const SurfaceParam param = sys.param();
  for (auto _ : state) benchmark::DoNotOptimize(surface_properness(d.candidate, param));
}
BENCHMARK(BM_DixonProperness);

}  // namespace

BENCHMARK_MAIN();

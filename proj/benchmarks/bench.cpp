// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <vector>

#include "monolie/cauchy.hpp"
#include "monolie/legendre.hpp"
#include "monolie/lie_sphere.hpp"
#include "monolie/multivector.hpp"
#include "monolie/operator_calculus.hpp"
#include "monolie/poly.hpp"
#include "monolie/quadrature.hpp"
#include "monolie/rng.hpp"
#include "monolie/zonal_monogenic.hpp"

using namespace monolie;

namespace {

Multivector random_mv(int n, Rng& rng) {
  Multivector u(n);
  for (unsigned m = 0; m < u.size(); ++m) {
    u[m] = cplx(rng.normal(), rng.normal());
  }
  return u;
}

void bm_multivector_product(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const Multivector u = random_mv(n, rng);
  const Multivector v = random_mv(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(u * v);
  }
}

void bm_legendre_eval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(legendre_eval(k, 3, 0.37));
  }
}

void bm_w_eval(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const std::vector<double> omega = {0.6, 0.8};
  const Paravector zeta(2, {cplx(0.1, 0.05), cplx(0.2, -0.1), cplx(-0.3, 0.0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(w_eval(k, 2, omega, zeta));
  }
}

void bm_hua_series(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  LieSpherePoint pt;
  pt.theta = 0.9;
  pt.omega = {0.6, 0.8};
  const std::vector<cplx> z = {cplx(0.25, 0.05), cplx(-0.15, 0.1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hua_kernel_series(pt, z, K));
  }
}

void bm_cauchy_transform(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const PolyMultivector f = ck_extension(
      PolyMultivector::variable(2, 1) * PolyMultivector::variable(2, 2));
  const auto eval = [&](const Paravector& x) { return f.eval(x); };
  const SphereQuadrature quad =
      build_sphere_quadrature(3, level, 0.8, SphereMeasure::Surface);
  const Paravector x(2, {0.1, -0.15, 0.2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(cauchy_transform(eval, quad, x));
  }
}

void bm_kernel_series_ga(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  Eigen::MatrixXcd sx(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  A.A = {0.1 * sx, 0.05 * sz};
  const Paravector omega(2, {0.9, 0.3, -0.2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_series_ga(A, omega, K));
  }
}

BENCHMARK(bm_multivector_product)->Arg(3)->Arg(5);
BENCHMARK(bm_legendre_eval)->Arg(10)->Arg(40);
BENCHMARK(bm_w_eval)->Arg(4)->Arg(10);
BENCHMARK(bm_hua_series)->Arg(20)->Arg(60);
BENCHMARK(bm_cauchy_transform)->Arg(8)->Arg(16);
BENCHMARK(bm_kernel_series_ga)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();

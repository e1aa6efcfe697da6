// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/cauchy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "monolie/poly.hpp"

using namespace monolie;

namespace {

const cplx I(0.0, 1.0);
constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("sphere surface constants") {
  CHECK(sigma_n(1) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(sigma_n(2) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(sigma_n(3) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
}

TEST_CASE("fundamental solution at axis points") {
  {
    const Paravector x(2, {2.0, 0.0, 0.0});
    const Paravector e = fundamental_e(x);
    CHECK(e[0].real() == doctest::Approx(1.0 / (16 * pi)).epsilon(1e-15));
    CHECK(std::abs(e[1]) == 0.0);
    CHECK(std::abs(e[2]) == 0.0);
  }
  {
    const Paravector x(1, {0.0, 1.0});
    const Paravector e = fundamental_e(x);
    CHECK(std::abs(e[0]) == 0.0);
    CHECK(e[1].real() == doctest::Approx(-1.0 / (2 * pi)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(fundamental_e(Paravector(2)), std::domain_error);
}

TEST_CASE("complex kernel reduces to the fundamental solution at real points") {
  const Paravector omega(2, {0.9, -0.3, 0.4});
  const Paravector x(2, {0.1, 0.2, -0.1});
  const KernelValue g = g_complex(omega, x);
  CHECK_FALSE(g.domain_flag);
  Paravector diff = omega;
  diff -= x;
  const Paravector e = fundamental_e(diff);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(g.value[i] - e[i]) < 1e-15);
}

TEST_CASE("complex kernel branch set") {
  {
    // Odd generator count: singular exactly on the isotropic cone.
    const Paravector omega(1, {1.0, 0.0});
    const Paravector zeta(1, {0.0, -I});
    const KernelValue g = g_complex(omega, zeta);  // omega - zeta = (1, i)
    CHECK(g.domain_flag);
    CHECK(g.value.norm() == 0.0);
  }
  {
    // Even generator count: flagged on the negative real half-line.
    const Paravector omega(2, {0.1, 0.0, 0.0});
    const Paravector zeta(2, {0.0, 0.5 * I, 0.0});  // square 0.01 - 0.25 < 0
    CHECK(g_complex(omega, zeta).domain_flag);
  }
  {
    // A genuinely complex square is fine.
    const Paravector omega(2, {1.0, 0.0, 0.0});
    const Paravector zeta(2, {0.1 * I, 0.2, 0.0});
    CHECK_FALSE(g_complex(omega, zeta).domain_flag);
  }
}

TEST_CASE("cauchy integral reproduces a monogenic polynomial") {
  // One generator: integrate over the circle of radius 0.8 in R^2.
  const int n = 1;
  const PolyMultivector f =
      ck_extension(PolyMultivector::variable(n, 1) * PolyMultivector::variable(n, 1));
  const auto eval = [&](const Paravector& x) { return f.eval(x); };
  const SphereQuadrature quad =
      build_sphere_quadrature(2, 16, 0.8, SphereMeasure::Surface);

  {
    const Paravector x(n, {0.1, -0.2});
    const Multivector got = cauchy_transform(eval, quad, x);
    CHECK((got - f.eval(x)).norm() < 1e-12);
  }
  {
    // Complex point with the singular set inside the sphere.
    const Paravector zeta(n, {cplx(0.1, 0.05), cplx(-0.2, 0.1)});
    const Multivector got = cauchy_transform(eval, quad, zeta);
    CHECK((got - f.eval(zeta)).norm() < 1e-9);
  }
  {
    // Exterior point: the integral vanishes.
    const Paravector x(n, {2.0, 0.5});
    CHECK(cauchy_transform(eval, quad, x).norm() < 1e-10);
  }
  {
    // Same nodes, same order: the compensated sum is bitwise stable.
    const Paravector x(n, {0.1, -0.2});
    const Multivector a = cauchy_transform(eval, quad, x);
    const Multivector b = cauchy_transform(eval, quad, x);
    CHECK((a - b).norm() == 0.0);
  }
}

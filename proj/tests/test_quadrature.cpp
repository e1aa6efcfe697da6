// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "doctest.h"

using namespace monolie;

namespace {

constexpr double pi = std::numbers::pi;

double moment(const SphereQuadrature& q, int i, int power) {
  double s = 0.0;
  for (std::size_t a = 0; a < q.size(); ++a) {
    s += q.weights[a] * std::pow(q.nodes[a][i], power);
  }
  return s;
}

}  // namespace

TEST_CASE("gauss-legendre nodes and exactness") {
  const GaussLegendre g = gauss_legendre(5);
  REQUIRE(g.nodes.size() == 5);
  double mass = 0.0, m8 = 0.0;
  for (int i = 0; i < 5; ++i) {
    mass += g.weights[i];
    m8 += g.weights[i] * std::pow(g.nodes[i], 8);
    if (i > 0) CHECK(g.nodes[i] > g.nodes[i - 1]);
    CHECK(g.nodes[i] == doctest::Approx(-g.nodes[4 - i]).epsilon(1e-14));
  }
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-14));
  // Degree 8 <= 2m - 1 = 9: exact value 2/9.
  CHECK(m8 == doctest::Approx(2.0 / 9.0).epsilon(1e-13));

  const GaussLegendre one = gauss_legendre(1);
  CHECK(one.nodes[0] == doctest::Approx(0.0));
  CHECK(one.weights[0] == doctest::Approx(2.0));
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(2) == doctest::Approx(2 * pi).epsilon(1e-15));
  CHECK(sphere_area(3) == doctest::Approx(4 * pi).epsilon(1e-15));
  CHECK(sphere_area(4) == doctest::Approx(2 * pi * pi).epsilon(1e-15));
}

TEST_CASE("circle rule with surface measure") {
  const double r = 0.5;
  const SphereQuadrature q = build_sphere_quadrature(2, 8, r, SphereMeasure::Surface);
  double mass = 0.0, x2 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    mass += q.weights[i];
    const auto p = q.point(i);
    x2 += q.weights[i] * p[0] * p[0];
  }
  CHECK(mass == doctest::Approx(2 * pi * r).epsilon(1e-14));
  // int x1^2 over the circle of radius r is pi r^3.
  CHECK(x2 == doctest::Approx(pi * r * r * r).epsilon(1e-13));
  CHECK(q.exact_degree >= 15);
}

TEST_CASE("two-sphere rule: surface moments") {
  const double r = 0.9;
  const SphereQuadrature q = build_sphere_quadrature(3, 24, r, SphereMeasure::Surface);
  double mass = 0.0, first2 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    mass += q.weights[i];
    const auto p = q.point(i);
    first2 += q.weights[i] * p[0] * p[0];
  }
  CHECK(mass == doctest::Approx(4 * pi * r * r).epsilon(1e-13));
  // int x^2 of one coordinate over r S^2 is (4 pi / 3) r^4.
  CHECK(first2 == doctest::Approx(4 * pi / 3 * std::pow(r, 4)).epsilon(1e-13));
}

TEST_CASE("two-sphere rule: probability moments") {
  const SphereQuadrature q =
      build_sphere_quadrature(3, 12, 1.0, SphereMeasure::Probability);
  double mass = 0.0;
  for (double w : q.weights) mass += w;
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(moment(q, 0, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(moment(q, 0, 4) == doctest::Approx(1.0 / 5.0).epsilon(1e-13));
  // Odd moments cancel by antipodal symmetry.
  CHECK(std::abs(moment(q, 0, 3)) < 1e-15);
}

TEST_CASE("three-sphere rule: probability moments") {
  const SphereQuadrature q =
      build_sphere_quadrature(4, 6, 1.0, SphereMeasure::Probability);
  CHECK(q.exact_degree >= 11);
  double mass = 0.0, x2 = 0.0, x4 = 0.0, x2y2 = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double w = q.weights[i];
    const double u = q.nodes[i][0], v = q.nodes[i][1];
    mass += w;
    x2 += w * u * u;
    x4 += w * u * u * u * u;
    x2y2 += w * u * u * v * v;
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(x2 == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(x4 == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
  CHECK(x2y2 == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
}

TEST_CASE("nodes stay on the unit sphere and points carry the radius") {
  const SphereQuadrature q = build_sphere_quadrature(3, 6, 2.5, SphereMeasure::Surface);
  for (std::size_t i = 0; i < q.size(); ++i) {
    double s = 0.0;
    for (double c : q.nodes[i]) s += c * c;
    CHECK(s == doctest::Approx(1.0).epsilon(1e-14));
    const auto p = q.point(i);
    for (int j = 0; j < 3; ++j) {
      CHECK(p[j] == doctest::Approx(2.5 * q.nodes[i][j]).epsilon(1e-15));
    }
  }
}

// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/zonal_monogenic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "monolie/poly.hpp"

using namespace monolie;

namespace {

const cplx I(0.0, 1.0);
const std::vector<double> e1_dir = {1.0, 0.0};
const std::vector<double> omega3 = {1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0};

}  // namespace

TEST_CASE("zonal polynomials are harmonic exactly in their own family") {
  const PolyMultivector own = zonal_polynomial(3, 3, 3, omega3);
  CHECK(laplacian_spatial(own).max_abs() < 1e-12);
  const PolyMultivector shifted = zonal_polynomial(3, 5, 3, omega3);
  CHECK(laplacian_spatial(shifted).max_abs() > 0.01);
  // Homogeneous of degree k: every exponent sums to k (x0 unused).
  for (const auto& [e, c] : own.terms()) {
    int total = 0;
    for (int v : e) total += v;
    CHECK(total == 3);
    CHECK(e[0] == 0);
  }
}

TEST_CASE("explicit zonal for degree two") {
  // Q_{2,4}(<e1, x>, x.x) = (4 x1^2 - (x1^2 + x2^2)) / 3 = x1^2 - x2^2 / 3.
  const PolyMultivector q = zonal_polynomial(2, 4, 2, e1_dir);
  PolyMultivector expect(2);
  expect.add_term({0, 2, 0}, Multivector::scalar(2, cplx(1.0)));
  expect.add_term({0, 0, 2}, Multivector::scalar(2, cplx(-1.0 / 3.0)));
  CHECK((q - expect).max_abs() < 1e-15);
  CHECK((w_restriction_polynomial(2, 2, e1_dir) - q).max_abs() == 0.0);
}

TEST_CASE("kernel polynomial of degree zero is the unit") {
  const Paravector zeta(2, {cplx(0.1, 0.2), cplx(-0.3, 0.1), 0.5});
  const Multivector w = w_eval(0, 2, e1_dir, zeta);
  CHECK((w - Multivector::scalar(2, cplx(1.0))).norm() == 0.0);
}

TEST_CASE("kernel polynomial of degree one in closed form") {
  // W_{1,n}(e1; zeta) = zeta_1 e0 - zeta_0 e1.
  const Paravector zeta(2, {cplx(0.2, 0.1), 0.3, -0.4});
  const Multivector w = w_eval(1, 2, e1_dir, zeta);
  Multivector expect = Multivector::scalar(2, cplx(0.3));
  expect += Multivector::blade(2, 1, -cplx(0.2, 0.1));
  CHECK((w - expect).norm() < 1e-15);
}

TEST_CASE("kernel polynomials agree with the extension operator") {
  for (int n : {2, 3}) {
    const std::vector<double> omega =
        (n == 2) ? std::vector<double>{0.6, 0.8} : omega3;
    for (int k = 1; k <= 5; ++k) {
      const PolyMultivector direct = w_polynomial(k, n, omega);
      const PolyMultivector via_ck =
          ck_extension(w_restriction_polynomial(k, n, omega));
      CHECK((direct - via_ck).max_abs() < 1e-12);
      CHECK(dirac_d(direct).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("polynomial form and direct evaluation agree at complex points") {
  const Paravector zeta(3, {cplx(0.1, -0.2), cplx(0.3, 0.1), cplx(-0.2, 0.2), 0.4});
  const Multivector direct = w_eval(3, 3, omega3, zeta);
  const Multivector via_poly = w_polynomial(3, 3, omega3).eval(zeta);
  CHECK((direct - via_poly).norm() < 1e-13);
}

TEST_CASE("restriction to the hyperplane is the scalar zonal") {
  const Paravector zeta(2, {0.0, cplx(0.25, 0.1), cplx(-0.35, 0.05)});
  const Multivector w = w_eval(4, 2, e1_dir, zeta);
  const cplx zonal =
      w_restriction_polynomial(4, 2, e1_dir).eval_spatial({zeta[1], zeta[2]}).scalar_part();
  CHECK(std::abs(w.scalar_part() - zonal) < 1e-14);
  for (unsigned mask = 1; mask < 4; ++mask) CHECK(std::abs(w[mask]) < 1e-15);
}

TEST_CASE("sup bound on the real unit sphere") {
  CHECK(w_bound(0, 5) == doctest::Approx(1.0));
  CHECK(w_bound(2, 2) == doctest::Approx(25.0 / 3.0).epsilon(1e-15));
  CHECK(w_bound(3, 2) == doctest::Approx(14.0).epsilon(1e-15));
  // Spot check: |W| stays under the bound along a curve on S^2.
  for (int i = 0; i < 50; ++i) {
    const double t = 2.0 * std::numbers::pi * i / 50.0;
    Paravector u(2, {std::cos(t), std::sin(t) * std::cos(3 * t),
                     std::sin(t) * std::sin(3 * t)});
    CHECK(w_eval(3, 2, e1_dir, u).norm() <= w_bound(3, 2) + 1e-12);
  }
}

// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/legendre.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace monolie;

TEST_CASE("harmonic dimensions") {
  CHECK(dim_harmonics(0, 5) == 1);
  CHECK(dim_harmonics(1, 2) == 2);
  CHECK(dim_harmonics(5, 2) == 2);
  CHECK(dim_harmonics(40, 2) == 2);
  for (int k = 0; k <= 6; ++k) CHECK(dim_harmonics(k, 3) == 2 * k + 1);
  CHECK(dim_harmonics(2, 4) == 9);
  CHECK(dim_harmonics(4, 4) == 25);  // (k+1)^2 on S^3
  CHECK(dim_harmonics(3, 5) == 30);
  CHECK(dim_harmonics(40, 6) == 259161);
}

TEST_CASE("classical legendre values (three-variable family)") {
  CHECK(legendre_eval(2, 3, 0.3) == doctest::Approx(-0.365).epsilon(1e-14));
  CHECK(legendre_eval(3, 3, 0.5) == doctest::Approx(-0.4375).epsilon(1e-14));
  CHECK(legendre_eval(4, 3, -0.2) == doctest::Approx(0.232).epsilon(1e-13));
}

TEST_CASE("chebyshev case (two-variable family)") {
  for (double t : {-0.9, -0.3, 0.0, 0.45, 0.99}) {
    for (int k : {1, 2, 7, 20}) {
      CHECK(legendre_eval(k, 2, t) ==
            doctest::Approx(std::cos(k * std::acos(t))).epsilon(1e-12));
    }
  }
}

TEST_CASE("four-variable family is normalized chebyshev-u") {
  // P_{k,4}(t) = U_k(t) / (k + 1).
  CHECK(legendre_eval(2, 4, 0.3) == doctest::Approx(-0.64 / 3.0).epsilon(1e-14));
  const double t = 0.4;
  const double u3 = 8 * t * t * t - 4 * t;  // U_3
  CHECK(legendre_eval(3, 4, t) == doctest::Approx(u3 / 4.0).epsilon(1e-13));
}

TEST_CASE("normalization and parity at the endpoints") {
  for (int n : {2, 3, 4, 5, 7}) {
    for (int k : {0, 1, 2, 5, 12}) {
      CHECK(legendre_eval(k, n, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(legendre_eval(k, n, -1.0) ==
            doctest::Approx(k % 2 == 0 ? 1.0 : -1.0).epsilon(1e-12));
    }
  }
  // |P| <= 1 on [-1, 1].
  for (int i = 0; i <= 200; ++i) {
    const double t = -1.0 + 2.0 * i / 200.0;
    CHECK(std::abs(legendre_eval(25, 7, t)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("dense coefficients") {
  const std::vector<double> p33 = legendre_coefficients(3, 3);
  REQUIRE(p33.size() == 4);
  CHECK(p33[0] == doctest::Approx(0.0));
  CHECK(p33[1] == doctest::Approx(-1.5).epsilon(1e-15));
  CHECK(p33[2] == doctest::Approx(0.0));
  CHECK(p33[3] == doctest::Approx(2.5).epsilon(1e-15));

  const std::vector<double> p24 = legendre_coefficients(2, 4);
  REQUIRE(p24.size() == 3);
  CHECK(p24[0] == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  CHECK(p24[2] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("generating series partial sums match the closed form") {
  {
    const double t = 0.7, r = 0.4;
    const double closed = 1.0 / std::sqrt(1.0 - 2.0 * t * r + r * r);
    CHECK(gf_partial_sum(t, r, 3, 60) == doctest::Approx(closed).epsilon(1e-13));
  }
  {
    const double t = -0.5, r = 0.35;
    const double closed = 1.0 / (1.0 - 2.0 * t * r + r * r);
    CHECK(gf_partial_sum(t, r, 4, 60) == doctest::Approx(closed).epsilon(1e-13));
  }
}

TEST_CASE("homogenized zonal polynomials") {
  const auto q23 = HomogenizedLegendre::get(2, 3);
  REQUIRE(q23->coefficients().size() == 2);
  CHECK(q23->coefficients()[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(q23->coefficients()[1] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(std::abs(q23->eval(0.3, 1.0) - cplx(legendre_eval(2, 3, 0.3))) < 1e-15);
  CHECK(std::abs(q23->eval_ds(cplx(0.2, 0.1), 0.0) - cplx(0.6, 0.3)) < 1e-15);
  CHECK(std::abs(q23->eval_dq(0.7, 0.9) - cplx(-0.5)) < 1e-15);

  // Q(L s, L^2 q) = L^k Q(s, q) for complex L.
  const auto q54 = HomogenizedLegendre::get(5, 4);
  const cplx L(2.0, 1.0), s(0.3, 0.2), q(0.5, -0.1);
  const cplx lhs = q54->eval(L * s, L * L * q);
  const cplx rhs = std::pow(L, 5) * q54->eval(s, q);
  CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));

  // The memo table returns one immutable instance per index.
  CHECK(HomogenizedLegendre::get(2, 3).get() == q23.get());
}

TEST_CASE("derivative identity across families") {
  for (int n : {1, 2, 3}) {
    for (int k : {1, 3, 6}) {
      for (double t : {-0.8, 0.1, 0.5}) {
        const auto [lhs, rhs] = legendre_derivative_check(k, n, t);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("funk-hecke coefficients against explicit harmonics") {
  // Degree-0 pairing is the total (probability) mass.
  for (int n : {2, 3, 4, 5}) {
    CHECK(funk_hecke_coeff(0, 0, n, 64) == doctest::Approx(1.0).epsilon(1e-13));
  }
  // S(w) = w_1 on S^2 against P_{1,5}(t) = t: E[w_i w_j] = delta/3.
  CHECK(funk_hecke_coeff(1, 1, 3, 64) == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  // S(w) = w_1 w_2 on S^2 against P_{2,5} = (5t^2 - 1)/4: E[w_1^2 w_2^2] = 1/15.
  CHECK(funk_hecke_coeff(2, 2, 3, 64) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  // S(w) = cos(theta) on S^1 against P_{1,4}(t) = t.
  CHECK(funk_hecke_coeff(1, 1, 2, 64) == doctest::Approx(0.5).epsilon(1e-13));
  // Opposite parity pairs vanish identically.
  CHECK(funk_hecke_coeff(3, 2, 3, 64) == 0.0);
  CHECK(funk_hecke_coeff(2, 5, 4, 64) == 0.0);
}

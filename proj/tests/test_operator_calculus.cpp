// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/operator_calculus.hpp"

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "monolie/poly.hpp"

using namespace monolie;

namespace {

const cplx I(0.0, 1.0);

Eigen::MatrixXcd mat2(cplx a, cplx b, cplx c, cplx d) {
  Eigen::MatrixXcd m(2, 2);
  m << a, b, c, d;
  return m;
}

MatrixTuple ladder_pair() {
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  A.A = {mat2(0, 1, 0, 0), mat2(0, 0, 1, 0)};
  return A;
}

}  // namespace

TEST_CASE("tuple validation and norm") {
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  A.A = {mat2(3, 0, 0, 0), mat2(0, 0, 0, 4)};
  A.validate();
  CHECK(tuple_norm(A) == doctest::Approx(5.0).epsilon(1e-14));

  MatrixTuple zero;
  zero.n = 1;
  zero.d = 3;
  zero.A = {Eigen::MatrixXcd::Zero(3, 3)};
  CHECK(tuple_norm(zero) == 0.0);

  MatrixTuple ident;
  ident.n = 1;
  ident.d = 2;
  ident.A = {Eigen::MatrixXcd::Identity(2, 2)};
  CHECK(tuple_norm(ident) == doctest::Approx(1.0).epsilon(1e-14));

  MatrixTuple bad = A;
  bad.A.pop_back();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = A;
  bad.A[1] = Eigen::MatrixXcd::Zero(3, 3);
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("symmetrized words") {
  const MatrixTuple A = ladder_pair();

  // Single letter.
  CHECK((symmetric_monomial(A, {1, 0}) - A.A[0]).norm() < 1e-15);
  // Mixed pair: (A1 A2 + A2 A1) / 2 = I / 2 for the ladder pair.
  const Eigen::MatrixXcd half_i = 0.5 * Eigen::MatrixXcd::Identity(2, 2);
  CHECK((symmetric_monomial(A, {1, 1}) - half_i).norm() < 1e-15);
  // (A1^2 A2 + A1 A2 A1 + A2 A1^2) / 3 with A1^2 = 0 collapses to A1 / 3.
  CHECK((symmetric_monomial(A, {2, 1}) - A.A[0] / 3.0).norm() < 1e-15);

  // Against a brute-force average over position permutations.
  Eigen::MatrixXcd B1(3, 3), B2(3, 3);
  B1 << 1, 2, 0, 0, -1, 1, 3, 0, 2;
  B2 << 0, 1, 1, 2, 0, -2, 1, 1, 0;
  MatrixTuple B;
  B.n = 2;
  B.d = 3;
  B.A = {B1, B2};
  const Eigen::MatrixXcd brute = (B1 * B1 * B2 + B1 * B2 * B1 + B2 * B1 * B1) / 3.0;
  CHECK((symmetric_monomial(B, {2, 1}) - brute).norm() < 1e-12);

  CHECK_THROWS_AS(symmetric_monomial(A, {9, 0}), std::domain_error);
  CHECK_THROWS_AS(symmetric_monomial(A, {1}), std::invalid_argument);
}

TEST_CASE("symmetrized polynomials") {
  const MatrixTuple A = ladder_pair();
  const PolyMultivector x1 = PolyMultivector::variable(2, 1);
  const PolyMultivector x2 = PolyMultivector::variable(2, 2);

  const Eigen::MatrixXcd m = symmetric_poly(A, x1 * x2);
  CHECK((m - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-15);

  const Eigen::MatrixXcd q = symmetric_poly(A, x1 * x1 - x2);
  CHECK((q + A.A[1]).norm() < 1e-15);  // A1^2 = 0

  // x0 and non-scalar coefficients are outside the calculus domain.
  CHECK_THROWS_AS(symmetric_poly(A, PolyMultivector::variable(2, 0)),
                  std::invalid_argument);
  PolyMultivector bladed(2);
  bladed.add_term({0, 1, 0}, Multivector::blade(2, 1));
  CHECK_THROWS_AS(symmetric_poly(A, bladed), std::invalid_argument);

  // Commuting tuple: symmetrization is the plain product.
  MatrixTuple D;
  D.n = 2;
  D.d = 2;
  D.A = {mat2(0.3, 0, 0, -0.1), mat2(0.2, 0, 0, 0.4)};
  const Eigen::MatrixXcd plain = D.A[0] * D.A[0] * D.A[1];
  CHECK((symmetric_monomial(D, {2, 1}) - plain).norm() < 1e-15);
}

TEST_CASE("kernel series at the zero tuple is the scalar kernel") {
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  A.A = {Eigen::MatrixXcd::Zero(2, 2), Eigen::MatrixXcd::Zero(2, 2)};
  const Paravector omega(2, {1.5, 0.3, -0.2});
  const KernelSeriesResult res = kernel_series_ga(A, omega, 10);
  const Paravector e = fundamental_e(omega);
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2, 2);
  for (int i = 0; i < 3; ++i) {
    const unsigned mask = (i == 0) ? 0u : (1u << (i - 1));
    CHECK((res.G.blades[mask] - e[i] * id).norm() < 1e-13);
  }
  CHECK(res.G.blades[3].norm() < 1e-15);  // no bivector part
}

TEST_CASE("kernel series preconditions") {
  MatrixTuple A = ladder_pair();  // tuple norm sqrt(2)
  const Paravector close(2, {0.5, 0.0, 0.0});
  CHECK_THROWS_AS(kernel_series_ga(A, close, 10), std::domain_error);

  const Paravector complex_pole(2, {cplx(1.5, 0.1), 0.0, 0.0});
  CHECK_THROWS_AS(kernel_series_ga(A, complex_pole, 10), std::invalid_argument);
}

TEST_CASE("functional calculus reproduces linear functions") {
  MatrixTuple A;
  A.n = 2;
  A.d = 2;
  A.A = {mat2(0, 0.06, 0.06, 0), mat2(0.03, 0, 0, -0.03)};

  const PolyMultivector f1 = ck_extension(PolyMultivector::variable(2, 1));
  const auto eval1 = [&](const Paravector& x) { return f1.eval(x); };
  const PhiResult r1 = phi_of_a(A, eval1, 0.8, 8, 12);
  CHECK((r1.phi - A.A[0]).norm() < 1e-10);
  for (const auto& [mask, nrm] : r1.off_blade_norms) {
    CAPTURE(mask);
    CHECK(nrm < 1e-10);
  }

  const PolyMultivector one = PolyMultivector::constant(2, cplx(1.0));
  const auto eval0 = [&](const Paravector& x) { return one.eval(x); };
  const PhiResult r0 = phi_of_a(A, eval0, 0.8, 8, 8);
  CHECK((r0.phi - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-10);

  // Pole radius must clear the series precondition.
  CHECK_THROWS_AS(phi_of_a(A, eval0, 0.05, 8, 8), std::domain_error);
}

TEST_CASE("norm probe in the scalar case") {
  // d = 1, one generator: homogeneous p = c x^3, sup over {-1, 1} is |c|,
  // so the ratio is exactly |0.5|^3.
  MatrixTuple A;
  A.n = 1;
  A.d = 1;
  A.A = {Eigen::MatrixXcd::Constant(1, 1, cplx(0.5))};
  CHECK(poly_norm_probe(A, 3, 16, 11u) == doctest::Approx(0.125).epsilon(1e-12));

  MatrixTuple zero;
  zero.n = 1;
  zero.d = 2;
  zero.A = {Eigen::MatrixXcd::Zero(2, 2)};
  CHECK(poly_norm_probe(zero, 2, 8, 3u) == doctest::Approx(0.0));

  CHECK_THROWS_AS(poly_norm_probe(A, 0, 4, 1u), std::domain_error);
}

TEST_CASE("clifford matrices") {
  const CliffordMatrix z = CliffordMatrix::zero(2, 3);
  CHECK(z.blades.size() == 4);
  CHECK(z.norm() == 0.0);
}

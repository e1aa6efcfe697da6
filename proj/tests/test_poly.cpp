// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/poly.hpp"

#include <vector>

#include "doctest.h"

using namespace monolie;

namespace {

const cplx I(0.0, 1.0);

PolyMultivector var(int n, int i) { return PolyMultivector::variable(n, i); }

}  // namespace

TEST_CASE("construction and evaluation") {
  // p = x1^2 x2 - x2 + 1.
  const int n = 2;
  PolyMultivector p = var(n, 1) * var(n, 1) * var(n, 2) - var(n, 2) +
                      PolyMultivector::constant(n, cplx(1.0));
  CHECK(p.total_degree() == 3);
  CHECK(p.eval_scalar({0.5, 2.0, 3.0}) == cplx(10.0));
  CHECK(p.eval_spatial({cplx(2.0), cplx(3.0)}).scalar_part() == cplx(10.0));

  const Multivector v = p.eval(Paravector(n, {0.0, I, 2.0}));
  // (i)^2 * 2 - 2 + 1 = -3.
  CHECK(std::abs(v.scalar_part() - cplx(-3.0)) < 1e-15);
}

TEST_CASE("coefficients multiply in the clifford algebra") {
  const int n = 2;
  PolyMultivector p(n), q(n);
  p.add_term({0, 1, 0}, Multivector::blade(n, 1));  // e1 x1
  q.add_term({0, 0, 1}, Multivector::blade(n, 2));  // e2 x2
  const PolyMultivector pq = p * q;
  const PolyMultivector qp = q * p;
  REQUIRE(pq.terms().size() == 1);
  const Multivector& c1 = pq.terms().begin()->second;
  const Multivector& c2 = qp.terms().begin()->second;
  CHECK(c1[3] == cplx(1.0));
  CHECK(c2[3] == cplx(-1.0));
  CHECK((pq + qp).max_abs() == 0.0);
}

TEST_CASE("derivatives and laplacians") {
  const int n = 2;
  const PolyMultivector p = var(n, 1) * var(n, 1) * var(n, 2);
  const PolyMultivector d1 = derivative(p, 1);
  const PolyMultivector expect = cplx(2.0) * (var(n, 1) * var(n, 2));
  CHECK((d1 - expect).max_abs() == 0.0);

  const int m = 1;
  const PolyMultivector r2 = var(m, 0) * var(m, 0) + var(m, 1) * var(m, 1);
  CHECK((laplacian(r2) - PolyMultivector::constant(m, cplx(4.0))).max_abs() == 0.0);
  CHECK((laplacian_spatial(r2) - PolyMultivector::constant(m, cplx(2.0))).max_abs() ==
        0.0);
}

TEST_CASE("the identity paravector is monogenic for one generator") {
  // D(x0 + x1 e1) = e0 + e1 e1 = 0.
  const int n = 1;
  PolyMultivector p(n);
  p.add_term({1, 0}, Multivector::scalar(n, cplx(1.0)));
  p.add_term({0, 1}, Multivector::blade(n, 1));
  CHECK(dirac_d(p).max_abs() == 0.0);
  // The conjugate operator gives 2 e0 instead.
  const PolyMultivector db = dirac_dbar(p);
  CHECK((db - PolyMultivector::constant(n, cplx(2.0))).max_abs() == 0.0);
}

TEST_CASE("monogenic extension of x1") {
  // Extension of x1 is x1 e0 - x0 e1.
  const int n = 2;
  const PolyMultivector ck = ck_extension(var(n, 1));
  PolyMultivector expect(n);
  expect.add_term({0, 1, 0}, Multivector::scalar(n, cplx(1.0)));
  expect.add_term({1, 0, 0}, Multivector::blade(n, 1, cplx(-1.0)));
  CHECK((ck - expect).max_abs() == 0.0);
  CHECK(dirac_d(ck).max_abs() == 0.0);
}

TEST_CASE("monogenic extension of x1^2") {
  // Extension of x1^2 is x1^2 - 2 x0 x1 e1 - x0^2.
  const int n = 1;
  const PolyMultivector ck = ck_extension(var(n, 1) * var(n, 1));
  PolyMultivector expect(n);
  expect.add_term({0, 2}, Multivector::scalar(n, cplx(1.0)));
  expect.add_term({1, 1}, Multivector::blade(n, 1, cplx(-2.0)));
  expect.add_term({2, 0}, Multivector::scalar(n, cplx(-1.0)));
  CHECK((ck - expect).max_abs() == 0.0);
  CHECK(dirac_d(ck).max_abs() == 0.0);
  CHECK((restrict_x0(ck) - var(n, 1) * var(n, 1)).max_abs() == 0.0);
}

TEST_CASE("extension drops terms that already carry x0") {
  const int n = 1;
  const PolyMultivector p = var(n, 0) * var(n, 1);
  CHECK(ck_extension(p).is_zero());
}

TEST_CASE("cleanup drops small terms") {
  const int n = 1;
  PolyMultivector p(n);
  p.add_term({0, 1}, Multivector::scalar(n, cplx(1.0)));
  p.add_term({0, 2}, Multivector::scalar(n, cplx(1e-16)));
  p.cleanup(1e-14);
  CHECK(p.terms().size() == 1);
  CHECK(p.total_degree() == 1);
}

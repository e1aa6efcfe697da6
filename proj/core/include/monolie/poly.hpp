// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_POLY_HPP
#define MONOLIE_POLY_HPP

#include <map>
#include <vector>

#include "monolie/multivector.hpp"

namespace monolie {

/// Exponent vector over the n + 1 paravector variables x_0 .. x_n.
using Exponent = std::vector<int>;

/// Polynomial in x_0 .. x_n with Clifford-algebra coefficients.  Variables
/// are scalars and commute with everything; the coefficient product is the
/// (noncommutative) Clifford product.  Terms are kept sorted by exponent so
/// iteration order is deterministic.
class PolyMultivector {
 public:
  explicit PolyMultivector(int n);

  static PolyMultivector constant(int n, const Multivector& c);
  static PolyMultivector constant(int n, cplx c);
  /// The scalar-valued monomial x_i.
  static PolyMultivector variable(int n, int i);
  static PolyMultivector monomial(int n, const Exponent& e,
                                  const Multivector& c);

  int generators() const { return n_; }
  int vars() const { return n_ + 1; }
  const std::map<Exponent, Multivector>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  double max_abs() const;

  void add_term(const Exponent& e, const Multivector& c);
  /// Drops terms whose largest coefficient is <= tol.
  void cleanup(double tol = 1e-14);

  Multivector eval(const std::vector<cplx>& x) const;
  Multivector eval(const Paravector& x) const;
  /// Evaluation at a point with x_0 = 0 and spatial part z (size n).
  Multivector eval_spatial(const std::vector<cplx>& z) const;
  /// Coefficient of e_0 in eval (for scalar-valued polynomials).
  cplx eval_scalar(const std::vector<cplx>& x) const;

  PolyMultivector& operator+=(const PolyMultivector& rhs);
  PolyMultivector& operator-=(const PolyMultivector& rhs);
  PolyMultivector& operator*=(cplx s);
  PolyMultivector& operator*=(const Multivector& c);  // right multiply

 private:
  int n_;
  std::map<Exponent, Multivector> terms_;
};

PolyMultivector operator+(PolyMultivector lhs, const PolyMultivector& rhs);
PolyMultivector operator-(PolyMultivector lhs, const PolyMultivector& rhs);
PolyMultivector operator*(PolyMultivector lhs, cplx s);
PolyMultivector operator*(cplx s, PolyMultivector rhs);
PolyMultivector operator*(const PolyMultivector& lhs,
                          const PolyMultivector& rhs);

/// d/dx_i.
PolyMultivector derivative(const PolyMultivector& p, int i);

/// Left Dirac operator D = e_0 d_0 + e_1 d_1 + ... + e_n d_n.
PolyMultivector dirac_d(const PolyMultivector& p);
/// Conjugate Dirac operator Dbar = e_0 d_0 - e_1 d_1 - ... - e_n d_n.
PolyMultivector dirac_dbar(const PolyMultivector& p);
/// Spatial Dirac operator e_1 d_1 + ... + e_n d_n.
PolyMultivector dirac_spatial(const PolyMultivector& p);

/// Laplacian over all n + 1 variables.
PolyMultivector laplacian(const PolyMultivector& p);
/// Laplacian over x_1 .. x_n only.
PolyMultivector laplacian_spatial(const PolyMultivector& p);

/// Terms with x_0 exponent zero (the restriction to x_0 = 0).
PolyMultivector restrict_x0(const PolyMultivector& p);

/// Cauchy-Kovalevskaya extension of p(x_1..x_n) to a (left) monogenic
/// polynomial on R^{n+1}: sum_m (x_0^m / m!) (-Dspatial)^m p.  Terms of p
/// with positive x_0 exponent are dropped first.
PolyMultivector ck_extension(const PolyMultivector& p);

}  // namespace monolie

#endif  // MONOLIE_POLY_HPP

// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_OPERATOR_CALCULUS_HPP
#define MONOLIE_OPERATOR_CALCULUS_HPP

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "monolie/cauchy.hpp"
#include "monolie/multivector.hpp"
#include "monolie/poly.hpp"

namespace monolie {

/// n-tuple of d x d complex matrices (d <= 16).
struct MatrixTuple {
  int n = 0;
  int d = 0;
  std::vector<Eigen::MatrixXcd> A;

  void validate() const;
};

/// Multivector whose blade coefficients are d x d complex matrices.
struct CliffordMatrix {
  int n = 0;
  int d = 0;
  std::vector<Eigen::MatrixXcd> blades;  // 2^n entries

  static CliffordMatrix zero(int n, int d);
  /// Frobenius norm over all blades.
  double norm() const;
};

/// sqrt(sum_j ||A_j||_2^2) with the spectral norm of each entry computed by
/// Jacobi SVD.
double tuple_norm(const MatrixTuple& A);

/// Average of all distinct orderings of the word with A_j repeated
/// alpha_j times (|alpha| <= 8).
Eigen::MatrixXcd symmetric_monomial(const MatrixTuple& A,
                                    const std::vector<int>& alpha);

/// Linear extension of symmetric_monomial to a scalar polynomial in the
/// spatial variables x_1 .. x_n (terms must carry no x_0 and only e_0
/// coefficients).
Eigen::MatrixXcd symmetric_poly(const MatrixTuple& A,
                                const PolyMultivector& p);

/// Truncated kernel series G_omega(A): the Taylor expansion of the Cauchy
/// kernel E(omega - x) around x = 0 with symmetrized matrix words
/// substituted for the monomials.  Requires
/// |omega| > (1 + sqrt 2) tuple_norm(A); throws when the observed tail
/// stops decaying.
struct KernelSeriesResult {
  CliffordMatrix G;
  /// Norm ratio of the last two degree layers (0 when both vanish).
  double tail_ratio = 0.0;
};
KernelSeriesResult kernel_series_ga(const MatrixTuple& A,
                                    const Paravector& omega, int K);

/// phi(A) = int_{rS^n} G_omega(A) n(omega) f(omega) dmu(omega) by surface
/// quadrature; returns the e_0-blade matrix along with the norms of the
/// other blades (expected to vanish for scalar phi) and the largest
/// per-degree tail ratio of the underlying series.
struct PhiResult {
  Eigen::MatrixXcd phi;
  std::map<unsigned, double> off_blade_norms;
  double tail_ratio = 0.0;
};
PhiResult phi_of_a(const MatrixTuple& A, const MonogenicEvaluator& f,
                   double r, int level, int K);

/// Empirical max of ||p(A)||_2 / sup_{S^{n-1}} |p| over random homogeneous
/// scalar polynomials p of the given degree (report-only probe).
double poly_norm_probe(const MatrixTuple& A, int degree, int samples,
                       unsigned seed);

}  // namespace monolie

#endif  // MONOLIE_OPERATOR_CALCULUS_HPP

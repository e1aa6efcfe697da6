// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_LEGENDRE_HPP
#define MONOLIE_LEGENDRE_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "monolie/multivector.hpp"

namespace monolie {

/// Dimension N(k, n) of the spherical harmonics of degree k on S^{n-1}:
/// (2k + n - 2) (k + n - 3)! / (k! (n - 2)!), with N(0, n) = 1 and
/// N(k, 2) = 2 for k >= 1.  Exact integer arithmetic.
std::int64_t dim_harmonics(int k, int n);

/// Legendre polynomial P_{k,n}(t) normalized with P_{k,n}(1) = 1, family
/// generated by (1 - 2tr + r^2)^{-(n-2)/2}; P_{k,2} is the Chebyshev case
/// cos(k arccos t).  Three-term recurrence
///   (k + n - 2) P_{k+1,n} = (2k + n - 2) t P_{k,n} - k P_{k-1,n}.
/// Requires |t| <= 1 + 1e-12; t is clamped to [-1, 1].
double legendre_eval(int k, int n, double t);

/// Partial sum sum_{k<=K} ((n-2)/(2k+n-2)) N(k,n) P_{k,n}(t) r^k of the
/// generating series (n >= 3).
double gf_partial_sum(double t, double r, int n, int K);

/// Homogenized Legendre polynomial Q_{k,n}(s, q) = sum_j a_j s^{k-2j} q^j
/// with Q(t, 1) = P_{k,n}(t) and Q(L s, L^2 q) = L^k Q(s, q).  Instances are
/// cached per (k, n) behind a synchronized memo table and are immutable.
class HomogenizedLegendre {
 public:
  static std::shared_ptr<const HomogenizedLegendre> get(int k, int n);

  int degree() const { return k_; }
  int family() const { return n_; }
  const std::vector<double>& coefficients() const { return a_; }

  cplx eval(cplx s, cplx q) const;
  cplx eval_ds(cplx s, cplx q) const;
  cplx eval_dq(cplx s, cplx q) const;

 private:
  HomogenizedLegendre(int k, int n, std::vector<double> a)
      : k_(k), n_(n), a_(std::move(a)) {}
  int k_;
  int n_;
  std::vector<double> a_;  // a_[j] multiplies s^{k-2j} q^j
};

/// Dense coefficient vector of P_{k,n} in t (index = power of t).
std::vector<double> legendre_coefficients(int k, int n);

/// Derivative identity P'_{k,n+2}(t) = (k (k + n) / (n + 1)) P_{k-1,n+4}(t):
/// returns {lhs, rhs} evaluated independently.
std::pair<double, double> legendre_derivative_check(int k, int n, double t);

/// Funk-Hecke coefficient: the scalar a with
///   int_{S^{n-1}} P_{k,n+2}(<w, u>) S(w) dmu(w) = a S(u)
/// for every spherical harmonic S of degree kprime (probability measure).
/// Computed by 1-D Gauss quadrature with quad1d nodes against the weight
/// (1 - t^2)^{(n-3)/2} (Gauss-Chebyshev for n = 2).  Exactly 0 when k and
/// kprime have different parity.
double funk_hecke_coeff(int k, int kprime, int n, int quad1d);

}  // namespace monolie

#endif  // MONOLIE_LEGENDRE_HPP

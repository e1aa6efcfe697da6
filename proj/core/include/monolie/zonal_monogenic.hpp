// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_ZONAL_MONOGENIC_HPP
#define MONOLIE_ZONAL_MONOGENIC_HPP

#include <vector>

#include "monolie/multivector.hpp"
#include "monolie/poly.hpp"

namespace monolie {

/// Zonal polynomial Q_{k,family}(<omega, x>, x . x) with pole omega in
/// S^{n-1}, as a scalar polynomial in the spatial variables x_1 .. x_n.
/// Harmonic for the n-variable Laplacian exactly when family == n.
PolyMultivector zonal_polynomial(int k, int family, int n,
                                 const std::vector<double>& omega);

/// The kernel-series zonal Q_{k,n+2}(<omega, x>, x . x): the restriction of
/// W_{k,n}(omega; .) to x_0 = 0 (not harmonic in R^n for k >= 2).
PolyMultivector w_restriction_polynomial(int k, int n,
                                         const std::vector<double>& omega);

/// W_{k,n}(omega; zeta): the unique left monogenic polynomial on R^{n+1}
/// restricting to F_{k,n}(omega; .) e_0 at zeta_0 = 0, evaluated at a
/// complex paravector.  Closed form built from iterated Laplacian layers
/// g_0 = Q_{k,n+2}, g_{i+1} = -Lap g_i in the variables s = <omega, zeta>,
/// q = zeta . zeta:
///   W = sum_i zeta_0^{2i}/(2i)! g_i e_0
///     - sum_i zeta_0^{2i+1}/(2i+1)! (ds g_i . omega + 2 dq g_i . zeta).
Multivector w_eval(int k, int n, const std::vector<double>& omega,
                   const Paravector& zeta);

/// W_{k,n}(omega; .) as an explicit polynomial in x_0 .. x_n, assembled
/// from the same layer coefficients as w_eval (not via the extension
/// operator, so the two can be cross-checked).
PolyMultivector w_polynomial(int k, int n, const std::vector<double>& omega);

/// Degree bound 1 + k + 2k(k+n)/(n+1) for sup |W_{k,n}| on the real unit
/// sphere S^n.
double w_bound(int k, int n);

}  // namespace monolie

#endif  // MONOLIE_ZONAL_MONOGENIC_HPP

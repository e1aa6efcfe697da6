// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_CAUCHY_HPP
#define MONOLIE_CAUCHY_HPP

#include <functional>

#include "monolie/multivector.hpp"
#include "monolie/quadrature.hpp"

namespace monolie {

/// Surface area sigma_n of the unit sphere S^n in R^{n+1}:
/// 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double sigma_n(int n);

/// Fundamental solution E(x) = (1/sigma_n) conj(x) / |x|^{n+1} of the Dirac
/// operator on R^{n+1}; x must be a real nonzero paravector.
Paravector fundamental_e(const Paravector& x);

/// Cauchy kernel at a complex paravector: (1/sigma_n) conj(omega - zeta)
/// / |omega - zeta|_C^{n+1} with the principal branch.  domain_flag marks
/// the branch set: (omega - zeta).(omega - zeta) in (-inf, 0] for n even,
/// = 0 for n odd; the value is 0 there when the power is singular.
struct KernelValue {
  Paravector value;
  bool domain_flag;
};
KernelValue g_complex(const Paravector& omega, const Paravector& zeta);

/// Left monogenic function sampled on a sphere.
using MonogenicEvaluator = std::function<Multivector(const Paravector&)>;

/// Cauchy integral sum_i w_i G(omega_i, zeta) n(omega_i) f(omega_i) over a
/// Surface-measure quadrature on r S^n (outward unit normal n = omega / r).
/// Node order is fixed and accumulation is compensated, so the result does
/// not depend on the thread count.
/// Throws when a node lies on the kernel branch set for this zeta.
Multivector cauchy_transform(const MonogenicEvaluator& f,
                             const SphereQuadrature& quad,
                             const Paravector& zeta);

}  // namespace monolie

#endif  // MONOLIE_CAUCHY_HPP

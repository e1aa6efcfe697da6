// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_LIE_SPHERE_HPP
#define MONOLIE_LIE_SPHERE_HPP

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "monolie/multivector.hpp"
#include "monolie/poly.hpp"

namespace monolie {

/// Point e^{i theta} omega of the Lie sphere (theta in [0, pi), omega a
/// unit vector in R^n, with e^{i theta} omega ~ e^{i(theta+pi)} (-omega)).
struct LieSpherePoint {
  double theta = 0.0;
  std::vector<double> omega;
};

/// Boundary trace sampler: f(e^{i phi} tau) for phi in [0, 2 pi) and unit
/// tau in R^n.
using TraceEvaluator =
    std::function<cplx(double phi, const std::vector<double>& tau)>;

/// Harmonic components of a holomorphic function on the Lie ball, indexed
/// by (m, k) with k <= m, k == m mod 2.  Each entry is a harmonic
/// homogeneous polynomial of degree k in x_1 .. x_n (scalar coefficients).
struct LieDecomposition {
  int n = 0;
  int max_degree = 0;
  std::map<std::pair<int, int>, PolyMultivector> entries;
};

/// Trace sampler of a scalar polynomial in x_1 .. x_n.
TraceEvaluator polynomial_trace(const PolyMultivector& f);

/// Harmonic projection: pi^{-1} N(k,n) int e^{-im phi}
/// Q_{k,n}(<tau, z>, z.z) f(e^{i phi} tau) dphi dmu(tau), returned as the
/// degree-k harmonic polynomial of the (m,k) component.  theta_count nodes
/// on the full circle (exact for trigonometric degree < theta_count);
/// sphere_level controls the S^{n-1} probability rule.
PolyMultivector project_smk(const TraceEvaluator& f, int m, int k, int n,
                            int theta_count, int sphere_level);

/// All components with m <= degree_bound of a scalar polynomial.
/// Components that vanish numerically (below 1e-12) are dropped.
LieDecomposition decompose(const PolyMultivector& f, int degree_bound);

/// sum (z.z)^{(m-k)/2} S_{m,k}(z) over the stored components; z must lie in
/// the Lie ball of C^n.
cplx reconstruct(const LieDecomposition& dec, const std::vector<cplx>& z);

/// Kernel |omega - e^{-i theta} z|_C^{-n}; domain_flag marks the branch
/// set of the complex power (value 0 when singular).
struct HuaValue {
  cplx value;
  bool domain_flag;
};
HuaValue hua_kernel(const LieSpherePoint& pt, const std::vector<cplx>& z);

/// Partial sum sum_{k<=K} (n/(2k+n)) N(k,n+2) e^{-ik theta}
/// Q_{k,n+2}(<omega, z>, z.z) of the kernel expansion.
cplx hua_kernel_series(const LieSpherePoint& pt, const std::vector<cplx>& z,
                       int K);

/// Monogenic extension of the kernel: the scalar zonal factor replaced by
/// W_{k,n}(omega; zeta), mapping into the Clifford algebra.
Multivector extended_kernel_series(const LieSpherePoint& pt,
                                   const Paravector& zeta, int K);

/// Per-(m,k) pairing constants, determined by matching the kernel pairing
/// against the monogenic extension of explicit polynomials at real points.
/// All constants are expected to equal 1 up to quadrature error; the
/// computed values are kept and reported.
struct PairingCalibration {
  std::map<std::pair<int, int>, cplx> c;
};
PairingCalibration pairing_calibration(int n, int max_degree, unsigned seed);

/// Monogenic extension of the function with the given components: the
/// finite kernel pairing sum_{(m,k), m<=K} c_{m,k} (n/(2m+n)) N(m,n+2)
/// int W_{m,n}(tau; zeta) S_{m,k}(tau) dmu(tau), evaluated by an exact
/// sphere rule.  zeta is a complex paravector in the Lie ball of C^{n+1};
/// calibration is optional (constants default to 1).
Multivector map_w(const LieDecomposition& dec, const Paravector& zeta, int K,
                  const PairingCalibration* cal = nullptr);

/// map_w at a real point of the unit ball of R^{n+1}.
Multivector map_u(const LieDecomposition& dec, const Paravector& x, int K,
                  const PairingCalibration* cal = nullptr);

}  // namespace monolie

#endif  // MONOLIE_LIE_SPHERE_HPP

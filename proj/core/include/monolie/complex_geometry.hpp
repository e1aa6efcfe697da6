// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_COMPLEX_GEOMETRY_HPP
#define MONOLIE_COMPLEX_GEOMETRY_HPP

#include <span>
#include <vector>

#include "monolie/multivector.hpp"

namespace monolie {

/// Bilinear pairing sum_i a_i * b_i (no conjugation).
cplx bilinear(std::span<const cplx> a, std::span<const cplx> b);

/// Result of the complexified modulus |z|_C = principal sqrt of sum z_i^2.
/// The principal branch has nonnegative real part; at a negative real
/// argument the value sits on the branch cut and `on_cut` is set (the
/// nonnegative-imaginary root is reported for diagnostics).
struct AbsC {
  cplx value;
  bool on_cut;
};

AbsC abs_c(std::span<const cplx> z);
AbsC abs_c(const Paravector& z);
/// Principal square root applied to an already-computed bilinear square.
AbsC abs_c_from_square(cplx w);

/// Squared Lie norm |z|^2 + sqrt(|z|^4 - ||z|_C^2|^2); the radicand is
/// mathematically nonnegative and is clamped at 0 against rounding.
double lie_norm_sq(std::span<const cplx> z);
double lie_norm(std::span<const cplx> z);
double lie_norm_sq(const Paravector& z);
double lie_norm(const Paravector& z);

/// Open Lie ball membership: lie_norm(z) < 1.
bool in_lie_ball(std::span<const cplx> z);
bool in_lie_ball(const Paravector& z);

enum class GammaKind { Point, Sphere, Ball };

/// Real singular set gamma_C(zeta) = { x real : |x - zeta|_C^2 = 0 } for an
/// odd number of generators, resp. in (-inf, 0] for an even number.  It is
/// the point xi when eta = 0, and otherwise a sphere (n odd) or solid ball
/// (n even) of radius |eta| centred at xi inside the hyperplane orthogonal
/// to eta, with xi = Re zeta and eta = Im zeta.
struct GammaDescriptor {
  GammaKind kind;
  std::vector<double> center;  // xi
  double radius;               // |eta|
  std::vector<double> normal;  // eta / |eta|; empty when radius == 0
};

GammaDescriptor gamma_c(const Paravector& zeta);

/// Largest Euclidean distance from the origin to gamma_C(zeta):
/// sqrt(|xi|^2 cos^2 a + (|xi| sin a + |eta|)^2) with a the angle between xi
/// and eta (a = pi/2 when either vanishes).
double gamma_max_dist(const Paravector& zeta);

/// Membership in kappa(B_r(0)): gamma_C(zeta) contained in the open real
/// ball of radius r, i.e. gamma_max_dist(zeta) < r.
bool kappa_ball_member(const Paravector& zeta, double r);

}  // namespace monolie

#endif  // MONOLIE_COMPLEX_GEOMETRY_HPP

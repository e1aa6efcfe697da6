// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_QUADRATURE_HPP
#define MONOLIE_QUADRATURE_HPP

#include <vector>

namespace monolie {

/// Gauss-Legendre rule on [-1, 1]: m nodes/weights, exact for polynomials of
/// degree <= 2m - 1.  Nodes ascend; Newton iteration on P_m from theta-space
/// Chebyshev initial guesses.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int m);

/// Whether the surface weights sum to the area of the sphere (Surface) or
/// to 1 (Probability).
enum class SphereMeasure { Surface, Probability };

/// Quadrature on the sphere S^{n-1} of radius r in R^n, n in {2, 3, 4}.
/// Nodes are stored as unit vectors; weights absorb the radius scaling
/// r^{n-1} (Surface) or none (Probability).  Node sets are antipodally
/// symmetric and integrate spherical polynomials of degree
/// <= exact_degree exactly.
struct SphereQuadrature {
  int n = 0;
  double radius = 1.0;
  SphereMeasure measure = SphereMeasure::Surface;
  int exact_degree = 0;
  std::vector<std::vector<double>> nodes;  // unit vectors, size n each
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  /// Node scaled by the radius.
  std::vector<double> point(std::size_t i) const;
};

/// Builds the product rule of the given level: S^1 uses 2*level equispaced
/// nodes; S^2 uses level Gauss-Legendre polar nodes x 2*level azimuthal;
/// S^3 adds a Gauss-Legendre psi layer with the sin^2 psi factor.
SphereQuadrature build_sphere_quadrature(int n, int level, double r,
                                         SphereMeasure measure);

/// Surface area of the unit sphere S^{n-1} in R^n.
double sphere_area(int n);

}  // namespace monolie

#endif  // MONOLIE_QUADRATURE_HPP

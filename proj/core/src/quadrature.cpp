// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace monolie {

GaussLegendre gauss_legendre(int m) {
  if (m < 1) throw std::domain_error("gauss-legendre needs >= 1 node");
  GaussLegendre out;
  out.nodes.resize(m);
  out.weights.resize(m);
  // Symmetric rule: solve on the nonnegative half, mirror to the rest.
  for (int i = 0; i < (m + 1) / 2; ++i) {
    // Initial guess (descending in x), refined by Newton on P_m.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int j = 2; j <= m; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // One recomputation of dp at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int j = 2; j <= m; ++j) {
      double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    out.nodes[i] = -x;
    out.nodes[m - 1 - i] = x;
    out.weights[i] = w;
    out.weights[m - 1 - i] = w;
  }
  if (m % 2 == 1) out.nodes[m / 2] = 0.0;  // exact symmetry at the center
  return out;
}

double sphere_area(int n) {
  if (n < 1) throw std::domain_error("sphere_area requires n >= 1");
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

std::vector<double> SphereQuadrature::point(std::size_t i) const {
  std::vector<double> p = nodes[i];
  for (double& c : p) c *= radius;
  return p;
}

SphereQuadrature build_sphere_quadrature(int n, int level, double r,
                                         SphereMeasure measure) {
  if (n < 2 || n > 4) throw std::domain_error("sphere quadrature: n in {2,3,4}");
  if (level < 1) throw std::domain_error("sphere quadrature: level >= 1");
  if (r <= 0.0) throw std::domain_error("sphere quadrature: radius > 0");
  SphereQuadrature q;
  q.n = n;
  q.radius = r;
  q.measure = measure;
  const double pi = std::numbers::pi;
  if (n == 2) {
    int L = 2 * level;
    q.exact_degree = L - 1;
    double w = 2.0 * pi / L;
    for (int i = 0; i < L; ++i) {
      double t = 2.0 * pi * i / L;
      q.nodes.push_back({std::cos(t), std::sin(t)});
      q.weights.push_back(w);
    }
  } else if (n == 3) {
    GaussLegendre gl = gauss_legendre(level);
    int A = 2 * level;
    q.exact_degree = std::min(2 * level - 1, A - 1);
    for (int i = 0; i < level; ++i) {
      double c = gl.nodes[i];
      double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      double w = gl.weights[i] * (2.0 * pi / A);
      for (int j = 0; j < A; ++j) {
        double t = 2.0 * pi * j / A;
        q.nodes.push_back({c, s * std::cos(t), s * std::sin(t)});
        q.weights.push_back(w);
      }
    }
  } else {
    // psi layer with weight sin^2 psi: Gauss-Chebyshev (second kind) nodes
    // t_i = cos(i pi / (m+1)), w_i = (pi / (m+1)) sin^2(i pi / (m+1)),
    // exact against sqrt(1 - t^2) for polynomial degree <= 2m - 1.
    int m = level;
    SphereQuadrature inner =
        build_sphere_quadrature(3, level, 1.0, SphereMeasure::Surface);
    q.exact_degree = std::min(2 * m - 1, inner.exact_degree);
    for (int i = 1; i <= m; ++i) {
      double ang = i * pi / (m + 1);
      double c = std::cos(ang);
      double s = std::sin(ang);
      double w = (pi / (m + 1)) * s * s;
      for (std::size_t b = 0; b < inner.size(); ++b) {
        const auto& y = inner.nodes[b];
        q.nodes.push_back({c, s * y[0], s * y[1], s * y[2]});
        q.weights.push_back(w * inner.weights[b]);
      }
    }
  }
  if (measure == SphereMeasure::Surface) {
    double scale = std::pow(r, n - 1);
    for (double& w : q.weights) w *= scale;
  } else {
    double scale = 1.0 / sphere_area(n);
    for (double& w : q.weights) w *= scale;
  }
  return q;
}

}  // namespace monolie

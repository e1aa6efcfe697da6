// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/complex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace monolie {

namespace {

cplx bilinear_square(std::span<const cplx> z) {
  cplx s(0.0, 0.0);
  for (const auto& c : z) s += c * c;
  return s;
}

double hermitian_norm_sq(std::span<const cplx> z) {
  double s = 0.0;
  for (const auto& c : z) s += std::norm(c);
  return s;
}

}  // namespace

cplx bilinear(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw std::invalid_argument("bilinear: length mismatch");
  cplx s(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

AbsC abs_c_from_square(cplx w) {
  if (w == cplx(0.0, 0.0)) return {cplx(0.0, 0.0), false};
  if (w.imag() == 0.0 && w.real() < 0.0) {
    // On the cut: report the nonnegative-imaginary root.
    return {cplx(0.0, std::sqrt(-w.real())), true};
  }
  return {std::sqrt(w), false};
}

AbsC abs_c(std::span<const cplx> z) { return abs_c_from_square(bilinear_square(z)); }

AbsC abs_c(const Paravector& z) { return abs_c(std::span<const cplx>(z.components())); }

double lie_norm_sq(std::span<const cplx> z) {
  const double h = hermitian_norm_sq(z);
  const double b = std::abs(bilinear_square(z));
  const double radicand = std::max(0.0, h * h - b * b);
  return h + std::sqrt(radicand);
}

double lie_norm(std::span<const cplx> z) { return std::sqrt(lie_norm_sq(z)); }

double lie_norm_sq(const Paravector& z) { return lie_norm_sq(std::span<const cplx>(z.components())); }
double lie_norm(const Paravector& z) { return lie_norm(std::span<const cplx>(z.components())); }

bool in_lie_ball(std::span<const cplx> z) { return lie_norm_sq(z) < 1.0; }
bool in_lie_ball(const Paravector& z) { return in_lie_ball(std::span<const cplx>(z.components())); }

GammaDescriptor gamma_c(const Paravector& zeta) {
  GammaDescriptor d;
  d.center = zeta.real_part();
  const std::vector<double> eta = zeta.imag_part();
  double r2 = 0.0;
  for (double e : eta) r2 += e * e;
  d.radius = std::sqrt(r2);
  if (d.radius == 0.0) {
    d.kind = GammaKind::Point;
    return d;
  }
  d.normal.resize(eta.size());
  for (std::size_t i = 0; i < eta.size(); ++i) d.normal[i] = eta[i] / d.radius;
  // Parity of the generator count decides sphere vs solid ball.
  d.kind = (zeta.generators() % 2 == 1) ? GammaKind::Sphere : GammaKind::Ball;
  return d;
}

double gamma_max_dist(const Paravector& zeta) {
  const std::vector<double> xi = zeta.real_part();
  const std::vector<double> eta = zeta.imag_part();
  double nxi2 = 0.0, neta2 = 0.0, dot = 0.0;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    nxi2 += xi[i] * xi[i];
    neta2 += eta[i] * eta[i];
    dot += xi[i] * eta[i];
  }
  const double nxi = std::sqrt(nxi2);
  const double neta = std::sqrt(neta2);
  if (neta == 0.0) return nxi;
  if (nxi == 0.0) return neta;
  const double c = std::clamp(dot / (nxi * neta), -1.0, 1.0);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double a = nxi * c;
  const double b = nxi * s + neta;
  return std::sqrt(a * a + b * b);
}

bool kappa_ball_member(const Paravector& zeta, double r) {
  return gamma_max_dist(zeta) < r;
}

}  // namespace monolie

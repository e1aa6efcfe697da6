// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/lie_sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "monolie/complex_geometry.hpp"
#include "monolie/legendre.hpp"
#include "monolie/quadrature.hpp"
#include "monolie/rng.hpp"
#include "monolie/zonal_monogenic.hpp"

namespace monolie {

namespace {

void check_point(const LieSpherePoint& pt, int n) {
  if (static_cast<int>(pt.omega.size()) != n)
    throw std::invalid_argument("lie sphere point dimension mismatch");
  double s = 0.0;
  for (double w : pt.omega) s += w * w;
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("lie sphere point must have a unit vector");
}

void check_lie_ops_n(int n) {
  if (n < 2) throw std::domain_error("lie sphere analysis requires n >= 2");
}

std::vector<cplx> to_complex(const std::vector<double>& v) {
  return std::vector<cplx>(v.begin(), v.end());
}

}  // namespace

TraceEvaluator polynomial_trace(const PolyMultivector& f) {
  return [f](double phi, const std::vector<double>& tau) {
    cplx rot = std::polar(1.0, phi);
    std::vector<cplx> z(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) z[i] = rot * tau[i];
    return f.eval_spatial(z)[0];
  };
}

namespace {

// Shared core: assembles N(k,n) sum_b w_b c_b Q_{k,n}(<tau_b, z>, z.z) from
// the per-node theta-mode coefficients c_b.
PolyMultivector smk_assemble(const std::vector<cplx>& cb,
                             const SphereQuadrature& sq, int k, int n) {
  PolyMultivector out(n);
  double dim = static_cast<double>(dim_harmonics(k, n));
  for (std::size_t b = 0; b < sq.size(); ++b) {
    cplx scale = cb[b] * sq.weights[b] * dim;
    if (std::abs(scale) == 0.0) continue;
    PolyMultivector zb = zonal_polynomial(k, n, n, sq.nodes[b]);
    out += scale * zb;
  }
  out.cleanup(1e-14);
  return out;
}

// Mode coefficients c_b = (1/L) sum_i e^{-im phi_i} vals[i][b] on the full
// circle; covers the Lie sphere twice, which the parity of valid (m,k)
// indices makes harmless (the two copies contribute equally).
std::vector<cplx> mode_coefficients(const std::vector<std::vector<cplx>>& vals,
                                    std::size_t nodes, int m, int L) {
  std::vector<cplx> cb(nodes, cplx(0.0, 0.0));
  for (int i = 0; i < L; ++i) {
    double phi = 2.0 * std::numbers::pi * i / L;
    cplx e = std::polar(1.0, -m * phi);
    for (std::size_t b = 0; b < nodes; ++b) cb[b] += e * vals[i][b];
  }
  for (auto& c : cb) c /= static_cast<double>(L);
  return cb;
}

}  // namespace

PolyMultivector project_smk(const TraceEvaluator& f, int m, int k, int n,
                            int theta_count, int sphere_level) {
  check_lie_ops_n(n);
  if (k > m || ((m - k) % 2) != 0 || k < 0)
    throw std::invalid_argument("projection index must satisfy k <= m, k == m mod 2");
  SphereQuadrature sq =
      build_sphere_quadrature(n, sphere_level, 1.0, SphereMeasure::Probability);
  std::vector<std::vector<cplx>> vals(
      theta_count, std::vector<cplx>(sq.size()));
  for (int i = 0; i < theta_count; ++i) {
    double phi = 2.0 * std::numbers::pi * i / theta_count;
    for (std::size_t b = 0; b < sq.size(); ++b)
      vals[i][b] = f(phi, sq.nodes[b]);
  }
  return smk_assemble(mode_coefficients(vals, sq.size(), m, theta_count), sq,
                      k, n);
}

LieDecomposition decompose(const PolyMultivector& f, int degree_bound) {
  int n = f.generators();
  check_lie_ops_n(n);
  if (degree_bound < f.total_degree())
    throw std::invalid_argument("degree bound below polynomial degree");
  LieDecomposition dec;
  dec.n = n;
  dec.max_degree = degree_bound;
  int L = 4 * degree_bound + 4;
  SphereQuadrature sq = build_sphere_quadrature(n, degree_bound + 1, 1.0,
                                                SphereMeasure::Probability);
  TraceEvaluator trace = polynomial_trace(f);
  std::vector<std::vector<cplx>> vals(L, std::vector<cplx>(sq.size()));
  for (int i = 0; i < L; ++i) {
    double phi = 2.0 * std::numbers::pi * i / L;
    for (std::size_t b = 0; b < sq.size(); ++b)
      vals[i][b] = trace(phi, sq.nodes[b]);
  }
  for (int m = 0; m <= degree_bound; ++m) {
    std::vector<cplx> cb = mode_coefficients(vals, sq.size(), m, L);
    for (int k = m % 2; k <= m; k += 2) {
      PolyMultivector s = smk_assemble(cb, sq, k, n);
      s.cleanup(1e-12);
      if (!s.is_zero()) dec.entries.emplace(std::make_pair(m, k), s);
    }
  }
  return dec;
}

cplx reconstruct(const LieDecomposition& dec, const std::vector<cplx>& z) {
  if (static_cast<int>(z.size()) != dec.n)
    throw std::invalid_argument("point dimension mismatch");
  if (!in_lie_ball(z))
    throw std::domain_error("reconstruction point outside the Lie ball");
  cplx q(0.0, 0.0);
  for (const auto& c : z) q += c * c;
  cplx sum(0.0, 0.0);
  for (const auto& [mk, poly] : dec.entries) {
    cplx qp(1.0, 0.0);
    for (int i = 0; i < (mk.first - mk.second) / 2; ++i) qp *= q;
    sum += qp * poly.eval_spatial(z)[0];
  }
  return sum;
}

HuaValue hua_kernel(const LieSpherePoint& pt, const std::vector<cplx>& z) {
  int n = static_cast<int>(pt.omega.size());
  check_lie_ops_n(n);
  check_point(pt, n);
  if (static_cast<int>(z.size()) != n)
    throw std::invalid_argument("point dimension mismatch");
  cplx rot = std::polar(1.0, -pt.theta);
  cplx w(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    cplx u = pt.omega[j] - rot * z[j];
    w += u * u;
  }
  HuaValue out{cplx(0.0, 0.0), false};
  if (n % 2 == 0) {
    out.domain_flag = (w == cplx(0.0, 0.0));
    if (out.domain_flag) return out;
    cplx denom(1.0, 0.0);
    for (int i = 0; i < n / 2; ++i) denom *= w;
    out.value = cplx(1.0, 0.0) / denom;
  } else {
    AbsC s = abs_c_from_square(w);
    out.domain_flag = s.on_cut || s.value == cplx(0.0, 0.0);
    if (s.value == cplx(0.0, 0.0)) return out;
    cplx denom(1.0, 0.0);
    for (int i = 0; i < n; ++i) denom *= s.value;
    out.value = cplx(1.0, 0.0) / denom;
  }
  return out;
}

cplx hua_kernel_series(const LieSpherePoint& pt, const std::vector<cplx>& z,
                       int K) {
  int n = static_cast<int>(pt.omega.size());
  check_lie_ops_n(n);
  check_point(pt, n);
  cplx s(0.0, 0.0);
  cplx q(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    s += pt.omega[j] * z[j];
    q += z[j] * z[j];
  }
  cplx sum(0.0, 0.0);
  for (int k = 0; k <= K; ++k) {
    double coef = static_cast<double>(n) / (2 * k + n) *
                  static_cast<double>(dim_harmonics(k, n + 2));
    cplx mode = std::polar(1.0, -k * pt.theta);
    sum += coef * mode * HomogenizedLegendre::get(k, n + 2)->eval(s, q);
  }
  return sum;
}

Multivector extended_kernel_series(const LieSpherePoint& pt,
                                   const Paravector& zeta, int K) {
  int n = zeta.generators();
  check_lie_ops_n(n);
  check_point(pt, n);
  Multivector sum(n);
  for (int k = 0; k <= K; ++k) {
    double coef = static_cast<double>(n) / (2 * k + n) *
                  static_cast<double>(dim_harmonics(k, n + 2));
    cplx mode = std::polar(1.0, -k * pt.theta);
    Multivector w = w_eval(k, n, pt.omega, zeta);
    w *= coef * mode;
    sum += w;
  }
  return sum;
}

namespace {

cplx calibration_constant(const PairingCalibration* cal, int m, int k) {
  if (cal == nullptr) return cplx(1.0, 0.0);
  auto it = cal->c.find(std::make_pair(m, k));
  return it == cal->c.end() ? cplx(1.0, 0.0) : it->second;
}

}  // namespace

Multivector map_w(const LieDecomposition& dec, const Paravector& zeta, int K,
                  const PairingCalibration* cal) {
  int n = dec.n;
  check_lie_ops_n(n);
  if (zeta.generators() != n)
    throw std::invalid_argument("paravector generator count mismatch");
  Multivector out(n);
  for (const auto& [mk, poly] : dec.entries) {
    int m = mk.first;
    if (m > K) continue;
    SphereQuadrature sq = build_sphere_quadrature(
        n, m + 1, 1.0, SphereMeasure::Probability);
    Multivector acc(n);
    for (std::size_t b = 0; b < sq.size(); ++b) {
      Multivector w = w_eval(m, n, sq.nodes[b], zeta);
      cplx sval = poly.eval_spatial(to_complex(sq.nodes[b]))[0];
      w *= sval * sq.weights[b];
      acc += w;
    }
    cplx coef = calibration_constant(cal, m, mk.second) *
                (static_cast<double>(n) / (2 * m + n)) *
                static_cast<double>(dim_harmonics(m, n + 2));
    acc *= coef;
    out += acc;
  }
  return out;
}

Multivector map_u(const LieDecomposition& dec, const Paravector& x, int K,
                  const PairingCalibration* cal) {
  return map_w(dec, x, K, cal);
}

PairingCalibration pairing_calibration(int n, int max_degree, unsigned seed) {
  check_lie_ops_n(n);
  PairingCalibration out;
  Rng rng(seed);
  std::vector<double> pole(static_cast<std::size_t>(n), 0.0);
  pole[0] = 1.0;
  // Shared sample points in 0.35 B^{n+1} (real).
  std::vector<Paravector> pts;
  for (int i = 0; i < 8; ++i) {
    Paravector x(n);
    for (int d = 0; d <= n; ++d) x[d] = cplx(0.35 * rng.symmetric(), 0.0);
    pts.push_back(x);
  }
  PolyMultivector q(n);
  for (int j = 1; j <= n; ++j) {
    PolyMultivector xj = PolyMultivector::variable(n, j);
    q += xj * xj;
  }
  for (int m = 0; m <= max_degree; ++m) {
    for (int k = m % 2; k <= m; k += 2) {
      PolyMultivector h = zonal_polynomial(k, n, n, pole);
      PolyMultivector f = h;
      for (int i = 0; i < (m - k) / 2; ++i) f = f * q;
      LieDecomposition dec;
      dec.n = n;
      dec.max_degree = m;
      dec.entries.emplace(std::make_pair(m, k), h);
      PolyMultivector oracle = ck_extension(f);
      cplx num(0.0, 0.0);
      cplx den(0.0, 0.0);
      for (const auto& x : pts) {
        Multivector o = oracle.eval(x);
        Multivector r = map_w(dec, x, m, nullptr);
        num += inner(o, r);
        den += inner(r, r);
      }
      cplx c = std::abs(den) < 1e-30 ? cplx(1.0, 0.0) : num / den;
      out.c.emplace(std::make_pair(m, k), c);
    }
  }
  return out;
}

}  // namespace monolie

// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/zonal_monogenic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "monolie/legendre.hpp"

namespace monolie {

namespace {

void check_omega(int n, const std::vector<double>& omega) {
  if (static_cast<int>(omega.size()) != n)
    throw std::invalid_argument("pole must have n components");
  double s = 0.0;
  for (double w : omega) s += w * w;
  if (std::abs(s - 1.0) > 1e-9)
    throw std::invalid_argument("pole must be a unit vector");
}

// Coefficient layers of the iterated negated Laplacian of g_0(s, q) with
// s = <omega, x>, q = x . x, |omega| = 1 in R^n:
//   Lap g = g_ss + 4 s g_sq + 4 q g_qq + 2 n g_q.
// Layer i holds g_i of degree d = k - 2i as coefficients of s^{d-2j} q^j.
struct Layers {
  int k;
  std::vector<std::vector<double>> g;
};

const Layers& layers_for(int k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Layers> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Layers L;
  L.k = k;
  L.g.push_back(HomogenizedLegendre::get(k, n + 2)->coefficients());
  for (int d = k; d >= 2; d -= 2) {
    const std::vector<double>& g = L.g.back();
    std::vector<double> next(static_cast<std::size_t>((d - 2) / 2) + 1, 0.0);
    for (std::size_t j = 0; j < next.size(); ++j) {
      double v = g[j] * (d - 2 * static_cast<int>(j)) *
                 (d - 2 * static_cast<int>(j) - 1);
      int jj = static_cast<int>(j);
      v += g[j + 1] * (jj + 1) *
           (4.0 * (d - 2 * jj - 2) + 4.0 * jj + 2.0 * n);
      next[j] = -v;
    }
    L.g.push_back(std::move(next));
  }
  return cache.emplace(key, std::move(L)).first->second;
}

// sum_j a_j s^{d-2j} q^j and its s- and q-derivatives.
struct LayerValue {
  cplx val;
  cplx ds;
  cplx dq;
};

LayerValue layer_eval(const std::vector<double>& a, int d, cplx s, cplx q) {
  std::vector<cplx> sp(static_cast<std::size_t>(d) + 1);
  sp[0] = cplx(1.0, 0.0);
  for (int e = 1; e <= d; ++e) sp[e] = sp[e - 1] * s;
  LayerValue out{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
  cplx qp(1.0, 0.0);
  cplx qprev(0.0, 0.0);
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    int e = d - 2 * j;
    out.val += a[j] * sp[e] * qp;
    if (e > 0) out.ds += a[j] * static_cast<double>(e) * sp[e - 1] * qp;
    if (j > 0) out.dq += a[j] * static_cast<double>(j) * sp[e] * qprev;
    qprev = qp;
    qp *= q;
  }
  return out;
}

}  // namespace

PolyMultivector zonal_polynomial(int k, int family, int n,
                                 const std::vector<double>& omega) {
  check_omega(n, omega);
  auto Q = HomogenizedLegendre::get(k, family);
  PolyMultivector s(n);
  PolyMultivector q(n);
  for (int j = 1; j <= n; ++j) {
    PolyMultivector xj = PolyMultivector::variable(n, j);
    s += cplx(omega[j - 1], 0.0) * xj;
    q += xj * xj;
  }
  PolyMultivector out(n);
  std::vector<PolyMultivector> sp;
  sp.push_back(PolyMultivector::constant(n, 1.0));
  for (int e = 1; e <= k; ++e) sp.push_back(sp.back() * s);
  PolyMultivector qp = PolyMultivector::constant(n, 1.0);
  const std::vector<double>& a = Q->coefficients();
  for (int j = 0; j < static_cast<int>(a.size()); ++j) {
    out += cplx(a[j], 0.0) * (sp[k - 2 * j] * qp);
    qp = qp * q;
  }
  out.cleanup(0.0);
  return out;
}

PolyMultivector w_restriction_polynomial(int k, int n,
                                         const std::vector<double>& omega) {
  return zonal_polynomial(k, n + 2, n, omega);
}

Multivector w_eval(int k, int n, const std::vector<double>& omega,
                   const Paravector& zeta) {
  check_omega(n, omega);
  if (zeta.generators() != n)
    throw std::invalid_argument("paravector generator count mismatch");
  const Layers& L = layers_for(k, n);
  cplx z0 = zeta[0];
  cplx s(0.0, 0.0);
  cplx q(0.0, 0.0);
  for (int j = 1; j <= n; ++j) {
    s += omega[j - 1] * zeta[j];
    q += zeta[j] * zeta[j];
  }
  Multivector out(n);
  double fact = 1.0;  // (2i)! then (2i+1)! as the loop advances
  cplx zpow(1.0, 0.0);
  for (std::size_t i = 0; i < L.g.size(); ++i) {
    int d = k - 2 * static_cast<int>(i);
    LayerValue lv = layer_eval(L.g[i], d, s, q);
    if (i > 0) {
      fact *= (2.0 * i - 1.0) * (2.0 * i);
      zpow *= z0 * z0;
    }
    out[0] += zpow / fact * lv.val;
    if (d > 0) {
      cplx c = -(zpow * z0) / (fact * (2.0 * i + 1.0));
      for (int j = 1; j <= n; ++j)
        out[1u << (j - 1)] +=
            c * (lv.ds * omega[j - 1] + 2.0 * lv.dq * zeta[j]);
    }
  }
  return out;
}

PolyMultivector w_polynomial(int k, int n, const std::vector<double>& omega) {
  check_omega(n, omega);
  const Layers& L = layers_for(k, n);
  PolyMultivector s(n);
  PolyMultivector q(n);
  for (int j = 1; j <= n; ++j) {
    PolyMultivector xj = PolyMultivector::variable(n, j);
    s += cplx(omega[j - 1], 0.0) * xj;
    q += xj * xj;
  }
  std::vector<PolyMultivector> sp;
  sp.push_back(PolyMultivector::constant(n, 1.0));
  for (int e = 1; e <= k; ++e) sp.push_back(sp.back() * s);
  std::vector<PolyMultivector> qp;
  qp.push_back(PolyMultivector::constant(n, 1.0));
  for (int e = 1; e <= k / 2; ++e) qp.push_back(qp.back() * q);

  auto layer_poly = [&](const std::vector<double>& a, int d) {
    PolyMultivector g(n);
    for (int j = 0; j < static_cast<int>(a.size()); ++j)
      g += cplx(a[j], 0.0) * (sp[d - 2 * j] * qp[j]);
    return g;
  };
  auto layer_poly_ds = [&](const std::vector<double>& a, int d) {
    PolyMultivector g(n);
    for (int j = 0; j < static_cast<int>(a.size()); ++j) {
      int e = d - 2 * j;
      if (e > 0) g += cplx(a[j] * e, 0.0) * (sp[e - 1] * qp[j]);
    }
    return g;
  };
  auto layer_poly_dq = [&](const std::vector<double>& a, int d) {
    PolyMultivector g(n);
    for (int j = 1; j < static_cast<int>(a.size()); ++j)
      g += cplx(a[j] * j, 0.0) * (sp[d - 2 * j] * qp[j - 1]);
    return g;
  };

  PolyMultivector out(n);
  Exponent x0(static_cast<std::size_t>(n) + 1, 0);
  double fact = 1.0;
  for (std::size_t i = 0; i < L.g.size(); ++i) {
    int d = k - 2 * static_cast<int>(i);
    if (i > 0) fact *= (2.0 * i - 1.0) * (2.0 * i);
    PolyMultivector even = layer_poly(L.g[i], d) * cplx(1.0 / fact, 0.0);
    for (const auto& [e, c] : even.terms()) {
      Exponent shifted = e;
      shifted[0] += 2 * static_cast<int>(i);
      out.add_term(shifted, c);
    }
    if (d > 0) {
      double ofact = fact * (2.0 * i + 1.0);
      PolyMultivector ds = layer_poly_ds(L.g[i], d);
      PolyMultivector dq = layer_poly_dq(L.g[i], d);
      PolyMultivector vec(n);
      for (int j = 1; j <= n; ++j) {
        Multivector ej = Multivector::blade(n, 1u << (j - 1));
        PolyMultivector comp =
            cplx(omega[j - 1], 0.0) * ds +
            cplx(2.0, 0.0) * (dq * PolyMultivector::variable(n, j));
        for (const auto& [e, c] : comp.terms()) vec.add_term(e, c * ej);
      }
      vec *= cplx(-1.0 / ofact, 0.0);
      for (const auto& [e, c] : vec.terms()) {
        Exponent shifted = e;
        shifted[0] += 2 * static_cast<int>(i) + 1;
        out.add_term(shifted, c);
      }
    }
  }
  out.cleanup(0.0);
  return out;
}

double w_bound(int k, int n) {
  return 1.0 + k + 2.0 * k * (k + n) / (n + 1);
}

}  // namespace monolie

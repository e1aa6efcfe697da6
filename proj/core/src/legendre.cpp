// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/legendre.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "monolie/quadrature.hpp"

namespace monolie {

namespace {

constexpr int kMaxDegree = 256;

void check_kn(int k, int n) {
  if (n < 2) throw std::domain_error("legendre family requires n >= 2");
  if (k < 0) throw std::domain_error("legendre degree must be >= 0");
  if (k > kMaxDegree) throw std::domain_error("legendre degree too large");
}

}  // namespace

std::int64_t dim_harmonics(int k, int n) {
  check_kn(k, n);
  if (k == 0) return 1;
  if (n == 2) return 2;
  // (2k + n - 2) / (n - 2)! * prod_{j=k+1}^{k+n-3} j, exact in 128 bits.
  unsigned __int128 num = static_cast<unsigned>(2 * k + n - 2);
  for (int j = k + 1; j <= k + n - 3; ++j) {
    num *= static_cast<unsigned>(j);
    if (num > (static_cast<unsigned __int128>(1) << 120))
      throw std::overflow_error("dim_harmonics overflow");
  }
  unsigned __int128 den = 1;
  for (int j = 2; j <= n - 2; ++j) den *= static_cast<unsigned>(j);
  unsigned __int128 res = num / den;
  if (res > static_cast<unsigned __int128>(INT64_MAX))
    throw std::overflow_error("dim_harmonics overflow");
  return static_cast<std::int64_t>(res);
}

double legendre_eval(int k, int n, double t) {
  check_kn(k, n);
  if (std::abs(t) > 1.0 + 1e-12)
    throw std::domain_error("legendre argument outside [-1, 1]");
  t = std::min(1.0, std::max(-1.0, t));
  if (k == 0) return 1.0;
  double pm = 1.0;  // P_0
  double p = t;     // P_1
  for (int j = 1; j < k; ++j) {
    double next = ((2 * j + n - 2) * t * p - j * pm) / (j + n - 2);
    pm = p;
    p = next;
  }
  return p;
}

double gf_partial_sum(double t, double r, int n, int K) {
  check_kn(K, n);
  if (n < 3) throw std::domain_error("generating series requires n >= 3");
  double pm = 0.0;
  double p = 1.0;
  double rk = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    double coef = static_cast<double>(n - 2) / (2 * k + n - 2);
    sum += coef * static_cast<double>(dim_harmonics(k, n)) * p * rk;
    double next = (k == 0) ? t : ((2 * k + n - 2) * t * p - k * pm) / (k + n - 2);
    pm = p;
    p = next;
    rk *= r;
  }
  return sum;
}

std::vector<double> legendre_coefficients(int k, int n) {
  check_kn(k, n);
  std::vector<double> pm = {1.0};
  if (k == 0) return pm;
  std::vector<double> p = {0.0, 1.0};
  for (int j = 1; j < k; ++j) {
    std::vector<double> next(j + 2, 0.0);
    for (int i = 0; i <= j; ++i)
      next[i + 1] += (2 * j + n - 2) * p[i] / (j + n - 2);
    for (std::size_t i = 0; i < pm.size(); ++i)
      next[i] -= static_cast<double>(j) * pm[i] / (j + n - 2);
    pm = std::move(p);
    p = std::move(next);
  }
  return p;
}

std::shared_ptr<const HomogenizedLegendre> HomogenizedLegendre::get(int k,
                                                                    int n) {
  check_kn(k, n);
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const HomogenizedLegendre>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<double> c = legendre_coefficients(k, n);
  // a_j is the coefficient of t^{k-2j}; odd-offset coefficients vanish.
  std::vector<double> a(static_cast<std::size_t>(k / 2) + 1, 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = c[k - 2 * j];
  auto ptr = std::shared_ptr<const HomogenizedLegendre>(
      new HomogenizedLegendre(k, n, std::move(a)));
  cache.emplace(key, ptr);
  return ptr;
}

namespace {

// powers[e] = base^e for e = 0..emax.
std::vector<cplx> power_table(cplx base, int emax) {
  std::vector<cplx> p(static_cast<std::size_t>(emax) + 1);
  p[0] = cplx(1.0, 0.0);
  for (int e = 1; e <= emax; ++e) p[e] = p[e - 1] * base;
  return p;
}

}  // namespace

cplx HomogenizedLegendre::eval(cplx s, cplx q) const {
  std::vector<cplx> sp = power_table(s, k_);
  std::vector<cplx> qp = power_table(q, k_ / 2);
  cplx sum(0.0, 0.0);
  for (int j = 0; j < static_cast<int>(a_.size()); ++j)
    sum += a_[j] * sp[k_ - 2 * j] * qp[j];
  return sum;
}

cplx HomogenizedLegendre::eval_ds(cplx s, cplx q) const {
  std::vector<cplx> sp = power_table(s, k_);
  std::vector<cplx> qp = power_table(q, k_ / 2);
  cplx sum(0.0, 0.0);
  for (int j = 0; j < static_cast<int>(a_.size()); ++j) {
    int e = k_ - 2 * j;
    if (e > 0) sum += a_[j] * static_cast<double>(e) * sp[e - 1] * qp[j];
  }
  return sum;
}

cplx HomogenizedLegendre::eval_dq(cplx s, cplx q) const {
  std::vector<cplx> sp = power_table(s, k_);
  std::vector<cplx> qp = power_table(q, k_ / 2);
  cplx sum(0.0, 0.0);
  for (int j = 1; j < static_cast<int>(a_.size()); ++j)
    sum += a_[j] * static_cast<double>(j) * sp[k_ - 2 * j] * qp[j - 1];
  return sum;
}

std::pair<double, double> legendre_derivative_check(int k, int n, double t) {
  if (k < 1) throw std::domain_error("derivative identity requires k >= 1");
  auto Q = HomogenizedLegendre::get(k, n + 2);
  double lhs = Q->eval_ds(cplx(t, 0.0), cplx(1.0, 0.0)).real();
  double rhs = static_cast<double>(k) * (k + n) / (n + 1) *
               legendre_eval(k - 1, n + 4, t);
  return {lhs, rhs};
}

double funk_hecke_coeff(int k, int kprime, int n, int quad1d) {
  check_kn(k, n);
  check_kn(kprime, n);
  if (quad1d < 2) throw std::domain_error("funk-hecke needs >= 2 nodes");
  if (((k ^ kprime) & 1) != 0) return 0.0;
  if (n == 2) {
    // Gauss-Chebyshev: weight (1 - t^2)^{-1/2}, nodes cos((2i-1)pi/(2L)).
    double num = 0.0;
    for (int i = 1; i <= quad1d; ++i) {
      double t = std::cos((2 * i - 1) * std::numbers::pi / (2.0 * quad1d));
      num += legendre_eval(k, 4, t) * legendre_eval(kprime, 2, t);
    }
    return num / quad1d;
  }
  GaussLegendre gl = gauss_legendre(quad1d);
  double num = 0.0;
  double den = 0.0;
  double expo = (n - 3) / 2.0;
  for (int i = 0; i < quad1d; ++i) {
    double t = gl.nodes[i];
    double w = gl.weights[i] * std::pow(1.0 - t * t, expo);
    num += w * legendre_eval(k, n + 2, t) * legendre_eval(kprime, n, t);
    den += w;
  }
  return num / den;
}

}  // namespace monolie

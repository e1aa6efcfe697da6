// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/cauchy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "monolie/complex_geometry.hpp"
#include "monolie/parallel.hpp"

namespace monolie {

double sigma_n(int n) {
  if (n < 1) throw std::domain_error("sigma_n requires n >= 1");
  return sphere_area(n + 1);
}

Paravector fundamental_e(const Paravector& x) {
  if (!x.is_real(0.0))
    throw std::domain_error("fundamental solution requires a real point");
  double r = x.norm();
  if (r == 0.0) throw std::domain_error("fundamental solution at 0");
  int n = x.generators();
  Paravector out = x.conjugate();
  out *= cplx(1.0 / (sigma_n(n) * std::pow(r, n + 1)), 0.0);
  return out;
}

KernelValue g_complex(const Paravector& omega, const Paravector& zeta) {
  if (omega.generators() != zeta.generators())
    throw std::invalid_argument("generator count mismatch");
  int n = omega.generators();
  Paravector u = omega - zeta;
  cplx w(0.0, 0.0);
  for (const auto& c : u.components()) w += c * c;
  KernelValue out{Paravector(n), false};
  cplx denom;
  if (n % 2 == 1) {
    // |u|_C^{n+1} = w^{(n+1)/2}: entire in w, singular only at w = 0.
    out.domain_flag = (w == cplx(0.0, 0.0));
    if (out.domain_flag) return out;
    denom = cplx(1.0, 0.0);
    for (int i = 0; i < (n + 1) / 2; ++i) denom *= w;
  } else {
    AbsC s = abs_c(u);
    out.domain_flag = s.on_cut || s.value == cplx(0.0, 0.0);
    if (s.value == cplx(0.0, 0.0)) return out;
    denom = cplx(1.0, 0.0);
    for (int i = 0; i < n + 1; ++i) denom *= s.value;
  }
  out.value = u.conjugate();
  out.value *= cplx(1.0, 0.0) / (sigma_n(n) * denom);
  return out;
}

namespace {

// Per-blade compensated accumulation in a fixed order.
class KahanMultivector {
 public:
  explicit KahanMultivector(int n) : sum_(n), comp_(n) {}
  void add(const Multivector& v) {
    for (unsigned m = 0; m < sum_.size(); ++m) {
      cplx y = v[m] - comp_[m];
      cplx t = sum_[m] + y;
      comp_[m] = (t - sum_[m]) - y;
      sum_[m] = t;
    }
  }
  const Multivector& value() const { return sum_; }

 private:
  Multivector sum_;
  Multivector comp_;
};

}  // namespace

Multivector cauchy_transform(const MonogenicEvaluator& f,
                             const SphereQuadrature& quad,
                             const Paravector& zeta) {
  int n = zeta.generators();
  if (quad.n != n + 1)
    throw std::invalid_argument("quadrature sphere dimension mismatch");
  if (quad.measure != SphereMeasure::Surface)
    throw std::invalid_argument("cauchy transform needs the surface measure");
  std::size_t total = quad.size();
  const std::size_t chunk = 512;
  std::size_t chunks = (total + chunk - 1) / chunk;
  std::vector<Multivector> partial(chunks, Multivector(n));
  std::vector<char> singular(chunks, 0);
  run_chunks(total, chunk, [&](std::size_t ci, std::size_t b, std::size_t e) {
    KahanMultivector acc(n);
    for (std::size_t i = b; i < e; ++i) {
      Paravector unit(n);
      Paravector point(n);
      for (std::size_t d = 0; d < quad.nodes[i].size(); ++d) {
        unit[static_cast<int>(d)] = quad.nodes[i][d];
        point[static_cast<int>(d)] = quad.nodes[i][d] * quad.radius;
      }
      KernelValue kv = g_complex(point, zeta);
      if (kv.domain_flag) {
        singular[ci] = 1;
        return;
      }
      Multivector term = kv.value.to_multivector() * unit.to_multivector() *
                         f(point);
      term *= cplx(quad.weights[i], 0.0);
      acc.add(term);
    }
    partial[ci] = acc.value();
  });
  for (char s : singular)
    if (s)
      throw std::domain_error(
          "cauchy kernel singular at a quadrature node for this point");
  KahanMultivector out(n);
  for (const auto& p : partial) out.add(p);
  return out.value();
}

}  // namespace monolie

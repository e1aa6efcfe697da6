// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace monolie {

namespace {

void check_exponent(int n, const Exponent& e) {
  if (static_cast<int>(e.size()) != n + 1)
    throw std::invalid_argument("exponent size must be n + 1");
  for (int v : e)
    if (v < 0) throw std::invalid_argument("negative exponent");
}

}  // namespace

PolyMultivector::PolyMultivector(int n) : n_(n) {
  Multivector::scalar(n, 0.0);  // validates n
}

PolyMultivector PolyMultivector::constant(int n, const Multivector& c) {
  PolyMultivector p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n) + 1, 0), c);
  return p;
}

PolyMultivector PolyMultivector::constant(int n, cplx c) {
  return constant(n, Multivector::scalar(n, c));
}

PolyMultivector PolyMultivector::variable(int n, int i) {
  if (i < 0 || i > n) throw std::invalid_argument("variable index out of range");
  Exponent e(static_cast<std::size_t>(n) + 1, 0);
  e[i] = 1;
  PolyMultivector p(n);
  p.add_term(e, Multivector::scalar(n, 1.0));
  return p;
}

PolyMultivector PolyMultivector::monomial(int n, const Exponent& e,
                                          const Multivector& c) {
  PolyMultivector p(n);
  p.add_term(e, c);
  return p;
}

int PolyMultivector::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int v : e) d += v;
    deg = std::max(deg, d);
  }
  return deg;
}

double PolyMultivector::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, c.max_abs());
  return m;
}

void PolyMultivector::add_term(const Exponent& e, const Multivector& c) {
  check_exponent(n_, e);
  if (c.generators() != n_)
    throw std::invalid_argument("coefficient generator count mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
  }
}

void PolyMultivector::cleanup(double tol) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.max_abs() <= tol)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Multivector PolyMultivector::eval(const std::vector<cplx>& x) const {
  if (static_cast<int>(x.size()) != n_ + 1)
    throw std::invalid_argument("evaluation point size must be n + 1");
  Multivector out(n_);
  for (const auto& [e, c] : terms_) {
    cplx mono(1.0, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int p = 0; p < e[i]; ++p) mono *= x[i];
    out += c * mono;
  }
  return out;
}

Multivector PolyMultivector::eval(const Paravector& x) const {
  return eval(x.components());
}

Multivector PolyMultivector::eval_spatial(const std::vector<cplx>& z) const {
  if (static_cast<int>(z.size()) != n_)
    throw std::invalid_argument("spatial point size must be n");
  std::vector<cplx> x(static_cast<std::size_t>(n_) + 1, cplx(0.0, 0.0));
  std::copy(z.begin(), z.end(), x.begin() + 1);
  return eval(x);
}

cplx PolyMultivector::eval_scalar(const std::vector<cplx>& x) const {
  return eval(x)[0];
}

PolyMultivector& PolyMultivector::operator+=(const PolyMultivector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyMultivector& PolyMultivector::operator-=(const PolyMultivector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c * cplx(-1.0, 0.0));
  return *this;
}

PolyMultivector& PolyMultivector::operator*=(cplx s) {
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

PolyMultivector& PolyMultivector::operator*=(const Multivector& m) {
  for (auto& [e, c] : terms_) c = c * m;
  return *this;
}

PolyMultivector operator+(PolyMultivector lhs, const PolyMultivector& rhs) {
  return lhs += rhs;
}
PolyMultivector operator-(PolyMultivector lhs, const PolyMultivector& rhs) {
  return lhs -= rhs;
}
PolyMultivector operator*(PolyMultivector lhs, cplx s) { return lhs *= s; }
PolyMultivector operator*(cplx s, PolyMultivector rhs) { return rhs *= s; }

PolyMultivector operator*(const PolyMultivector& lhs,
                          const PolyMultivector& rhs) {
  if (lhs.generators() != rhs.generators())
    throw std::invalid_argument("generator count mismatch");
  PolyMultivector out(lhs.generators());
  Exponent e(static_cast<std::size_t>(lhs.generators()) + 1, 0);
  for (const auto& [ea, ca] : lhs.terms()) {
    for (const auto& [eb, cb] : rhs.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyMultivector derivative(const PolyMultivector& p, int i) {
  if (i < 0 || i > p.generators())
    throw std::invalid_argument("variable index out of range");
  PolyMultivector out(p.generators());
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * cplx(static_cast<double>(e[i]), 0.0));
  }
  return out;
}

namespace {

PolyMultivector dirac_general(const PolyMultivector& p, bool with_x0,
                              double spatial_sign) {
  int n = p.generators();
  PolyMultivector out(n);
  if (with_x0) out += derivative(p, 0);
  for (int j = 1; j <= n; ++j) {
    Multivector ej = Multivector::blade(n, 1u << (j - 1), spatial_sign);
    PolyMultivector dj = derivative(p, j);
    for (const auto& [e, c] : dj.terms()) out.add_term(e, ej * c);
  }
  return out;
}

}  // namespace

PolyMultivector dirac_d(const PolyMultivector& p) {
  return dirac_general(p, true, 1.0);
}

PolyMultivector dirac_dbar(const PolyMultivector& p) {
  return dirac_general(p, true, -1.0);
}

PolyMultivector dirac_spatial(const PolyMultivector& p) {
  return dirac_general(p, false, 1.0);
}

PolyMultivector laplacian(const PolyMultivector& p) {
  PolyMultivector out(p.generators());
  for (int i = 0; i <= p.generators(); ++i)
    out += derivative(derivative(p, i), i);
  return out;
}

PolyMultivector laplacian_spatial(const PolyMultivector& p) {
  PolyMultivector out(p.generators());
  for (int i = 1; i <= p.generators(); ++i)
    out += derivative(derivative(p, i), i);
  return out;
}

PolyMultivector restrict_x0(const PolyMultivector& p) {
  PolyMultivector out(p.generators());
  for (const auto& [e, c] : p.terms())
    if (e[0] == 0) out.add_term(e, c);
  return out;
}

PolyMultivector ck_extension(const PolyMultivector& p) {
  PolyMultivector layer = restrict_x0(p);
  PolyMultivector out = layer;
  double factorial = 1.0;
  for (int m = 1; !layer.is_zero(); ++m) {
    layer = dirac_spatial(layer) * cplx(-1.0, 0.0);
    layer.cleanup(0.0);
    factorial *= m;
    for (const auto& [e, c] : layer.terms()) {
      Exponent shifted = e;
      shifted[0] += m;
      out.add_term(shifted, c * cplx(1.0 / factorial, 0.0));
    }
  }
  return out;
}

}  // namespace monolie

// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#include "monolie/multivector.hpp"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace monolie {

namespace {

void check_generators(int n) {
  if (n < 1 || n > 12) {
    throw std::invalid_argument("generator count must be in [1, 12]");
  }
}

}  // namespace

BladeProduct blade_product(unsigned a, unsigned b) {
  // Transposition count: pairs (i in a, j in b) with i > j.
  unsigned s = a >> 1;
  int swaps = 0;
  while (s != 0) {
    swaps += std::popcount(s & b);
    s >>= 1;
  }
  // Each repeated generator contracts with e_j^2 = -1.
  int contractions = std::popcount(a & b);
  int sign = ((swaps + contractions) & 1) ? -1 : 1;
  return {a ^ b, sign};
}

int blade_square_sign(unsigned mask) { return blade_product(mask, mask).sign; }

std::string blade_name(unsigned mask) {
  if (mask == 0) return "e0";
  std::ostringstream os;
  os << "e{";
  bool first = true;
  for (int j = 0; mask >> j; ++j) {
    if (mask & (1u << j)) {
      if (!first) os << ",";
      os << (j + 1);
      first = false;
    }
  }
  os << "}";
  return os.str();
}

Multivector::Multivector(int n) : n_(n) {
  check_generators(n);
  c_.assign(std::size_t{1} << n, cplx(0.0, 0.0));
}

Multivector Multivector::scalar(int n, cplx value) {
  Multivector u(n);
  u.c_[0] = value;
  return u;
}

Multivector Multivector::blade(int n, unsigned mask, cplx value) {
  Multivector u(n);
  if (mask >= u.c_.size()) throw std::invalid_argument("blade mask out of range");
  u.c_[mask] = value;
  return u;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Multivector Multivector::conjugate() const {
  Multivector out(n_);
  for (unsigned m = 0; m < c_.size(); ++m) {
    out.c_[m] = std::conj(c_[m]) * static_cast<double>(blade_square_sign(m));
  }
  return out;
}

double Multivector::norm() const {
  double s = 0.0;
  for (const auto& c : c_) s += std::norm(c);
  return std::sqrt(s);
}

double Multivector::max_abs() const {
  double m = 0.0;
  for (const auto& c : c_) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_real(double tol) const {
  for (const auto& c : c_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }

Multivector operator*(const Multivector& lhs, const Multivector& rhs) {
  if (lhs.generators() != rhs.generators()) {
    throw std::invalid_argument("generator count mismatch");
  }
  Multivector out(lhs.generators());
  const unsigned dim = static_cast<unsigned>(lhs.size());
  for (unsigned a = 0; a < dim; ++a) {
    if (lhs[a] == cplx(0.0, 0.0)) continue;
    for (unsigned b = 0; b < dim; ++b) {
      if (rhs[b] == cplx(0.0, 0.0)) continue;
      const BladeProduct p = blade_product(a, b);
      out[p.mask] += static_cast<double>(p.sign) * lhs[a] * rhs[b];
    }
  }
  return out;
}

Multivector operator*(Multivector lhs, cplx s) { return lhs *= s; }
Multivector operator*(cplx s, Multivector rhs) { return rhs *= s; }

cplx inner(const Multivector& u, const Multivector& v) {
  if (u.generators() != v.generators()) {
    throw std::invalid_argument("generator count mismatch");
  }
  cplx s(0.0, 0.0);
  for (unsigned m = 0; m < u.size(); ++m) s += u[m] * std::conj(v[m]);
  return s;
}

Paravector::Paravector(int n) : n_(n) {
  check_generators(n);
  x_.assign(static_cast<std::size_t>(n) + 1, cplx(0.0, 0.0));
}

Paravector::Paravector(int n, std::vector<cplx> components) : n_(n), x_(std::move(components)) {
  check_generators(n);
  if (x_.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("paravector needs n + 1 components");
  }
}

std::vector<double> Paravector::real_part() const {
  std::vector<double> r(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) r[i] = x_[i].real();
  return r;
}

std::vector<double> Paravector::imag_part() const {
  std::vector<double> r(x_.size());
  for (std::size_t i = 0; i < x_.size(); ++i) r[i] = x_[i].imag();
  return r;
}

bool Paravector::is_real(double tol) const {
  for (const auto& c : x_) {
    if (std::abs(c.imag()) > tol) return false;
  }
  return true;
}

double Paravector::norm() const {
  double s = 0.0;
  for (const auto& c : x_) s += std::norm(c);
  return std::sqrt(s);
}

Paravector Paravector::conjugate() const {
  Paravector out(n_);
  out.x_[0] = x_[0];
  for (int i = 1; i <= n_; ++i) out.x_[i] = -x_[i];
  return out;
}

Multivector Paravector::to_multivector() const {
  Multivector u(n_);
  u[0] = x_[0];
  for (int i = 1; i <= n_; ++i) u[1u << (i - 1)] = x_[i];
  return u;
}

Paravector& Paravector::operator+=(const Paravector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += rhs.x_[i];
  return *this;
}

Paravector& Paravector::operator-=(const Paravector& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("generator count mismatch");
  for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= rhs.x_[i];
  return *this;
}

Paravector& Paravector::operator*=(cplx s) {
  for (auto& c : x_) c *= s;
  return *this;
}

Paravector operator+(Paravector lhs, const Paravector& rhs) { return lhs += rhs; }
Paravector operator-(Paravector lhs, const Paravector& rhs) { return lhs -= rhs; }
Paravector operator*(Paravector lhs, cplx s) { return lhs *= s; }
Paravector operator*(cplx s, Paravector rhs) { return rhs *= s; }

Paravector kelvin_inverse(const Paravector& x) {
  // x * conj(x) = (sum x_i^2) e_0; for real x this is |x|^2.
  cplx denom(0.0, 0.0);
  for (const auto& c : x.components()) denom += c * c;
  if (std::abs(denom) == 0.0) throw std::domain_error("kelvin inverse of zero paravector");
  Paravector out = x.conjugate();
  out *= cplx(1.0, 0.0) / denom;
  return out;
}

}  // namespace monolie

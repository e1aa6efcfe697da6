// Copyright (c) 2026 The monolie authors
// SPDX-License-Identifier: Apache-2.0

#ifndef MONOLIE_MULTIVECTOR_HPP
#define MONOLIE_MULTIVECTOR_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace monolie {

using cplx = std::complex<double>;

/// Blade product in the Clifford algebra with negative-definite signature
/// (every generator squares to -1).  Blades are subsets of {1..n} encoded as
/// bitmasks: bit j-1 set  <=>  generator e_j present.
struct BladeProduct {
  unsigned mask;
  int sign;  // +1 or -1
};

/// e_S * e_R = sign * e_{S xor R}.
BladeProduct blade_product(unsigned a, unsigned b);

/// Sign s with e_S * e_S = s * e_0.  The Clifford conjugate of e_S is s * e_S,
/// so that e_S * conj(e_S) = e_0.
int blade_square_sign(unsigned mask);

/// Human-readable blade name: "e0", "e{1}", "e{1,2}", ...
std::string blade_name(unsigned mask);

/// Element of the complex Clifford algebra over n anticommuting generators,
/// stored as 2^n blade coefficients in bitmask order.
class Multivector {
 public:
  explicit Multivector(int n);
  static Multivector scalar(int n, cplx value);
  static Multivector blade(int n, unsigned mask, cplx value = cplx(1.0, 0.0));

  int generators() const { return n_; }
  std::size_t size() const { return c_.size(); }

  cplx& operator[](unsigned mask) { return c_[mask]; }
  const cplx& operator[](unsigned mask) const { return c_[mask]; }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(cplx s);

  /// Clifford conjugation: reversal composed with grade involution, plus
  /// complex conjugation of coefficients.  Involution and anti-automorphism.
  Multivector conjugate() const;

  cplx scalar_part() const { return c_[0]; }

  /// Euclidean norm sqrt(sum |u_S|^2).
  double norm() const;

  /// Largest |u_S| over blades.
  double max_abs() const;

  bool is_real(double tol = 0.0) const;

 private:
  int n_;
  std::vector<cplx> c_;
};

Multivector operator+(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector lhs, const Multivector& rhs);
Multivector operator*(const Multivector& lhs, const Multivector& rhs);
Multivector operator*(Multivector lhs, cplx s);
Multivector operator*(cplx s, Multivector rhs);

/// Inner product (u, v) = [u * conj(v)]_0 = sum_S u_S * conj(v_S).
cplx inner(const Multivector& u, const Multivector& v);

/// Paravector x = x_0 e_0 + x_1 e_1 + ... + x_n e_n with complex components.
/// Real-valued paravectors are represented with zero imaginary parts.
class Paravector {
 public:
  explicit Paravector(int n);
  Paravector(int n, std::vector<cplx> components);

  int generators() const { return n_; }
  std::size_t size() const { return x_.size(); }  // n + 1

  cplx& operator[](int i) { return x_[i]; }
  const cplx& operator[](int i) const { return x_[i]; }

  const std::vector<cplx>& components() const { return x_; }

  /// Real parts (xi view) and imaginary parts (eta view).
  std::vector<double> real_part() const;
  std::vector<double> imag_part() const;

  bool is_real(double tol = 0.0) const;

  /// Euclidean norm sqrt(sum |x_i|^2).
  double norm() const;

  Paravector conjugate() const;  // x_0 e_0 - x_1 e_1 - ... , coefficients kept
  Multivector to_multivector() const;

  Paravector& operator+=(const Paravector& rhs);
  Paravector& operator-=(const Paravector& rhs);
  Paravector& operator*=(cplx s);

 private:
  int n_;
  std::vector<cplx> x_;
};

Paravector operator+(Paravector lhs, const Paravector& rhs);
Paravector operator-(Paravector lhs, const Paravector& rhs);
Paravector operator*(Paravector lhs, cplx s);
Paravector operator*(cplx s, Paravector rhs);

/// Kelvin inverse conj(x) / |x|^2 of a nonzero real paravector; the unique y
/// with x*y = y*x = e_0.  Throws std::domain_error at x = 0.
Paravector kelvin_inverse(const Paravector& x);

}  // namespace monolie

#endif  // MONOLIE_MULTIVECTOR_HPP

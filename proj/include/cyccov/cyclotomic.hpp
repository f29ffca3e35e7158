#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cyccov/checked.hpp"

namespace cyccov {

/// Coefficients (lowest degree first) of the d-th cyclotomic polynomial.
std::vector<mpz_class> cyclotomic_polynomial(int d);

int euler_phi(int d);

/// Q(e) with e = exp(2 pi i / d), as Q[x] / Phi_d(x).
class CyclotomicField {
 public:
  /// Shared instance per order; d >= 1.
  static std::shared_ptr<const CyclotomicField> of_order(int d);

  int order() const { return d_; }
  /// phi(d): dimension over Q.
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const std::vector<mpz_class>& modulus() const { return modulus_; }

  /// Reduces a polynomial in e modulo Phi_d; the result has exactly degree() coefficients.
  void reduce(std::vector<mpq_class>& poly) const;

  explicit CyclotomicField(int d);

 private:
  int d_;
  std::vector<mpz_class> modulus_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Exact element of Q(e). The representation is canonical, so equality is
/// coefficient-wise.
class CyclotomicNumber {
 public:
  explicit CyclotomicNumber(FieldPtr field);
  CyclotomicNumber(FieldPtr field, mpq_class rational);

  static CyclotomicNumber from_coefficients(FieldPtr field, std::vector<mpq_class> coefficients);
  /// e^exponent for any integer exponent.
  static CyclotomicNumber root_power(FieldPtr field, Int exponent);

  const FieldPtr& field() const { return field_; }
  std::span<const mpq_class> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;

  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
  friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
  friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
  friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) { return a /= b; }
  CyclotomicNumber operator-() const;

  /// Throws DomainError for zero.
  CyclotomicNumber inverse() const;

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  /// e.g. "1/2 - 3*e^2"; "0" for zero.
  std::string to_string() const;

 private:
  void check_same_field(const CyclotomicNumber& other) const;

  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

}  // namespace cyccov

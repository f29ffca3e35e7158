#include "cyccov/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "cyccov/errors.hpp"

namespace cyccov {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient by a monic divisor; the remainder must vanish.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  ZPoly quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(int d) {
  if (d < 1) throw ArgumentError("cyclotomic polynomial order must be positive");
  ZPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(e));
  }
  trim(p);
  return p;
}

int euler_phi(int d) {
  if (d < 1) throw ArgumentError("euler_phi needs a positive argument");
  int result = d;
  int n = d;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CyclotomicField::CyclotomicField(int d) : d_(d), modulus_(cyclotomic_polynomial(d)) {}

std::shared_ptr<const CyclotomicField> CyclotomicField::of_order(int d) {
  if (d < 1) throw ArgumentError("root of unity order must be positive");
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_shared<const CyclotomicField>(d);
  return slot;
}

void CyclotomicField::reduce(std::vector<mpq_class>& poly) const {
  const std::size_t n = static_cast<std::size_t>(degree());
  for (std::size_t i = poly.size(); i-- > n;) {
    if (poly[i] == 0) continue;
    const mpq_class c = poly[i];
    for (std::size_t j = 0; j <= n; ++j) poly[i - n + j] -= c * modulus_[j];
  }
  poly.resize(n, mpq_class(0));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw ArgumentError("cyclotomic number needs a field");
  coeffs_.assign(static_cast<std::size_t>(field_->degree()), mpq_class(0));
}

CyclotomicNumber::CyclotomicNumber(FieldPtr field, mpq_class rational) : CyclotomicNumber(std::move(field)) {
  coeffs_[0] = std::move(rational);
  coeffs_[0].canonicalize();
}

CyclotomicNumber CyclotomicNumber::from_coefficients(FieldPtr field, std::vector<mpq_class> coefficients) {
  CyclotomicNumber out(field);
  for (auto& c : coefficients) c.canonicalize();
  field->reduce(coefficients);
  out.coeffs_ = std::move(coefficients);
  return out;
}

CyclotomicNumber CyclotomicNumber::root_power(FieldPtr field, Int exponent) {
  const Int d = field->order();
  const Int e = ((exponent % d) + d) % d;
  std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1, mpq_class(0));
  poly[static_cast<std::size_t>(e)] = 1;
  return from_coefficients(std::move(field), std::move(poly));
}

bool CyclotomicNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

bool CyclotomicNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const mpq_class& c) { return c == 0; });
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& other) const {
  if (field_->order() != other.field_->order()) {
    throw ArgumentError("cyclotomic numbers from fields of different order");
  }
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  check_same_field(rhs);
  const std::size_t n = coeffs_.size();
  std::vector<mpq_class> product(2 * n - 1, mpq_class(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (rhs.coeffs_[j] != 0) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  field_->reduce(product);
  coeffs_ = std::move(product);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this *= rhs.inverse(); }

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DomainError("division by zero in a cyclotomic field");
  // Solve (this * x^j reduced) c = 1 over Q: column j of the multiplication matrix.
  const std::size_t n = coeffs_.size();
  std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, mpq_class(0)));
  CyclotomicNumber column = *this;
  const CyclotomicNumber x = root_power(field_, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column.coeffs_[i];
    column *= x;
  }
  m[0][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw SingularSystemError("multiplication matrix is singular");
    std::swap(m[pivot], m[col]);
    const mpq_class inv = 1 / m[col][col];
    for (std::size_t j = col; j <= n; ++j) m[col][j] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const mpq_class f = m[row][col];
      for (std::size_t j = col; j <= n; ++j) m[row][j] -= f * m[col][j];
    }
  }
  CyclotomicNumber out(field_);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = m[i][n];
  return out;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return a.field_->order() == b.field_->order() && a.coeffs_ == b.coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && i > 0;
    if (!unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += i == 1 ? "e" : "e^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace cyccov

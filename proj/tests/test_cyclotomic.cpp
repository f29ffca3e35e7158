#include <gtest/gtest.h>

#include "cyccov/cyclotomic.hpp"
#include "cyccov/errors.hpp"

namespace cyccov {
namespace {

std::vector<mpz_class> z(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

CyclotomicNumber e(const FieldPtr& f, Int power) { return CyclotomicNumber::root_power(f, power); }

TEST(CyclotomicPolynomial, KnownValues) {
  EXPECT_EQ(cyclotomic_polynomial(1), z({-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), z({1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(3), z({1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), z({1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), z({1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), z({1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), z({1, 0, -1, 0, 1}));
  // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
  const auto p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
  EXPECT_THROW(cyclotomic_polynomial(0), ArgumentError);
}

TEST(CyclotomicPolynomial, DegreeIsTotient) {
  const std::vector<int> phi{1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8, 16, 6, 18, 8};
  for (int d = 1; d <= 20; ++d) {
    EXPECT_EQ(euler_phi(d), phi[static_cast<std::size_t>(d - 1)]);
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(d).size()) - 1, euler_phi(d));
    EXPECT_EQ(CyclotomicField::of_order(d)->degree(), euler_phi(d));
  }
}

TEST(CyclotomicField, Cached) {
  EXPECT_EQ(CyclotomicField::of_order(7).get(), CyclotomicField::of_order(7).get());
  EXPECT_EQ(CyclotomicField::of_order(7)->order(), 7);
  EXPECT_THROW(CyclotomicField::of_order(0), ArgumentError);
}

TEST(CyclotomicNumber, RootsOfUnity) {
  for (int d = 1; d <= 12; ++d) {
    const FieldPtr f = CyclotomicField::of_order(d);
    const CyclotomicNumber one(f, 1);
    EXPECT_EQ(e(f, d), one);
    EXPECT_EQ(e(f, 0), one);
    EXPECT_EQ(e(f, -1) * e(f, 1), one);
    for (Int a = 0; a < d; ++a)
      for (Int b = 0; b < d; ++b) {
        EXPECT_EQ(e(f, a) == e(f, b), a == b) << d << ":" << a << "," << b;
        EXPECT_EQ(e(f, a) * e(f, b), e(f, a + b));
        EXPECT_EQ(e(f, a + 3 * d), e(f, a));
      }
    // Stored representation has degree below phi(d).
    EXPECT_LE(e(f, d - 1).coefficients().size(), static_cast<std::size_t>(euler_phi(d)));
    if (d > 1) {
      CyclotomicNumber sum(f);
      for (Int a = 0; a < d; ++a) sum += e(f, a);
      EXPECT_TRUE(sum.is_zero()) << d;
    }
  }
}

TEST(CyclotomicNumber, FieldArithmetic) {
  const FieldPtr f = CyclotomicField::of_order(5);
  const CyclotomicNumber a = CyclotomicNumber(f, mpq_class(1, 2)) - CyclotomicNumber(f, 3) * e(f, 2);
  const CyclotomicNumber b = e(f, 1) + CyclotomicNumber(f, mpq_class(-2, 7));
  EXPECT_EQ(a * a.inverse(), CyclotomicNumber(f, 1));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a + (-a), CyclotomicNumber(f));
  EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  EXPECT_THROW(CyclotomicNumber(f).inverse(), DomainError);
  EXPECT_THROW(a + CyclotomicNumber(CyclotomicField::of_order(3), 1), ArgumentError);
  EXPECT_TRUE(CyclotomicNumber(f, mpq_class(3, 4)).is_rational());
  EXPECT_FALSE(e(f, 1).is_rational());
}

TEST(CyclotomicNumber, ToString) {
  const FieldPtr f = CyclotomicField::of_order(5);
  EXPECT_EQ(CyclotomicNumber(f).to_string(), "0");
  EXPECT_EQ((CyclotomicNumber(f, mpq_class(1, 2)) - CyclotomicNumber(f, 3) * e(f, 2)).to_string(), "1/2 - 3*e^2");
  EXPECT_EQ(e(f, 1).to_string(), "e");
  EXPECT_EQ((-e(f, 3)).to_string(), "-e^3");
  // e^4 = -(1 + e + e^2 + e^3) in Q(e_5).
  EXPECT_EQ(e(f, 4).to_string(), "-1 - e - e^2 - e^3");
}

TEST(CyclotomicNumber, InversesOfEveryRoot) {
  for (int d = 2; d <= 9; ++d) {
    const FieldPtr f = CyclotomicField::of_order(d);
    for (Int a = 1; a < d; ++a) {
      const CyclotomicNumber x = CyclotomicNumber(f, 1) - e(f, a);
      EXPECT_EQ(x * x.inverse(), CyclotomicNumber(f, 1)) << d << "," << a;
      EXPECT_EQ(e(f, a).inverse(), e(f, d - a));
    }
  }
}

}  // namespace
}  // namespace cyccov

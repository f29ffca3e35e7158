#pragma once

#include <map>
#include <string>
#include <vector>

#include "cyccov/cyclotomic.hpp"

namespace cyccov {

using Exponent = std::vector<int>;

/// Largest truncation bound a series may carry.
inline constexpr int kMaxTruncation = 12;

int total_degree(const Exponent& e);

/// Polynomial in named variables over Q(e), taken modulo m^bound: terms of
/// total degree >= bound are dropped on insertion and after every product.
/// Zero coefficients are never stored.
class TruncatedSeries {
 public:
  /// Throws ResourceError if bound exceeds kMaxTruncation, ArgumentError if negative.
  TruncatedSeries(FieldPtr field, std::vector<std::string> variables, int bound);

  static TruncatedSeries monomial(FieldPtr field, std::vector<std::string> variables, int bound, Exponent exponent,
                                  const CyclotomicNumber& coefficient);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t arity() const { return variables_.size(); }
  int bound() const { return bound_; }
  const std::map<Exponent, CyclotomicNumber>& terms() const { return terms_; }

  /// Adds c·x^exponent; silently dropped when the degree reaches the bound.
  void add_term(const Exponent& exponent, const CyclotomicNumber& c);
  CyclotomicNumber coefficient(const Exponent& exponent) const;

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero series.
  int max_degree() const;

  /// Image modulo m^new_bound with new_bound <= bound().
  TruncatedSeries truncated(int new_bound) const;
  /// Same terms, read modulo m^new_bound; a preimage when the bound grows.
  TruncatedSeries with_bound(int new_bound) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const CyclotomicNumber& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const CyclotomicNumber& s) { return a *= s; }
  friend TruncatedSeries operator*(const CyclotomicNumber& s, TruncatedSeries a) { return a *= s; }
  /// Truncated product; both operands must share variables and bound.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

 private:
  void check_compatible(const TruncatedSeries& other) const;

  FieldPtr field_;
  std::vector<std::string> variables_;
  int bound_;
  std::map<Exponent, CyclotomicNumber> terms_;
};

}  // namespace cyccov

#include "cyccov/truncated_series.hpp"

#include <numeric>

#include "cyccov/errors.hpp"

namespace cyccov {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

TruncatedSeries::TruncatedSeries(FieldPtr field, std::vector<std::string> variables, int bound)
    : field_(std::move(field)), variables_(std::move(variables)), bound_(bound) {
  if (!field_) throw ArgumentError("truncated series needs a coefficient field");
  if (bound < 0) throw ArgumentError("truncation bound must be non-negative");
  if (bound > kMaxTruncation) {
    throw ResourceError("truncation bound " + std::to_string(bound) + " exceeds the cap " +
                        std::to_string(kMaxTruncation));
  }
}

TruncatedSeries TruncatedSeries::monomial(FieldPtr field, std::vector<std::string> variables, int bound,
                                          Exponent exponent, const CyclotomicNumber& coefficient) {
  TruncatedSeries s(std::move(field), std::move(variables), bound);
  s.add_term(exponent, coefficient);
  return s;
}

void TruncatedSeries::add_term(const Exponent& exponent, const CyclotomicNumber& c) {
  if (exponent.size() != variables_.size()) throw ArgumentError("exponent length does not match the variables");
  for (int e : exponent) {
    if (e < 0) throw ArgumentError("negative exponent");
  }
  if (c.field()->order() != field_->order()) throw ArgumentError("coefficient from a different field");
  if (total_degree(exponent) >= bound_ || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CyclotomicNumber TruncatedSeries::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CyclotomicNumber(field_) : it->second;
}

int TruncatedSeries::max_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, total_degree(e));
  return best;
}

TruncatedSeries TruncatedSeries::truncated(int new_bound) const {
  if (new_bound > bound_) throw ArgumentError("cannot truncate to a larger bound; use with_bound");
  return with_bound(new_bound);
}

TruncatedSeries TruncatedSeries::with_bound(int new_bound) const {
  TruncatedSeries out(field_, variables_, new_bound);
  for (const auto& [e, c] : terms_) out.add_term(e, c);
  return out;
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (variables_ != other.variables_ || bound_ != other.bound_ || field_->order() != other.field_->order()) {
    throw ArgumentError("truncated series with different variables, bound or field");
  }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const CyclotomicNumber& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.field_, a.variables_, a.bound_);
  Exponent e(a.arity());
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) >= a.bound_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.variables_ == b.variables_ && a.bound_ == b.bound_ && a.field_->order() == b.field_->order() &&
         a.terms_ == b.terms_;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    const std::string coeff = c.to_string();
    const bool compound = coeff.find(' ') != std::string::npos;
    if (mono.empty()) {
      out += compound ? "(" + coeff + ")" : coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
    }
  }
  return out;
}

}  // namespace cyccov

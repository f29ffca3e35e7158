#include "cyccov/local_model.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "cyccov/errors.hpp"

namespace cyccov {

SectionDecomposition::SectionDecomposition(int d, std::vector<TruncatedSeries> components)
    : d_(d), components_(std::move(components)) {
  if (d < 1) throw ArgumentError("covering degree must be positive");
  if (components_.size() != static_cast<std::size_t>(d)) {
    throw ArgumentError(fmt::format("decomposition needs {} components, got {}", d, components_.size()));
  }
  for (const auto& c : components_) {
    if (c.field()->order() != d) throw ArgumentError("decomposition coefficients must lie in Q(e_d)");
    if (c.variables() != components_.front().variables() || c.bound() != components_.front().bound()) {
      throw ArgumentError("decomposition components must share variables and bound");
    }
  }
}

SectionDecomposition SectionDecomposition::zero(int d, std::vector<std::string> variables, int bound) {
  const FieldPtr field = CyclotomicField::of_order(d);
  return SectionDecomposition(d, std::vector<TruncatedSeries>(static_cast<std::size_t>(d),
                                                               TruncatedSeries(field, std::move(variables), bound)));
}

namespace {

using Matrix = std::vector<std::vector<CyclotomicNumber>>;

// Gauss-Jordan elimination; the columns of `rhs` are solved simultaneously.
Matrix solve_exact(Matrix a, Matrix rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularSystemError("Vandermonde system is singular");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const CyclotomicNumber inv = a[col][col].inverse();
    for (auto& x : a[col]) x *= inv;
    for (auto& x : rhs[col]) x *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const CyclotomicNumber f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      for (std::size_t j = 0; j < rhs[row].size(); ++j) rhs[row][j] -= f * rhs[col][j];
    }
  }
  return rhs;
}

// Row j: sum_c e^{c nodes[j]} x_c.
Matrix vandermonde_rows(const FieldPtr& field, std::span<const Int> nodes) {
  const std::size_t l = nodes.size();
  Matrix a(l);
  for (std::size_t j = 0; j < l; ++j) {
    a[j].reserve(l);
    for (std::size_t c = 0; c < l; ++c) {
      a[j].push_back(CyclotomicNumber::root_power(field, checked_mul(static_cast<Int>(c), nodes[j])));
    }
  }
  return a;
}

void require_distinct_nodes(int d, std::span<const Int> nodes) {
  std::vector<Int> residues;
  for (Int b : nodes) residues.push_back(((b % d) + d) % d);
  std::sort(residues.begin(), residues.end());
  if (std::adjacent_find(residues.begin(), residues.end()) != residues.end()) {
    throw SingularSystemError("orbit indices repeat modulo the covering degree");
  }
}

std::vector<Int> with_reference(std::span<const Int> betas) {
  std::vector<Int> nodes{0};
  nodes.insert(nodes.end(), betas.begin(), betas.end());
  return nodes;
}

}  // namespace

std::vector<CyclotomicNumber> vandermonde_solve(int d, std::span<const Int> betas, int rhs_index) {
  if (d < 1) throw ArgumentError("root of unity order must be positive");
  const std::vector<Int> nodes = with_reference(betas);
  if (rhs_index < 0 || static_cast<std::size_t>(rhs_index) >= nodes.size()) {
    throw ArgumentError("right-hand side index out of range");
  }
  require_distinct_nodes(d, nodes);
  const FieldPtr field = CyclotomicField::of_order(d);
  Matrix rhs(nodes.size(), std::vector<CyclotomicNumber>(1, CyclotomicNumber(field)));
  rhs[static_cast<std::size_t>(rhs_index)][0] = CyclotomicNumber(field, 1);
  const Matrix x = solve_exact(vandermonde_rows(field, nodes), std::move(rhs));
  std::vector<CyclotomicNumber> out;
  for (const auto& row : x) out.push_back(row[0]);
  return out;
}

std::vector<CyclotomicNumber> vandermonde_residual(int d, std::span<const Int> betas,
                                                   std::span<const CyclotomicNumber> alphas, int rhs_index) {
  const std::vector<Int> nodes = with_reference(betas);
  if (alphas.size() != nodes.size()) throw ArgumentError("need one alpha per equation");
  const FieldPtr field = CyclotomicField::of_order(d);
  const Matrix a = vandermonde_rows(field, nodes);
  std::vector<CyclotomicNumber> out;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    CyclotomicNumber row(field, static_cast<int>(j) == rhs_index ? -1 : 0);
    for (std::size_t c = 0; c < nodes.size(); ++c) row += a[j][c] * alphas[c];
    out.push_back(row);
  }
  return out;
}

std::vector<std::string> base_variables(const std::vector<std::string>& cover_variables) {
  std::vector<std::string> out;
  for (const auto& name : cover_variables) {
    out.push_back(!name.empty() && name[0] == 'u' ? "v" + name.substr(1) : "v_" + name);
  }
  return out;
}

std::vector<TruncatedSeries> decompose_jet_ramified(const TruncatedSeries& jet, int d) {
  if (d < 1) throw ArgumentError("covering degree must be positive");
  if (jet.arity() == 0) throw ArgumentError("ramified jet needs the ramification coordinate u_1");
  std::vector<TruncatedSeries> out(static_cast<std::size_t>(d),
                                   TruncatedSeries(jet.field(), base_variables(jet.variables()), jet.bound()));
  for (const auto& [e, c] : jet.terms()) {
    const int q = e[0] % d;
    Exponent v = e;
    v[0] = (e[0] - q) / d;
    out[static_cast<std::size_t>(q)].add_term(v, c);
  }
  return out;
}

TruncatedSeries reassemble_ramified(std::span<const TruncatedSeries> components, int d,
                                    const std::vector<std::string>& cover_variables, int bound) {
  if (components.empty()) throw ArgumentError("no components to reassemble");
  TruncatedSeries out(components.front().field(), cover_variables, bound);
  for (std::size_t q = 0; q < components.size(); ++q) {
    if (components[q].arity() != cover_variables.size()) throw ArgumentError("component arity mismatch");
    for (const auto& [v, c] : components[q].terms()) {
      Exponent u = v;
      u[0] = static_cast<int>(checked_add(checked_mul(v[0], d), static_cast<Int>(q)));
      out.add_term(u, c);
    }
  }
  return out;
}

TruncatedSeries evaluate_at_orbit_point(const SectionDecomposition& s, Int beta) {
  const FieldPtr field = s.component(0).field();
  TruncatedSeries out(field, s.component(0).variables(), s.component(0).bound());
  for (int q = 0; q < s.degree(); ++q) {
    out += s.component(q) * CyclotomicNumber::root_power(field, checked_mul(q, beta));
  }
  return out;
}

SectionDecomposition deck_transform(const SectionDecomposition& s, Int power) {
  std::vector<TruncatedSeries> out;
  for (int q = 0; q < s.degree(); ++q) {
    out.push_back(s.component(q) * CyclotomicNumber::root_power(s.component(q).field(), checked_mul(q, power)));
  }
  return SectionDecomposition(s.degree(), std::move(out));
}

SectionDecomposition operator+(const SectionDecomposition& a, const SectionDecomposition& b) {
  if (a.degree() != b.degree()) throw ArgumentError("decompositions of different degree");
  std::vector<TruncatedSeries> out;
  for (int q = 0; q < a.degree(); ++q) out.push_back(a.component(q) + b.component(q));
  return SectionDecomposition(a.degree(), std::move(out));
}

SectionDecomposition multiply_unramified(const SectionDecomposition& a, const SectionDecomposition& b) {
  if (a.degree() != b.degree()) throw ArgumentError("decompositions of different degree");
  const int d = a.degree();
  SectionDecomposition zero = SectionDecomposition::zero(d, a.component(0).variables(), a.component(0).bound());
  std::vector<TruncatedSeries> out = zero.components();
  for (int p = 0; p < d; ++p) {
    for (int q = 0; q < d; ++q) out[static_cast<std::size_t>((p + q) % d)] += a.component(p) * b.component(q);
  }
  return SectionDecomposition(d, std::move(out));
}

SectionDecomposition case2_construct(int d, std::span<const Int> betas, std::span<const TruncatedSeries> jets,
                                     std::span<const int> orders) {
  const std::size_t l = betas.size();
  if (l == 0) throw ArgumentError("case2_construct needs at least one point");
  if (jets.size() != l || orders.size() != l) throw ArgumentError("need one jet and one order per point");
  if (l > static_cast<std::size_t>(d)) throw SingularSystemError("more points than the orbit holds");
  require_distinct_nodes(d, betas);
  for (int k : orders) {
    if (k < 1) throw ArgumentError("jet orders must be positive");
  }
  const int top = *std::max_element(orders.begin(), orders.end());
  const auto& variables = jets[0].variables();
  for (const auto& j : jets) {
    if (j.variables() != variables) throw ArgumentError("all jets must use the same coordinates");
    if (j.field()->order() != d) throw ArgumentError("jet coefficients must lie in Q(e_d)");
  }

  const FieldPtr field = CyclotomicField::of_order(d);
  Matrix rhs(l, std::vector<CyclotomicNumber>(l, CyclotomicNumber(field)));
  for (std::size_t i = 0; i < l; ++i) rhs[i][i] = CyclotomicNumber(field, 1);
  // Column i holds the alphas that isolate point i.
  const Matrix alpha = solve_exact(vandermonde_rows(field, betas), std::move(rhs));

  SectionDecomposition zero = SectionDecomposition::zero(d, variables, top);
  std::vector<TruncatedSeries> components = zero.components();
  for (std::size_t i = 0; i < l; ++i) {
    if (orders[i] > jets[i].bound()) {
      throw ArgumentError(fmt::format("jet {} is only known modulo m^{}, asked for m^{}", i, jets[i].bound(), orders[i]));
    }
    const TruncatedSeries lifted = jets[i].truncated(orders[i]).with_bound(top);
    if (lifted.is_zero()) continue;
    for (std::size_t c = 0; c < l; ++c) components[c] += lifted * alpha[c][i];
  }
  return SectionDecomposition(d, std::move(components));
}

SectionDecomposition case3_construct(int d, const TruncatedSeries& jet, int order) {
  if (order < 1) throw ArgumentError("jet order must be positive");
  if (order > jet.bound()) {
    throw ArgumentError(fmt::format("jet is only known modulo m^{}, asked for m^{}", jet.bound(), order));
  }
  if (jet.field()->order() != d) throw ArgumentError("jet coefficients must lie in Q(e_d)");
  return SectionDecomposition(d, decompose_jet_ramified(jet.truncated(order), d));
}

TruncatedSeries evaluate_at_ramification_point(const SectionDecomposition& s,
                                               const std::vector<std::string>& cover_variables, int order) {
  return reassemble_ramified(s.components(), s.degree(), cover_variables, order);
}

std::vector<TwistRequirement> twist_requirements(const SectionDecomposition& s, int order) {
  std::vector<TwistRequirement> out;
  for (int q = 0; q < s.degree(); ++q) {
    out.push_back({q, s.component(q).max_degree(), std::max(order - 1 - q, -1)});
  }
  return out;
}

std::vector<JetObstruction> jet_obstructions(const SectionDecomposition& s, const PositivityProfile& profile) {
  std::vector<JetObstruction> out;
  for (int q = 0; q < s.degree(); ++q) {
    const Int need = s.component(q).max_degree();
    if (need < 0) continue;
    const Int have = profile.at(q).jet;
    if (have < need) out.push_back({q, need, have});
  }
  return out;
}

}  // namespace cyccov

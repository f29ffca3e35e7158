#pragma once

// Toy local models of a degree-d cyclic covering. The base is an affine germ
// with coordinates v_1..v_n and every truncated series is available as a
// section of every twist L - qM. What is checked is that the sections built
// from the twists have exactly the prescribed jets; whether an actual bundle
// has enough sections is the job of the criteria engine.

#include <span>
#include <string>
#include <vector>

#include "cyccov/criteria.hpp"
#include "cyccov/cyclotomic.hpp"
#include "cyccov/truncated_series.hpp"

namespace cyccov {

/// s = sum_q t^q pi^*s_q for q = 0..d-1, t the tautological section.
///
/// Near an unbranched orbit t is a unit and is trivialized to 1 at the
/// reference point, so the deck transformation phi^beta acts on the q-th
/// summand by e^{q beta}. Near the ramification divisor t = u_1.
class SectionDecomposition {
 public:
  /// Components must share variables and bound, with coefficients in Q(e_d).
  SectionDecomposition(int d, std::vector<TruncatedSeries> components);

  static SectionDecomposition zero(int d, std::vector<std::string> variables, int bound);

  int degree() const { return d_; }
  const std::vector<TruncatedSeries>& components() const { return components_; }
  const TruncatedSeries& component(int q) const { return components_.at(static_cast<std::size_t>(q)); }

  friend bool operator==(const SectionDecomposition&, const SectionDecomposition&) = default;

 private:
  int d_;
  std::vector<TruncatedSeries> components_;
};

/// Solves
///   a_1 + ... + a_l = [rhs == 0]
///   a_1 + e^{b_j} a_2 + ... + e^{(l-1) b_j} a_l = [rhs == j-1],  j = 2..l
/// exactly in Q(e_d), for betas = (b_2, ..., b_l). The default right-hand side
/// is the first unit vector.
///
/// Throws SingularSystemError when 0, b_2, ..., b_l are not distinct mod d.
std::vector<CyclotomicNumber> vandermonde_solve(int d, std::span<const Int> betas, int rhs_index = 0);

/// Rows of the above system minus the right-hand side, at the given alphas.
std::vector<CyclotomicNumber> vandermonde_residual(int d, std::span<const Int> betas,
                                                   std::span<const CyclotomicNumber> alphas, int rhs_index = 0);

/// u_i -> v_i; other names get a "v_" prefix.
std::vector<std::string> base_variables(const std::vector<std::string>& cover_variables);

/// Splits a jet in u-coordinates at a ramification point, where the covering is
/// (u_1, ..., u_n) -> (u_1^d, u_2, ..., u_n). Component q collects the terms
/// with u_1-exponent = q mod d, written in v-coordinates via v_1 = u_1^d, so
/// that jet = sum_q u_1^q · component_q(u_1^d, u_2, ...).
std::vector<TruncatedSeries> decompose_jet_ramified(const TruncatedSeries& jet, int d);

/// sum_q u_1^q · component_q(u_1^d, u_2, ..., u_n) modulo m^bound.
TruncatedSeries reassemble_ramified(std::span<const TruncatedSeries> components, int d,
                                    const std::vector<std::string>& cover_variables, int bound);

/// Jet of s at phi^beta of the reference point: sum_q e^{q beta} s_q.
TruncatedSeries evaluate_at_orbit_point(const SectionDecomposition& s, Int beta);

/// (phi^power)^* s: component q is multiplied by e^{q power}.
SectionDecomposition deck_transform(const SectionDecomposition& s, Int power);

SectionDecomposition operator+(const SectionDecomposition& a, const SectionDecomposition& b);

/// Product in the unbranched trivialization, where t^d = 1: t-exponents add mod d.
SectionDecomposition multiply_unramified(const SectionDecomposition& a, const SectionDecomposition& b);

/// Separates l points y_i = phi^{betas[i]}(y) of one unbranched orbit: a
/// section whose jet modulo m^{orders[i]} at y_i is jets[i]. Each target jet
/// is lifted to order max(orders) and spread over the components
/// s_0..s_{l-1} by the Vandermonde solution for its unit vector.
SectionDecomposition case2_construct(int d, std::span<const Int> betas, std::span<const TruncatedSeries> jets,
                                     std::span<const int> orders);

/// Section with the prescribed jet modulo m^order at a ramification point;
/// component q is the q-th piece of decompose_jet_ramified.
SectionDecomposition case3_construct(int d, const TruncatedSeries& jet, int order);

/// Jet of s at the ramification point in u-coordinates modulo m^order.
TruncatedSeries evaluate_at_ramification_point(const SectionDecomposition& s,
                                               const std::vector<std::string>& cover_variables, int order);

struct TwistRequirement {
  Int q;
  /// Jet order L - qM needs to produce component q; -1 if the component is zero.
  Int required;
  /// order - 1 - q: what the criterion asks of L - qM for this order.
  Int nominal;
};

std::vector<TwistRequirement> twist_requirements(const SectionDecomposition& s, int order);

struct JetObstruction {
  Int q;
  Int required;
  Int available;
};

/// Components that the twists of the profile cannot generate.
std::vector<JetObstruction> jet_obstructions(const SectionDecomposition& s, const PositivityProfile& profile);

}  // namespace cyccov

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/rational.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

using IntVector = std::vector<int>;

/// A multiset of nonzero vectors summing to a target, blocks in weakly
/// decreasing graded-lex order (equal blocks are contiguous).
struct VectorPartition {
  std::vector<IntVector> blocks;

  std::size_t length() const { return blocks.size(); }
  /// prod over distinct blocks of (multiplicity)!
  BigInt multiplicity_factorial() const;
  friend bool operator==(const VectorPartition&, const VectorPartition&) = default;
};

/// All partitions of H; H = 0 yields the single empty partition.
std::vector<VectorPartition> vector_partitions(const IntVector& target);

/// P(d, t, x) = 1 + sum_{E, m} P_{E,m}(d) t^m x^E together with the upper
/// limit K(d) of the rising product prod_{t=0}^{K(d)} P(d, t, x).
/// Coefficients P_{E,m} and K are polynomials in the parameters d_0..d_r.
struct RisingProductSpec {
  std::vector<std::string> params{"d"};
  std::size_t num_x = 1;
  MultiPoly bound = MultiPoly::variable(1, 0);
  std::map<std::pair<IntVector, int>, MultiPoly> table;

  std::size_t num_params() const { return params.size(); }
  /// Adds c * t^m x^E to P; `c` must be a polynomial in the parameters.
  void add(const IntVector& exponent, int t_power, const MultiPoly& c);
  /// Convenience for one-parameter specs.
  void add(const IntVector& exponent, int t_power, const UniPoly& c);
  /// The support I_P(E) = { m : P_{E,m} != 0 }.
  std::vector<int> support(const IntVector& exponent) const;
  const MultiPoly* entry(const IntVector& exponent, int t_power) const;
  /// Throws invalid_input on arity mismatches or a nonzero constant x-term.
  void validate() const;
};

/// Coefficient of x^H in the rising product as a polynomial in the parameters,
/// valid wherever K(d) >= -1.
MultiPoly stirling_coefficient(const RisingProductSpec& spec, const IntVector& target);
/// One-parameter view of stirling_coefficient.
UniPoly stirling_coefficient_univariate(const RisingProductSpec& spec, const IntVector& target);

/// Result of the closed formula for P = 1 + sum_s y^{E_s} x_s:
///   coefficient of x^H = multinomial_product * m_lambda(y_0..y_v).
struct SimpleCoefficient {
  BigInt multinomial_product;
  /// Multinomial of the H-entries sharing each exponent value.
  std::map<int, BigInt> group_multinomials;
  WeakPartition lambda;
};
/// Throws invalid_input when some H_s = 0 or lengths differ.
SimpleCoefficient simple_coefficient(const IntVector& exponents, const IntVector& target);

/// Integer linear form W on exponent vectors.
struct LinearForm {
  std::vector<int> weights;
  long operator()(const IntVector& v) const;
};

/// W(H) + |H|
long degree_bound(const LinearForm& form, const IntVector& target);

struct LeadingCoefficient {
  long bound = 0;
  /// Coefficient of d^bound in the Stirling coefficient (zero when not attained).
  Rational coefficient;
  /// The criterion for the bound being attained for every H holds.
  bool sharp = false;
};

/// Requires a one-parameter spec with linear K; throws invalid_bound when some
/// table entry has deg_(d,t) P_{E,m}(d) t^m > W(E).
LeadingCoefficient leading_coefficient(const RisingProductSpec& spec, const LinearForm& form, const IntVector& target);

/// Brute-force expansion of prod_{t=0}^{K(params)} P(params, t, x), truncated.
/// K(params) = -1 gives 1; K(params) < -1 throws out_of_domain.
MultiPoly direct_rising_oracle(const RisingProductSpec& spec, std::span<const long> params,
                               const TruncationPolicy& policy);

}  // namespace cpold

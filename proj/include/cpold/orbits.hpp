#pragma once

#include <optional>
#include <vector>

#include "cpold/multipoly.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

/// A composition u of n: multiplicities of the distinct values of a weight vector.
using OrbitType = std::vector<int>;
/// Weakly increasing (d_1 <= ... <= d_n).
using IncreasingWeakPartition = std::vector<int>;

/// All 2^{n-1} compositions of n: more parts first, then lexicographically decreasing.
std::vector<OrbitType> orbit_types(int n);

/// Multiplicity pattern of the distinct values, in increasing value order.
OrbitType orbit_type_of(const IncreasingWeakPartition& values);

/// O_u(d) by nested ranges over the gaps t_j; in lexicographic order.
std::vector<IncreasingWeakPartition> enumerate_orbit(const OrbitType& u, long d);

/// n! / prod u_j!
long orbit_size(const OrbitType& u);

/// prod over the distinct permutations w of `values` of (1 + sum w_i x_i),
/// written as a polynomial in e_1..e_n. With a policy the x-product is truncated
/// first (x-degree k corresponds to e-weight k).
MultiPoly orbit_term(const IncreasingWeakPartition& values);
MultiPoly orbit_term(const IncreasingWeakPartition& values, const TruncationPolicy& policy);

/// A symmetric polynomial in x_1..x_n rewritten as a polynomial in e_1..e_n.
MultiPoly to_elementary_variables(const MultiPoly& symmetric);

/// Whether the product of all orbit terms over all u equals chern_direct(n, d)
/// in the e variables, both truncated at `policy.max_total_degree`.
bool orbit_factorization_check(int n, long d, const TruncationPolicy& policy);

struct QuasiPolynomialFit {
  long period = 0;
  /// One polynomial per residue class d mod period.
  std::vector<UniPoly> constituents;
  long verified_up_to = 0;
};

/// Smallest period p dividing prod_j (u_j + ... + u_s) for which |O_u(d)|,
/// d = 0..d_max, agrees with a polynomial of degree <= s-1 on each residue class,
/// every class carrying at least one guard point. nullopt when none fits.
std::optional<QuasiPolynomialFit> fit_orbit_count(const OrbitType& u, long d_max);

}  // namespace cpold

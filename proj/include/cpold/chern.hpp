#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/rational.hpp"
#include "cpold/symfunc.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

class ChernCache;

struct ChernQuery {
  int n = 1;
  int k = 0;
  Basis basis = Basis::monomial;
};

/// c_k(Pol^d(C^n)) with coefficients as polynomials in d.
struct ChernPolynomial {
  ChernQuery query;
  BasisExpansion<UniPoly> terms;
  int degree_bound_used = 0;
  std::vector<long> samples_used;
};

/// prod over (d_1..d_n) in N^n with sum d of (1 + sum d_i x_i), truncated.
/// d = -1 and d = 0 both give 1; d < -1 throws out_of_domain.
MultiPoly chern_direct(int n, long d, const TruncationPolicy& policy);

/// Smallest d0 >= 0 with binom(d0+n-1, n-1) >= k.
long vanishing_threshold(int n, int k);

/// Interpolates the monomial coefficients of c_k from d = -1..nk-1, checks them
/// at d = nk, then converts exactly to the requested basis. Monomial results are
/// memoised in-process and, when `cache` is given, persisted there.
ChernPolynomial chern_interpolated(const ChernQuery& query, ChernCache* cache = nullptr);

/// Evaluates every coefficient at a concrete d.
BasisExpansion<Rational> evaluate_at(const ChernPolynomial& poly, long d);

/// (j, e^d_j) for j = 0..floor((d+1)/2): Schur coefficients of c_{d+1}(Pol^d(C^2)).
std::vector<std::pair<int, BigInt>> euler_c2_closed(long d);

/// Coefficient of e1^H1 e2^H2 in c(Pol^{2 delta + 1}(C^2)) as a polynomial in delta.
UniPoly odd_grouped_coefficient(int h1, int h2);

struct LeadingTerm {
  Rational coefficient;
  int exponent = 0;
  bool conjectural = false;
};
/// Predicted leading term of the coefficient of `index` in c_{|index|}(Pol^d(C^n)).
/// Needs n >= 2; the power-sum basis is not covered (both throw unsupported).
LeadingTerm leading_term(const ChernQuery& query, const Partition& index);

struct ConjectureRow {
  std::string label;
  std::string predicted;
  std::string observed;
  bool agrees = false;
};
/// Observed vs predicted values for the open statements about c(Pol^d(C^n)):
/// e-basis leading terms for n >= 3 and polynomiality in n at fixed (k, d).
std::vector<ConjectureRow> conjecture_report(int max_n, int max_k);

}  // namespace cpold

#pragma once

#include <map>

#include "cpold/partition.hpp"
#include "cpold/rational.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

/// Unsigned Stirling number of the first kind [n, k].
BigInt stirling_first(long n, long k);
/// Stirling number of the second kind {n, k}.
BigInt stirling_second(long n, long k);

/// Second-order Eulerian numbers, indexed so that
///   [d+1, d+1-h] = sum_{j=1..h} E2(h, j) * binom(d+j, 2h).
/// Values are obtained by solving that identity triangularly; zero outside 1 <= j <= h.
BigInt eulerian_second(long h, long j);

/// Polynomial F_q(v) with F_q(v) = sum_{k=0..v} k^q for every v >= -1.
UniPoly faulhaber(int q);

/// Augmented monomial m~_lambda = mult(lambda)! m_lambda written in power sums:
/// integer coefficients, coefficient 1 on p_lambda itself.
using PowerSumExpansion = std::map<Partition, BigInt>;
PowerSumExpansion aug_monomial_power_sums(const Partition& lambda);

/// M~_lambda(v) = m~_lambda(0, 1, ..., v) as a polynomial in v, valid for v >= -1.
/// Memoised per partition.
UniPoly M_tilde(const WeakPartition& lambda);
/// M~_lambda / mult(lambda)!
UniPoly M_plain(const WeakPartition& lambda);

}  // namespace cpold

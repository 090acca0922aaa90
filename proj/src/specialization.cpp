#include "cpold/specialization.hpp"

#include <mutex>

#include "cpold/error.hpp"
#include "cpold/interpolate.hpp"

namespace cpold {

BigInt stirling_first(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // Row-by-row recurrence [n+1, k] = n [n, k] + [n, k-1].
  std::vector<BigInt> row{1};
  for (long i = 0; i < n; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] * i;
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt stirling_second(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  // {n+1, k} = k {n, k} + {n, k-1}.
  std::vector<BigInt> row{1};
  for (long i = 0; i < n; ++i) {
    std::vector<BigInt> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] * static_cast<long>(j);
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt eulerian_second(long h, long j) {
  if (h < 1 || j < 1 || j > h) return 0;
  // At d = 2h - i only the terms j >= i survive, so solving for j = h, h-1, ...
  // in turn is a triangular system.
  std::vector<BigInt> e(static_cast<std::size_t>(h) + 1, 0);
  for (long target = h; target >= 1; --target) {
    const long d = 2 * h - target;
    BigInt rest = stirling_first(d + 1, d + 1 - h);
    for (long jj = target + 1; jj <= h; ++jj) rest -= e[static_cast<std::size_t>(jj)] * binomial(d + jj, 2 * h);
    // binom(d + target, 2h) = binom(2h, 2h) = 1
    e[static_cast<std::size_t>(target)] = rest;
  }
  return e[static_cast<std::size_t>(j)];
}

UniPoly faulhaber(int q) {
  if (q < 0) throw Error(ErrorKind::invalid_input, "negative Faulhaber exponent");
  static std::mutex mutex;
  static std::map<int, UniPoly> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  // Degree q+1: q+2 samples from v=-1 plus one guard.
  std::vector<SamplePoint> pts;
  BigInt sum = 0;
  pts.push_back({-1, 0});
  for (long v = 0; v <= q + 1; ++v) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(q));
    sum += term;
    pts.push_back({v, sum});
  }
  return cache.emplace(q, interpolate(pts, q + 1)).first->second;
}

namespace {

Partition to_partition(std::vector<int> v) {
  return Partition(WeakPartition::sorted(std::move(v)).parts());
}

// m~ for an unsorted list of positive parts, via
//   m~_{mu + (a)} = p_a m~_mu - sum_i m~_{mu with mu_i -> mu_i + a}.
const PowerSumExpansion& aug_cached(const Partition& lambda) {
  static std::recursive_mutex mutex;
  static std::map<Partition, PowerSumExpansion> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  PowerSumExpansion out;
  if (lambda.empty()) {
    out.emplace(Partition(), 1);
  } else {
    std::vector<int> rest(lambda.parts().begin(), lambda.parts().end() - 1);
    const int a = lambda.parts().back();
    for (const auto& [mu, c] : aug_cached(to_partition(rest))) {
      std::vector<int> merged = mu.parts();
      merged.push_back(a);
      out[to_partition(merged)] += c;
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      std::vector<int> bumped = rest;
      bumped[i] += a;
      for (const auto& [mu, c] : aug_cached(to_partition(bumped))) out[mu] -= c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
  return cache.emplace(lambda, std::move(out)).first->second;
}

}  // namespace

PowerSumExpansion aug_monomial_power_sums(const Partition& lambda) { return aug_cached(lambda); }

UniPoly M_tilde(const WeakPartition& lambda) {
  static std::mutex mutex;
  static std::map<WeakPartition, UniPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(lambda); it != cache.end()) return it->second;
  }
  const WeakPartition star = lambda.nonzero_part();
  const int zeros = lambda.zero_count();
  UniPoly core;
  for (const auto& [mu, c] : aug_cached(Partition(star.parts()))) {
    UniPoly t{Rational(c)};
    for (int part : mu.parts()) t *= faulhaber(part);
    core += t;
  }
  // Zero parts: binom(v+1-l(star), m0) * m0! = falling factorial of length m0.
  const UniPoly prefactor =
      UniPoly::falling_factorial(Rational(1 - static_cast<long>(star.length())), zeros);
  UniPoly value = core * prefactor;
  std::lock_guard lock(mutex);
  return cache.emplace(lambda, std::move(value)).first->second;
}

UniPoly M_plain(const WeakPartition& lambda) {
  return M_tilde(lambda) * Rational(1, lambda.multiplicity_factorial());
}

}  // namespace cpold

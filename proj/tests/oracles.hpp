#pragma once
// Brute-force reference computations, deliberately independent of the library's
// algorithms. They share only the arithmetic and polynomial containers.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/rational.hpp"

namespace oracle {

using cpold::BigInt;
using cpold::Rational;

// Standard Young tableaux by removing corners recursively.
inline BigInt syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  static std::map<std::vector<int>, BigInt> memo;
  if (auto it = memo.find(shape); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i + 1 < shape.size() && shape[i + 1] == shape[i]) continue;
    auto smaller = shape;
    --smaller[i];
    total += syt_count(smaller);
  }
  memo.emplace(shape, total);
  return total;
}

// Kostka number K_{lambda, 1^k}: fillings counted as SYT, computed by building
// the shape one box at a time (Pieri with e_1).
inline BigInt kostka_e1_power(const std::vector<int>& shape) { return syt_count(shape); }

// M~_lambda(v) = sum over injective maps from the parts to {0..v} of prod y^part.
inline BigInt aug_monomial_at(const std::vector<int>& parts, long v) {
  std::vector<bool> used(static_cast<std::size_t>(v + 1), false);
  std::function<BigInt(std::size_t)> rec = [&](std::size_t i) -> BigInt {
    if (i == parts.size()) return 1;
    BigInt total = 0;
    for (long y = 0; y <= v; ++y) {
      if (used[y]) continue;
      used[y] = true;
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(y), static_cast<unsigned long>(parts[i]));
      total += p * rec(i + 1);
      used[y] = false;
    }
    return total;
  };
  return rec(0);
}

// Unsigned Stirling numbers of the first kind from the rising factorial x(x+1)...(x+n-1).
inline BigInt stirling_first(long n, long k) {
  std::vector<BigInt> poly{1};
  for (long i = 0; i < n; ++i) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] += poly[j] * i;
    }
    poly = std::move(next);
  }
  return k >= 0 && k < static_cast<long>(poly.size()) ? poly[k] : BigInt(0);
}

// Stirling numbers of the second kind by counting surjections / k!.
inline BigInt stirling_second(long n, long k) {
  if (n == 0 && k == 0) return 1;
  if (k <= 0 || k > n) return 0;
  BigInt s = 0;
  for (long j = 0; j <= k; ++j) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(n));
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
    s += ((k - j) % 2 ? -1 : 1) * b * p;
  }
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return s / f;
}

// Weakly increasing n-tuples summing to d, grouped by multiplicity pattern.
inline std::map<std::vector<int>, std::vector<std::vector<int>>> orbits_brute(int n, int d) {
  std::map<std::vector<int>, std::vector<std::vector<int>>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int lo, int left) {
    if (static_cast<int>(cur.size()) == n) {
      if (left != 0) return;
      std::vector<int> u;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (i == 0 || cur[i] != cur[i - 1])
          u.push_back(1);
        else
          ++u.back();
      }
      out[u].push_back(cur);
      return;
    }
    for (int v = lo; v <= left; ++v) {
      cur.push_back(v);
      rec(v, left - v);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

// Full (untruncated) product of (1 + sum w_i x_i) over all weight vectors w with |w| = d.
inline cpold::MultiPoly chern_product(int n, int d, int max_degree) {
  cpold::MultiPoly acc = cpold::MultiPoly::constant(static_cast<std::size_t>(n), 1);
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      w[i] = left;
      cpold::MultiPoly f = cpold::MultiPoly::constant(static_cast<std::size_t>(n), 1);
      for (int j = 0; j < n; ++j) f += cpold::MultiPoly::variable(static_cast<std::size_t>(n), j, w[j]);
      acc = (acc * f).truncated(cpold::TruncationPolicy{max_degree, {}});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (d >= 1) rec(0, d);
  return acc;
}

// Semistandard tableaux count K_{lambda,mu} by row-by-row filling.
inline long kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  // Fill value v = 1..l(mu) as a horizontal strip of size mu[v-1].
  std::function<long(std::vector<int>, std::size_t)> rec = [&](std::vector<int> shape, std::size_t v) -> long {
    if (v == mu.size()) return shape == lambda ? 1 : 0;
    long total = 0;
    std::vector<int> next = shape;
    next.resize(lambda.size(), 0);
    std::function<void(std::size_t, int)> strip = [&](std::size_t row, int left) {
      if (row == lambda.size()) {
        if (left == 0) total += rec(next, v + 1);
        return;
      }
      const int base = row < shape.size() ? shape[row] : 0;
      const int cap_above = row == 0 ? lambda[0] : (row - 1 < shape.size() ? shape[row - 1] : 0);
      const int cap = std::min(lambda[row], cap_above);
      for (int add = 0; base + add <= cap && add <= left; ++add) {
        next[row] = base + add;
        strip(row + 1, left - add);
      }
      next[row] = base;
    };
    strip(0, mu[v]);
    return total;
  };
  return rec(std::vector<int>(lambda.size(), 0), 0);
}

}  // namespace oracle

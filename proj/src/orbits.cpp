#include "cpold/orbits.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "cpold/chern.hpp"
#include "cpold/error.hpp"
#include "cpold/interpolate.hpp"
#include "cpold/symfunc.hpp"

namespace cpold {

namespace {

void check_type(const OrbitType& u) {
  if (u.empty()) throw Error(ErrorKind::invalid_input, "orbit type must be nonempty");
  for (int x : u)
    if (x < 1) throw Error(ErrorKind::invalid_input, "orbit type parts must be positive");
}

std::vector<std::string> e_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace

std::vector<OrbitType> orbit_types(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "n must be positive");
  std::vector<OrbitType> out;
  OrbitType cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= left; ++p) {
      cur.push_back(p);
      rec(left - p);
      cur.pop_back();
    }
  };
  rec(n);
  std::stable_sort(out.begin(), out.end(), [](const OrbitType& a, const OrbitType& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a > b;
  });
  return out;
}

OrbitType orbit_type_of(const IncreasingWeakPartition& values) {
  OrbitType u;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] < values[i - 1]) throw Error(ErrorKind::invalid_input, "values must be weakly increasing");
    if (i == 0 || values[i] != values[i - 1])
      u.push_back(1);
    else
      ++u.back();
  }
  return u;
}

long orbit_size(const OrbitType& u) {
  const long n = std::accumulate(u.begin(), u.end(), 0L);
  BigInt r = factorial(n);
  for (int x : u) r /= factorial(x);
  return r.get_si();
}

std::vector<IncreasingWeakPartition> enumerate_orbit(const OrbitType& u, long d) {
  check_type(u);
  const std::size_t s = u.size();
  std::vector<IncreasingWeakPartition> out;
  if (d < 0) return out;
  // N_j = u_j + ... + u_s; block j takes the value v_j = v_{j-1} + t_j + 1 (v_1 = t_1).
  std::vector<long> N(s + 1, 0);
  for (std::size_t j = s; j-- > 0;) N[j] = N[j + 1] + u[j];
  // Least budget the blocks after j+1 need when all their gaps are zero.
  std::vector<long> min_after(s + 1, 0);
  for (std::size_t j = s; j-- > 0;) min_after[j] = (j + 1 < s ? N[j + 1] : 0) + min_after[j + 1];

  std::vector<long> t(s, 0);
  std::function<void(std::size_t, long)> rec = [&](std::size_t j, long budget) {
    if (j + 1 == s) {
      if (budget % u[j] != 0) return;
      t[j] = budget / u[j];
      IncreasingWeakPartition values;
      long v = -1;
      for (std::size_t i = 0; i < s; ++i) {
        v += t[i] + 1;
        values.insert(values.end(), static_cast<std::size_t>(u[i]), static_cast<int>(v));
      }
      out.push_back(std::move(values));
      return;
    }
    const long top = (budget - N[j + 1] - min_after[j + 1]) / N[j];
    for (long tj = 0; budget - N[j + 1] - min_after[j + 1] >= 0 && tj <= top; ++tj) {
      t[j] = tj;
      rec(j + 1, budget - N[j] * tj - N[j + 1]);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

MultiPoly to_elementary_variables(const MultiPoly& symmetric) {
  const int n = static_cast<int>(symmetric.num_vars());
  MultiPoly out(symmetric.num_vars(), e_names(n));
  if (symmetric.is_zero()) return out;
  for (const auto& [nu, c] : expand_in_basis(symmetric, Basis::elementary).terms) {
    Exponent h(static_cast<std::size_t>(n), 0);
    for (int part : nu.parts()) ++h[part - 1];
    out.add_term(h, c);
  }
  return out;
}

namespace {

MultiPoly orbit_x_product(const IncreasingWeakPartition& values, const TruncationPolicy* policy) {
  const std::size_t n = values.size();
  if (n == 0) throw Error(ErrorKind::invalid_input, "empty weight vector");
  orbit_type_of(values);
  MultiPoly acc = MultiPoly::constant(n, 1);
  std::vector<int> w = values;
  std::vector<Rational> coeffs(n);
  TruncationPolicy unbounded{std::numeric_limits<int>::max(), {}};
  do {
    for (std::size_t i = 0; i < n; ++i) coeffs[i] = w[i];
    multiply_by_linear(acc, coeffs, policy ? *policy : unbounded);
  } while (std::next_permutation(w.begin(), w.end()));
  return acc;
}

}  // namespace

MultiPoly orbit_term(const IncreasingWeakPartition& values) {
  return to_elementary_variables(orbit_x_product(values, nullptr));
}

MultiPoly orbit_term(const IncreasingWeakPartition& values, const TruncationPolicy& policy) {
  return to_elementary_variables(orbit_x_product(values, &policy));
}

bool orbit_factorization_check(int n, long d, const TruncationPolicy& policy) {
  if (d < 0) throw Error(ErrorKind::out_of_domain, "d must be non-negative");
  const TruncationPolicy x_policy{policy.max_total_degree, {}};
  TruncationPolicy e_policy{policy.max_total_degree, {}};
  for (int i = 1; i <= n; ++i) e_policy.weights.push_back(i);

  MultiPoly lhs = MultiPoly::constant(static_cast<std::size_t>(n), 1);
  lhs.set_names(e_names(n));
  for (const auto& u : orbit_types(n))
    for (const auto& values : enumerate_orbit(u, d)) lhs = multiply(lhs, orbit_term(values, x_policy), e_policy);
  const MultiPoly rhs = to_elementary_variables(chern_direct(n, d, x_policy)).truncated(e_policy);
  return lhs.truncated(e_policy) == rhs;
}

std::optional<QuasiPolynomialFit> fit_orbit_count(const OrbitType& u, long d_max) {
  check_type(u);
  const int s = static_cast<int>(u.size());
  long m = 1;
  long tail = 0;
  for (int j = s; j-- > 0;) {
    tail += u[j];
    m *= tail;
  }
  std::vector<long> counts;
  for (long d = 0; d <= d_max; ++d) counts.push_back(static_cast<long>(enumerate_orbit(u, d).size()));

  for (long p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    QuasiPolynomialFit fit{p, {}, d_max};
    bool ok = true;
    for (long r = 0; r < p && ok; ++r) {
      std::vector<SamplePoint> pts;
      for (long d = r; d <= d_max; d += p) pts.push_back({d, Rational(counts[d])});
      if (static_cast<int>(pts.size()) < s + 1) {
        ok = false;
        break;
      }
      try {
        fit.constituents.push_back(interpolate(pts, s - 1));
      } catch (const Error&) {
        ok = false;
      }
    }
    if (ok) return fit;
  }
  return std::nullopt;
}

}  // namespace cpold

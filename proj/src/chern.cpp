#include "cpold/chern.hpp"

#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cpold/cache.hpp"
#include "cpold/error.hpp"
#include "cpold/interpolate.hpp"
#include "cpold/rising.hpp"
#include "cpold/specialization.hpp"

namespace cpold {

MultiPoly chern_direct(int n, long d, const TruncationPolicy& policy) {
  if (n < 1) throw Error(ErrorKind::invalid_input, "n must be positive");
  if (d < -1) throw Error(ErrorKind::out_of_domain, "c(Pol^d) needs d >= -1");
  MultiPoly acc = MultiPoly::constant(static_cast<std::size_t>(n), 1);
  if (d <= 0) return acc;
  // Odometer over weights (d_1..d_n) with d_1 + ... + d_n = d.
  std::vector<long> w(static_cast<std::size_t>(n), 0);
  w[0] = d;
  std::vector<Rational> coeffs(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 0; i < n; ++i) coeffs[i] = w[i];
    multiply_by_linear(acc, coeffs, policy);
    if (n == 1) break;
    // Next composition in reverse-lex order.
    int i = n - 2;
    while (i >= 0 && w[i] == 0) --i;
    if (i < 0) break;
    --w[i];
    const long tail = w[n - 1] + 1;
    w[n - 1] = 0;
    w[i + 1] = tail;
  }
  return acc;
}

long vanishing_threshold(int n, int k) {
  if (n == 1 && k > 1) throw Error(ErrorKind::invalid_input, "c_k(Pol^d(C^1)) vanishes identically for k > 1");
  long d0 = 0;
  while (binomial(d0 + n - 1, n - 1) < k) ++d0;
  return d0;
}

namespace {

// d = -1 is a free zero of every coefficient once n >= 2. For n = 1 the
// product is 1 + dx, which does not vanish there, so sampling starts at 0.
std::vector<long> sample_points(int n, int k) {
  const long first = n == 1 ? 0 : -1;
  std::vector<long> samples;
  for (long d = first; d <= first + n * k + 1; ++d) samples.push_back(d);
  return samples;
}

BasisExpansion<UniPoly> compute_monomial(int n, int k) {
  const int bound = n * k;
  const std::vector<long> samples = sample_points(n, k);
  const TruncationPolicy policy{k, {}};

  std::vector<std::future<MultiPoly>> jobs;
  for (long d : samples)
    jobs.push_back(std::async(std::launch::async, [=] { return chern_direct(n, d, policy).homogeneous_component(k); }));

  const auto indices = enumerate_partitions(k, n);
  std::map<Partition, std::vector<SamplePoint>> points;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const MultiPoly part = jobs[s].get();
    for (const auto& mu : indices) {
      Exponent e(static_cast<std::size_t>(n), 0);
      for (std::size_t i = 0; i < mu.length(); ++i) e[i] = mu[i];
      points[mu].push_back({samples[s], part.coefficient(e)});
    }
  }
  BasisExpansion<UniPoly> out;
  out.basis = Basis::monomial;
  out.num_vars = n;
  for (const auto& [mu, pts] : points) {
    try {
      out.add(mu, interpolate(pts, bound));
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::inconsistent_data) throw;
      throw Error(ErrorKind::internal_error, "interpolation guard failed for " + mu.to_string());
    }
  }
  return out;
}

std::mutex memo_mutex;
std::map<std::pair<int, int>, BasisExpansion<UniPoly>> memo;

}  // namespace

ChernPolynomial chern_interpolated(const ChernQuery& query, ChernCache* cache) {
  if (query.n < 1 || query.k < 0) throw Error(ErrorKind::invalid_input, "need n >= 1 and k >= 0");
  const auto key = std::make_pair(query.n, query.k);
  std::optional<BasisExpansion<UniPoly>> monomial;
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) monomial = it->second;
  }
  if (!monomial && cache) monomial = cache->load(query.n, query.k);
  if (!monomial) {
    monomial = compute_monomial(query.n, query.k);
    if (cache) cache->store(query.n, query.k, *monomial);
  }
  {
    std::lock_guard lock(memo_mutex);
    memo.try_emplace(key, *monomial);
  }

  ChernPolynomial out;
  out.query = query;
  out.degree_bound_used = query.n * query.k;
  out.samples_used = sample_points(query.n, query.k);
  out.terms = convert_basis(*monomial, query.basis);
  return out;
}

BasisExpansion<Rational> evaluate_at(const ChernPolynomial& poly, long d) {
  BasisExpansion<Rational> out;
  out.basis = poly.terms.basis;
  out.num_vars = poly.terms.num_vars;
  for (const auto& [index, c] : poly.terms.terms) out.add(index, c.evaluate(d));
  return out;
}

std::vector<std::pair<int, BigInt>> euler_c2_closed(long d) {
  if (d < 1) throw Error(ErrorKind::invalid_input, "the Euler class formula needs d >= 1");
  auto sign = [](long e) { return e % 2 == 0 ? 1 : -1; };
  auto term = [&](long k) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), BigInt(d).get_mpz_t(), static_cast<unsigned long>(d + 1 - k));
    return BigInt(stirling_first(d, d - k) * p);
  };
  std::vector<std::pair<int, BigInt>> out{{0, 0}};
  for (long j = 1; j <= (d + 1) / 2; ++j) {
    BigInt e = 0;
    for (long k = j - 1; k <= d - j; ++k) e += sign(k + j - 1) * binomial(k, j - 1) * term(k);
    for (long k = d - j + 1; k <= d - 1; ++k)
      e += (sign(k + j - 1) * binomial(k, j - 1) - sign(d + 1 + k - j) * binomial(k, d - j + 1)) * term(k);
    out.emplace_back(static_cast<int>(j), e);
  }
  return out;
}

UniPoly odd_grouped_coefficient(int h1, int h2) {
  if (h1 < 0 || h2 < 0) throw Error(ErrorKind::invalid_input, "H must be non-negative");
  // One factor per orbit {a, d-a} of weights, d = 2 delta + 1, t = a:
  // 1 + d e1 + t(d-t) e1^2 + (d-2t)^2 e2.
  RisingProductSpec spec;
  spec.params = {"delta"};
  spec.num_x = 2;
  const UniPoly delta = UniPoly::monomial(1);
  spec.bound = MultiPoly::variable(1, 0);
  spec.add({1, 0}, 0, delta * Rational(2) + Rational(1));
  spec.add({2, 0}, 1, delta * Rational(2) + Rational(1));
  spec.add({2, 0}, 2, UniPoly(Rational(-1)));
  spec.add({0, 1}, 0, UniPoly(std::vector<Rational>{1, 4, 4}));
  spec.add({0, 1}, 1, UniPoly(std::vector<Rational>{-4, -8}));
  spec.add({0, 1}, 2, UniPoly(Rational(4)));
  return stirling_coefficient_univariate(spec, {h1, h2});
}

LeadingTerm leading_term(const ChernQuery& query, const Partition& index) {
  const int n = query.n;
  // For n = 1 the bundle is the single line of weight d and nothing grows like d^{nk}.
  if (n < 2) throw Error(ErrorKind::unsupported, "leading-term formulas need n >= 2");
  check_basis_index(query.basis, index, n);
  const int w = index.weight();
  const Rational inv_nfact(1, factorial(n));
  LeadingTerm out;
  switch (query.basis) {
    case Basis::monomial: {
      BigInt mu_fact = 1;
      for (int p : index.parts()) mu_fact *= factorial(p);
      out.coefficient = Rational(1, mu_fact) * pow(inv_nfact, static_cast<unsigned>(w));
      out.exponent = n * w;
      break;
    }
    case Basis::schur: {
      const long l = static_cast<long>(index.length());
      BigInt num = 1, den = 1;
      for (long i = 0; i < l; ++i) {
        for (long j = i + 1; j < l; ++j) num *= index[i] - index[j] + j - i;
        den *= factorial(index[i] + l - 1 - i);
      }
      out.coefficient = Rational(num, den) * pow(inv_nfact, static_cast<unsigned>(w));
      out.exponent = n * w;
      break;
    }
    case Basis::elementary: {
      const auto mult = index.multiplicities();
      out.coefficient = 1;
      out.exponent = 0;
      for (int i = 1; i < static_cast<int>(mult.size()); ++i) {
        const int h = mult[i];
        out.coefficient *= Rational(1, factorial(h)) *
                           pow(Rational(factorial(i - 1), factorial(n + i - 1)), static_cast<unsigned>(h));
        out.exponent += h * (n + i - 1);
      }
      const bool e1_power = mult.size() <= 2;
      const bool n2 = n == 2;
      out.conjectural = !(e1_power || n2);
      break;
    }
    case Basis::power:
      throw Error(ErrorKind::unsupported, "no leading-term formula for the power-sum basis");
  }
  return out;
}

std::vector<ConjectureRow> conjecture_report(int max_n, int max_k) {
  std::vector<ConjectureRow> rows;
  auto term_string = [](const Rational& c, int e) { return c.to_string() + " d^" + std::to_string(e); };

  for (int n = 3; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      const auto poly = chern_interpolated({n, k, Basis::elementary});
      for (const auto& nu : enumerate_partitions(k, std::nullopt, n)) {
        const LeadingTerm lt = leading_term({n, k, Basis::elementary}, nu);
        if (!lt.conjectural) continue;
        const UniPoly g = poly.terms.coefficient(nu);
        ConjectureRow row;
        row.label = "leading term of g_" + nu.to_string() + " (n=" + std::to_string(n) + ")";
        row.predicted = term_string(lt.coefficient, lt.exponent);
        row.observed = g.is_zero() ? "0" : term_string(g.leading_coefficient(), g.degree());
        row.agrees = !g.is_zero() && g.degree() == lt.exponent && g.leading_coefficient() == lt.coefficient;
        rows.push_back(std::move(row));
      }
    }
  }

  // Polynomiality in n: for fixed (k, d, nu) sample n = k..k+8 and check that the
  // values are matched by a polynomial of degree <= 7 (one guard point).
  for (int k = 1; k <= std::min(max_k, 3); ++k) {
    for (long d = 1; d <= 3; ++d) {
      for (const auto& nu : enumerate_partitions(k)) {
        std::vector<SamplePoint> pts;
        for (int n = k; n <= k + 8; ++n) {
          const auto top = chern_direct(n, d, TruncationPolicy{k, {}}).homogeneous_component(k);
          const auto e = top.is_zero() ? BasisExpansion<Rational>{} : expand_in_basis(top, Basis::elementary);
          pts.push_back({n, e.coefficient(nu)});
        }
        ConjectureRow row;
        row.label = "polynomial in n: g_" + nu.to_string() + " of c_" + std::to_string(k) + ", d=" + std::to_string(d);
        row.predicted = "fits degree <= 7";
        try {
          row.observed = interpolate(pts, 7).to_string("n");
          row.agrees = true;
        } catch (const Error&) {
          row.observed = "no fit";
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace cpold

#include <doctest.h>

#include "cpold/orbits.hpp"
#include "cpold/rational.hpp"
#include "oracles.hpp"

using namespace cpold;

TEST_CASE("orbit types are the compositions of n") {
  CHECK(orbit_types(1) == std::vector<OrbitType>{{1}});
  CHECK(orbit_types(2) == std::vector<OrbitType>{{1, 1}, {2}});
  CHECK(orbit_types(3) == std::vector<OrbitType>{{1, 1, 1}, {2, 1}, {1, 2}, {3}});
  for (int n = 1; n <= 8; ++n) CHECK(orbit_types(n).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("enumeration of O_u(d)") {
  CHECK(enumerate_orbit({2, 1, 1}, 8) ==
        std::vector<IncreasingWeakPartition>{{0, 0, 1, 7}, {0, 0, 2, 6}, {0, 0, 3, 5}, {1, 1, 2, 4}});
  CHECK(enumerate_orbit({1, 3}, 8).empty());
  for (int n = 1; n <= 5; ++n)
    for (long d = 0; d <= 12; ++d) {
      const auto single = enumerate_orbit({n}, d);
      if (d % n == 0) {
        CHECK(single == std::vector<IncreasingWeakPartition>{IncreasingWeakPartition(n, static_cast<int>(d / n))});
      } else {
        CHECK(single.empty());
      }
    }
}

TEST_CASE("enumeration matches brute force and covers every weight vector") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 12; ++d) {
      const auto brute = oracle::orbits_brute(n, d);
      long weighted = 0;
      for (const auto& u : orbit_types(n)) {
        const auto listed = enumerate_orbit(u, d);
        const auto it = brute.find(u);
        CHECK(listed == (it == brute.end() ? std::vector<IncreasingWeakPartition>{} : it->second));
        for (const auto& v : listed) CHECK(orbit_type_of(v) == u);
        weighted += static_cast<long>(listed.size()) * orbit_size(u);
      }
      CHECK(BigInt(weighted) == binomial(d + n - 1, n - 1));
    }
}

TEST_CASE("orbit terms") {
  const MultiPoly p = orbit_term({1, 1, 4});
  MultiPoly expected(3);
  expected.add_term({0, 0, 0}, 1);
  expected.add_term({1, 0, 0}, 6);
  expected.add_term({2, 0, 0}, 9);
  expected.add_term({0, 1, 0}, 9);
  expected.add_term({3, 0, 0}, 4);
  expected.add_term({1, 1, 0}, 9);
  expected.add_term({0, 0, 1}, 27);
  CHECK(p == expected);
  CHECK(orbit_term({0, 0, 0}) == MultiPoly::constant(3, 1));
  for (int c = 1; c <= 4; ++c) {
    MultiPoly single = MultiPoly::constant(3, 1);
    single.add_term({1, 0, 0}, c);
    CHECK(orbit_term({c, c, c}) == single);
  }
}

TEST_CASE("orbit factorization reproduces the direct product") {
  for (int n = 1; n <= 3; ++n)
    for (long d = 0; d <= 8; ++d) CHECK(orbit_factorization_check(n, d, TruncationPolicy{4, {}}));
  CHECK(orbit_factorization_check(2, 5, TruncationPolicy{4, {}}));
  CHECK(orbit_factorization_check(3, 6, TruncationPolicy{3, {}}));
}

TEST_CASE("orbit counts are quasi-polynomials") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& u : orbit_types(n)) {
      const auto fit = fit_orbit_count(u, 40);
      REQUIRE(fit.has_value());
      long m = 1, tail = 0;
      for (std::size_t j = u.size(); j-- > 0;) {
        tail += u[j];
        m *= tail;
      }
      CHECK(m % fit->period == 0);
      for (long d = 0; d <= 40; ++d)
        CHECK(fit->constituents[static_cast<std::size_t>(d % fit->period)].evaluate(d) ==
              Rational(static_cast<long>(enumerate_orbit(u, d).size())));
    }
  CHECK(fit_orbit_count({1}, 10)->period == 1);
  CHECK(fit_orbit_count({2}, 10)->period == 2);
}

#include <doctest.h>

#include "cpold/enumgeo.hpp"
#include "cpold/error.hpp"
#include "cpold/symfunc.hpp"

using namespace cpold;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::internal_error;
}

}  // namespace

TEST_CASE("Grassmannian integration") {
  const GrassmannianSpec gr24{2, 4};
  CHECK(gr24.volume_partition() == Partition({2, 2}));
  MultiPoly e1_4 = MultiPoly::constant(2, 1);
  for (int i = 0; i < 4; ++i) e1_4 *= elementary_polynomial(1, 2);
  CHECK(grassmann_integral(e1_4, gr24) == 2);
  for (int m = 2; m <= 6; ++m) {
    const GrassmannianSpec gr{2, m + 1};
    CHECK(grassmann_integral(to_x_expansion(Basis::schur, gr.volume_partition(), 2), gr) == 1);
  }
  CHECK(grassmann_integral(elementary_polynomial(1, 2), gr24) == 0);
  MultiPoly skew(2);
  skew.add_term({4, 0}, 1);
  CHECK(kind_of([&] { grassmann_integral(skew, gr24); }) == ErrorKind::not_symmetric);
}

TEST_CASE("Chern classes of Gr_2(C^n)") {
  for (int n = 4; n <= 8; ++n) {
    const MultiPoly c = chern_grassmannian({2, n}, TruncationPolicy{3, {}});
    CHECK(c.constant_term() == 1);
    const auto c1 = expand_in_basis(c.homogeneous_component(1), Basis::elementary);
    CHECK(c1.coefficient(Partition({1})) == n);
    const auto c2 = expand_in_basis(c.homogeneous_component(2), Basis::schur);
    CHECK(c2.coefficient(Partition({2})) == Rational(n * n - n + 2, 2));
    CHECK(c2.coefficient(Partition({1, 1})) == Rational(n * n + n - 6, 2));
    const auto c3 = expand_in_basis(c.homogeneous_component(3), Basis::schur);
    CHECK(c3.coefficient(Partition({2, 1})) == Rational(n * (n * n - 7), 3));
    CHECK(c3.coefficient(Partition({3})) == Rational(n * (n * n - 3 * n + 8), 6));
  }
  // Top Chern class integrates to the Euler characteristic binom(n, k).
  for (int k = 1; k <= 3; ++k)
    for (int n = k; n <= 5; ++n) {
      const GrassmannianSpec gr{k, n};
      const MultiPoly c = chern_grassmannian(gr, TruncationPolicy{gr.dimension(), {}});
      CHECK(grassmann_integral(c, gr) == Rational(binomial(n, k)));
    }
}

TEST_CASE("expected dimension") {
  CHECK(expected_dimension(3, 3, 1) == 0);
  CHECK(expected_dimension(5, 4, 1) == 0);
  CHECK(expected_dimension(4, 4, 1) == 1);
}

TEST_CASE("Sigma degrees") {
  const UniPoly s31 = sigma_degree_symbolic(3, 1);
  const std::vector<Rational> expected{0, Rational(1, 12), Rational(5, 144), Rational(-1, 16), Rational(-25, 576),
                                       Rational(-1, 48), Rational(1, 288), 0, Rational(1, 192)};
  CHECK(s31 == UniPoly(expected));
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 1}, {4, 2}}) {
    const UniPoly p = sigma_degree_symbolic(m, r);
    const LeadingTerm lt = sigma_leading_term(m, r);
    CHECK(p.degree() == lt.exponent);
    CHECK(p.leading_coefficient() == lt.coefficient);
    for (long d = 3; d <= 7; ++d) {
      const auto numeric = sigma_degree(d, m, r);
      CHECK(numeric.value == p.evaluate(d));
      CHECK(numeric.warnings.empty() == (expected_dimension(d, m, r) < 0));
    }
  }
  for (int m = 2; m <= 3; ++m)
    for (long d = 3; d <= 5; ++d) CHECK(sigma_degree(d, m, m - 1).value == Rational(sigma_degree_hyperplane(d, m)));
  CHECK_FALSE(sigma_degree(2, 3, 1).warnings.empty());
}

TEST_CASE("Euler class of Pol^2") {
  for (int r = 0; r <= 3; ++r) {
    const int n = r + 1;
    const int top = n * (n + 1) / 2;
    const MultiPoly e = chern_direct(n, 2, TruncationPolicy{top, {}}).homogeneous_component(top);
    std::vector<int> staircase;
    for (int i = n; i >= 1; --i) staircase.push_back(i);
    BasisExpansion<Rational> expected{Basis::schur, n, {}};
    expected.add(Partition(staircase), Rational(BigInt(1) << n));
    CHECK(expand_in_basis(e, Basis::schur) == expected);
  }
}

TEST_CASE("Fano schemes of lines") {
  CHECK(fano_degree_lines(3, 3, FanoMethod::integral) == 27);
  CHECK(fano_degree_lines(5, 4, FanoMethod::integral) == 2875);
  // Fano surface of a cubic threefold.
  CHECK(fano_degree_lines(3, 4, FanoMethod::closed) == 45);
  CHECK(fano_chi_lines(3, 3, FanoMethod::integral) == 27);
  CHECK(fano_chi_lines(3, 4, FanoMethod::integral) == 27);
  for (int m = 3; m <= 7; ++m)
    for (long delta = 0; delta <= 3; ++delta) {
      const long d = 2L * m - 3 - delta;
      if (d < 3) continue;
      CHECK(fano_degree_lines(d, m, FanoMethod::closed) == fano_degree_lines(d, m, FanoMethod::integral));
      if (delta == 1 || delta == 2)
        CHECK(fano_chi_lines(d, m, FanoMethod::closed) == fano_chi_lines(d, m, FanoMethod::integral));
    }
  CHECK(kind_of([] { fano_degree_lines(9, 3, FanoMethod::closed); }) == ErrorKind::empty_fano);
  CHECK(kind_of([] { fano_degree_lines(2, 3, FanoMethod::closed); }) == ErrorKind::unsupported_degree);
  CHECK(fano_degree_lines(2, 3, FanoMethod::closed, Regime::permissive) == 4);
  CHECK(kind_of([] { fano_chi_lines(3, 3, FanoMethod::closed); }) == ErrorKind::unsupported);
  CHECK(fano_chi_delta2(4, true) == 18);
  CHECK(fano_chi_delta2(4, false) == 27);
}

TEST_CASE("chi / degree ratio for Fano curves") {
  for (int m = 4; m <= 6; ++m) {
    const auto r = chi_deg_ratio_check(m);
    CHECK(r.holds);
    CHECK(r.ratio == BigInt(m + 1) - binomial(2L * m - 3, 2));
  }
  CHECK(chi_deg_ratio_check(4).ratio == -5);
  CHECK(chi_deg_ratio_check(5).ratio == -15);
  CHECK(kind_of([] { chi_deg_ratio_check(3); }) == ErrorKind::unsupported_degree);
}

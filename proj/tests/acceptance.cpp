// Acceptance checks: one line per criterion, exact arithmetic throughout.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "cpold/chern.hpp"
#include "cpold/enumgeo.hpp"
#include "cpold/error.hpp"
#include "cpold/orbits.hpp"
#include "cpold/rising.hpp"
#include "cpold/specialization.hpp"
#include "cpold/symfunc.hpp"
#include "oracles.hpp"

using namespace cpold;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures with a short note; the first few are kept for the report.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (notes_.size() < 4) notes_.push_back(what);
  }
  void note(const std::string& s) { extra_.push_back(s); }
  Outcome outcome() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed";
    for (const auto& n : notes_) os << "; " << n;
    for (const auto& n : extra_) os << "; " << n;
    return {failures_ == 0, os.str()};
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> extra_;
};

const UniPoly d_var = UniPoly::monomial(1);

UniPoly poly(std::initializer_list<long> roots_shift_times, const Rational& scale) {
  // scale * prod (d + a) over the listed shifts
  UniPoly p(scale);
  for (long a : roots_shift_times) p *= d_var + Rational(a);
  return p;
}

UniPoly from_desc(std::initializer_list<long> desc) {
  std::vector<Rational> c(desc.begin(), desc.end());
  std::reverse(c.begin(), c.end());
  return UniPoly(c);
}

UniPoly binom_poly(long shift, int k) { return UniPoly::falling_factorial(Rational(shift), k) * Rational(1, factorial(k)); }

// Coefficient of s_{(a,b)} in a symmetric f(x1, x2): coefficient of x1^{a+1} x2^b in (x1 - x2) f.
Rational schur2_coefficient(const MultiPoly& f, int a, int b) {
  return f.coefficient({a, b}) - f.coefficient({a + 1, b - 1});
}

Outcome criterion1() {
  Tally t;
  RisingProductSpec spec;
  spec.add({1}, 1, UniPoly(Rational(1)));
  for (int h = 1; h <= 5; ++h) {
    const UniPoly s = stirling_coefficient_univariate(spec, {h});
    UniPoly eulerian;
    for (int j = 1; j <= h; ++j) eulerian += binom_poly(j, 2 * h) * Rational(eulerian_second(h, j));
    t.check(s == eulerian, "Eulerian expansion h=" + std::to_string(h));
    for (long d = 0; d <= 12; ++d) {
      const Rational expected(oracle::stirling_first(d + 1, d + 1 - h));
      t.check(s.evaluate(d) == expected, "S_h(d) h=" + std::to_string(h) + " d=" + std::to_string(d));
      t.check(eulerian.evaluate(d) == expected, "Eulerian value");
    }
  }
  t.check(eulerian_second(3, 2) == 8 && eulerian_second(3, 3) == 6, "E2(3,.)");
  return t.outcome();
}

Outcome criterion2() {
  Tally t;
  const UniPoly v = d_var;
  const UniPoly displayed = Rational(1, 6) * (v + Rational(1)) * v * v * (v - Rational(1)) * (v * Rational(2) + Rational(1));
  t.check(M_tilde(WeakPartition({2, 0, 0})) == displayed, "M~_(2,0,0)");
  for (int w = 0; w <= 5; ++w)
    for (const auto& p : enumerate_partitions(w, 4))
      for (int zeros = 0; zeros + static_cast<int>(p.length()) <= 4; ++zeros) {
        auto parts = p.parts();
        parts.insert(parts.end(), static_cast<std::size_t>(zeros), 0);
        if (parts.empty()) continue;
        const WeakPartition lam(parts);
        const UniPoly m = M_tilde(lam);
        const int l = static_cast<int>(lam.length());
        t.check(m.evaluate(-1) == 0, "M~(-1) " + lam.to_string());
        t.check(m.divisible_by(UniPoly::falling_factorial(1, zeros == 0 ? l + 1 : l)), "divisibility " + lam.to_string());
        for (long x = 0; x <= 6; ++x)
          t.check(m.evaluate(x) == Rational(oracle::aug_monomial_at(parts, x)), "brute force " + lam.to_string());
      }
  return t.outcome();
}

Outcome criterion3() {
  Tally t;
  std::vector<std::pair<RisingProductSpec, std::vector<IntVector>>> specs;
  {
    RisingProductSpec s;
    s.add({1}, 1, UniPoly(Rational(1)));
    specs.push_back({s, {{1}, {2}, {3}, {4}}});
  }
  {
    RisingProductSpec s;
    for (int a = 1; a <= 4; ++a) s.add({a}, a, UniPoly(Rational(1)));
    specs.push_back({s, {{1}, {2}, {3}, {4}}});
  }
  {
    RisingProductSpec s;
    s.add({1}, 2, UniPoly(Rational(1)));
    specs.push_back({s, {{1}, {2}, {3}}});
  }
  {
    RisingProductSpec s;
    s.num_x = 2;
    s.add({1, 0}, 1, UniPoly(Rational(1)));
    s.add({0, 1}, 2, UniPoly(Rational(1)));
    specs.push_back({s, {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}});
  }
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    RisingProductSpec s;
    s.num_x = 1 + trial % 2;
    s.bound = MultiPoly::from_unipoly(d_var * Rational(1 + trial % 2) + Rational(trial % 3 == 0 ? 1 : 0), 1, 0);
    for (int i = 0; i < 3; ++i) {
      IntVector e(s.num_x, 0);
      do {
        for (auto& x : e) x = std::uniform_int_distribution<int>(0, 2)(rng);
      } while (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }));
      s.add(e, std::uniform_int_distribution<int>(0, 2)(rng), UniPoly(std::vector<Rational>{small(rng), small(rng)}));
    }
    IntVector h(s.num_x, 0);
    for (auto& x : h) x = std::uniform_int_distribution<int>(1, s.num_x == 1 ? 4 : 2)(rng);
    specs.push_back({s, {h}});
  }
  for (const auto& [spec, targets] : specs)
    for (const auto& h : targets) {
      const UniPoly s = stirling_coefficient_univariate(spec, h);
      int total = 0;
      for (int x : h) total += x;
      for (long d = 0; d <= 6; ++d) {
        const long params[] = {d};
        t.check(s.evaluate(d) == direct_rising_oracle(spec, params, TruncationPolicy{total, {}}).coefficient(h),
                "oracle mismatch");
      }
    }
  return t.outcome();
}

Outcome criterion4() {
  Tally t;
  const auto c3 = chern_interpolated({2, 3, Basis::schur});
  t.check(c3.terms.coefficient(Partition({3})) == poly({0, 0, -1, -2, 1, 1}, Rational(1, 48)), "n=2 s3");
  t.check(c3.terms.coefficient(Partition({2, 1})) ==
              poly({0, 0, -1, 1}, Rational(1, 24)) * from_desc({1, 1, 2}), "n=2 s21");
  t.check(c3.terms.terms.size() == 2, "n=2 support");
  const auto c33 = chern_interpolated({3, 3, Basis::schur});
  t.check(c33.terms.coefficient(Partition({3})) ==
              poly({0, -1, 3, 2, 1}, Rational(1, 6480)) * from_desc({5, 20, -5, -50, -12}), "n=3 s3");
  t.check(c33.terms.coefficient(Partition({2, 1})) ==
              poly({0, -1, 3, 2, 1}, Rational(1, 1296)) * from_desc({1, 0, 2}) * from_desc({2, 8, 3}), "n=3 s21");
  t.check(c33.terms.coefficient(Partition({1, 1, 1})) ==
              poly({0, 3, 2, 1}, Rational(1, 1296)) * from_desc({1, 0, 2}) * from_desc({1, 3, 2, 12}), "n=3 s111");
  t.check(c33.terms.terms.size() == 3, "n=3 support");
  return t.outcome();
}

Outcome criterion5() {
  Tally t;
  const auto c4 = chern_interpolated({2, 4, Basis::elementary});
  const UniPoly common = poly({1, 0, -1, -2}, 1);
  const UniPoly e1_4 = common * poly({-3}, Rational(1, 5760)) * from_desc({15, 15, -10, -8});
  const UniPoly e1_2e2 = common * poly({2}, Rational(1, 720)) * from_desc({15, -5, -12});
  const UniPoly e2_2 = common * poly({2}, Rational(1, 360)) * from_desc({5, 12});
  t.check(c4.terms.coefficient(Partition({1, 1, 1, 1})) == e1_4, "e1^4");
  t.check(c4.terms.coefficient(Partition({2, 1, 1})) == e1_2e2, "e1^2 e2");
  t.check(c4.terms.coefficient(Partition({2, 2})) == e2_2, "e2^2");
  t.check(c4.terms.terms.size() == 3, "support");
  t.check(e1_4.degree() == 8 && e1_2e2.degree() == 7 && e2_2.degree() == 6, "degrees 8,7,6");
  return t.outcome();
}

Outcome criterion6() {
  Tally t;
  for (int n = 2; n <= 5; ++n) {
    const UniPoly b = binom_poly(n - 1, n);
    const auto c1 = chern_interpolated({n, 1, Basis::elementary});
    t.check(c1.terms.coefficient(Partition({1})) == b && c1.terms.terms.size() == 1, "c1 n=" + std::to_string(n));
    const auto c2 = chern_interpolated({n, 2, Basis::elementary});
    t.check(c2.terms.coefficient(Partition({2})) == binom_poly(n, n + 1), "c2 e2 n=" + std::to_string(n));
    t.check(c2.terms.coefficient(Partition({1, 1})) ==
                b * b * Rational(1, 2) - b * Rational(1, 2) - binom_poly(n - 1, n + 1),
            "c2 e1^2 n=" + std::to_string(n));
    t.check(c2.terms.terms.size() == 2, "c2 support");
  }
  return t.outcome();
}

Outcome criterion7() {
  Tally t;
  for (long d = 1; d <= 10; ++d) {
    const int top = static_cast<int>(d + 1);
    const MultiPoly e = oracle::chern_product(2, static_cast<int>(d), top).homogeneous_component(top);
    const auto s = expand_in_basis(e, Basis::schur);
    BasisExpansion<Rational> formula{Basis::schur, 2, {}};
    for (const auto& [j, v] : euler_c2_closed(d)) {
      if (j == 0) {
        t.check(v == 0, "e_0");
        continue;
      }
      formula.add(Partition({static_cast<int>(d + 1 - j), j}), Rational(v));
      t.check(Rational(v) == schur2_coefficient(e, static_cast<int>(d + 1 - j), j), "bialternant d=" + std::to_string(d));
    }
    t.check(formula == s, "d=" + std::to_string(d));
  }
  return t.outcome();
}

Outcome criterion8() {
  Tally t;
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 5; ++k) {
      const auto poly = chern_interpolated({n, k, Basis::elementary});
      for (const auto& [nu, g] : poly.terms.terms) {
        const auto mult = nu.multiplicities();
        int bound = 0;
        for (int i = 1; i < static_cast<int>(mult.size()); ++i) bound += (n + i - 1) * mult[i];
        t.check(g.degree() <= bound, "bound n=" + std::to_string(n) + " nu=" + nu.to_string());
        if (n == 2) {
          const int h1 = mult.size() > 1 ? mult[1] : 0, h2 = mult.size() > 2 ? mult[2] : 0;
          const Rational lead = Rational(1, factorial(h1) * factorial(h2)) * pow(Rational(1, 2), h1 + h2) *
                                pow(Rational(1, 3), h2);
          t.check(g.degree() == 2 * h1 + 3 * h2 && g.leading_coefficient() == lead, "n=2 leading " + nu.to_string());
        }
      }
      // Every nu with parts <= n appears.
      t.check(poly.terms.terms.size() == enumerate_partitions(k, std::nullopt, n).size(), "support");
    }
  return t.outcome();
}

Outcome criterion9() {
  Tally t;
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 12; ++d) {
      const auto brute = oracle::orbits_brute(n, d);
      for (const auto& u : orbit_types(n)) {
        const auto it = brute.find(u);
        t.check(enumerate_orbit(u, d) == (it == brute.end() ? std::vector<IncreasingWeakPartition>{} : it->second),
                "O_u(d) n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  t.check(enumerate_orbit({1, 3}, 8).empty(), "O_(1,3)(8)");
  t.check(enumerate_orbit({2, 1, 1}, 8) ==
              std::vector<IncreasingWeakPartition>{{0, 0, 1, 7}, {0, 0, 2, 6}, {0, 0, 3, 5}, {1, 1, 2, 4}},
          "O_(2,1,1)(8)");
  MultiPoly p(3);
  for (const auto& [e, c] : std::vector<std::pair<Exponent, long>>{
           {{0, 0, 0}, 1}, {{1, 0, 0}, 6}, {{2, 0, 0}, 9}, {{0, 1, 0}, 9}, {{3, 0, 0}, 4}, {{1, 1, 0}, 9}, {{0, 0, 1}, 27}})
    p.add_term(e, c);
  t.check(orbit_term({1, 1, 4}) == p, "p_(1,1,4)");
  for (int n = 1; n <= 3; ++n)
    for (long d = 0; d <= 8; ++d)
      t.check(orbit_factorization_check(n, d, TruncationPolicy{4, {}}),
              "factorization n=" + std::to_string(n) + " d=" + std::to_string(d));
  return t.outcome();
}

// Degree of the Fano scheme from test-side pieces only: the brute-force product
// and the bialternant extraction of s_{(m-1,m-1)}.
BigInt fano_degree_oracle(int d, int m) {
  const int delta = 2 * m - d - 3;
  const int top = 2 * (m - 1);
  MultiPoly f = oracle::chern_product(2, d, d + 1).homogeneous_component(d + 1);
  const MultiPoly e1 = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
  for (int i = 0; i < delta; ++i) f = (f * e1).truncated(TruncationPolicy{top, {}});
  return schur2_coefficient(f, m - 1, m - 1).to_integer();
}

Outcome criterion10() {
  Tally t;
  for (int m = 2; m <= 7; ++m)
    for (long delta = 0; delta <= 3; ++delta) {
      const long d = 2L * m - 3 - delta;
      if (d < 3) continue;
      const BigInt closed = fano_degree_lines(d, m, FanoMethod::closed);
      t.check(closed == fano_degree_lines(d, m, FanoMethod::integral),
              "closed vs integral d=" + std::to_string(d) + " m=" + std::to_string(m));
      t.check(closed == fano_degree_oracle(static_cast<int>(d), m), "oracle d=" + std::to_string(d));
    }
  const std::vector<BigInt> sequence{BigInt(4), BigInt(320), BigInt(60480), BigInt(21518336), BigInt("12493096000")};
  for (int m = 3; m <= 7; ++m) {
    const Regime regime = m == 3 ? Regime::permissive : Regime::strict;
    const long d = 2L * m - 4;
    t.check(fano_degree_lines(d, m, FanoMethod::closed, regime) == sequence[m - 3], "delta=1 closed m=" + std::to_string(m));
    t.check(fano_degree_lines(d, m, FanoMethod::integral, regime) == sequence[m - 3],
            "delta=1 integral m=" + std::to_string(m));
  }
  t.check(fano_degree_oracle(3, 3) == 27 && fano_degree_lines(3, 3, FanoMethod::integral) == 27, "(3,3) = 27");
  t.check(fano_degree_oracle(5, 4) == 2875 && fano_degree_lines(5, 4, FanoMethod::integral) == 2875, "(5,4) = 2875");
  return t.outcome();
}

Outcome criterion11() {
  Tally t;
  for (int m = 3; m <= 7; ++m) {
    const Regime regime = m == 3 ? Regime::permissive : Regime::strict;
    const long d = 2L * m - 4;
    const BigInt integral = fano_chi_lines(d, m, FanoMethod::integral, regime);
    const auto e = euler_c2_closed(d);
    const BigInt displayed = e[static_cast<std::size_t>(m - 2)].second * (BigInt(m + 1) - binomial(2L * m - 3, 2));
    t.check(integral == displayed, "delta=1 m=" + std::to_string(m));
    const auto ratio = chi_deg_ratio_check(m, regime);
    t.check(ratio.holds, "ratio identity m=" + std::to_string(m));
  }
  std::ostringstream mismatches;
  bool rederived_agrees = true;
  for (int m = 4; m <= 7; ++m) {
    const BigInt integral = fano_chi_lines(2L * m - 5, m, FanoMethod::integral);
    const Rational displayed = fano_chi_delta2(m, true);
    t.check(Rational(integral) == displayed, "delta=2 displayed formula m=" + std::to_string(m) + ": " +
                                                 displayed.to_string() + " vs integral " + integral.get_str());
    rederived_agrees = rederived_agrees && Rational(integral) == fano_chi_delta2(m, false);
  }
  t.note(std::string("rederived delta=2 coefficients ") + (rederived_agrees ? "agree" : "disagree") +
         " with the integral for m=4..7");
  return t.outcome();
}

Outcome criterion12() {
  Tally t;
  const std::vector<Rational> displayed{0, Rational(1, 12), Rational(5, 144), Rational(-1, 16), Rational(-25, 576),
                                        Rational(-1, 48), Rational(1, 288), 0, Rational(1, 192)};
  t.check(sigma_degree_symbolic(3, 1) == UniPoly(displayed), "deg Sigma(d,3,1)");
  for (int m = 2; m <= 3; ++m)
    for (long d = 3; d <= 5; ++d) {
      const Rational closed(sigma_degree_hyperplane(d, m));
      t.check(sigma_degree(d, m, m - 1).value == closed, "hyperplane numeric");
      t.check(sigma_degree_symbolic(m, m - 1).evaluate(d) == closed, "hyperplane symbolic");
    }
  for (const auto& [m, r] : std::vector<std::pair<int, int>>{{3, 1}, {4, 2}}) {
    const UniPoly p = sigma_degree_symbolic(m, r);
    const LeadingTerm lt = sigma_leading_term(m, r);
    t.check(p.degree() == lt.exponent && p.leading_coefficient() == lt.coefficient,
            "leading term m=" + std::to_string(m) + " r=" + std::to_string(r));
  }
  return t.outcome();
}

Outcome criterion13() {
  Tally t;
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> c(-4, 4);
  const Basis bases[] = {Basis::monomial, Basis::elementary, Basis::schur, Basis::power};
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      BasisExpansion<Rational> src{Basis::monomial, n, {}};
      for (int k = 0; k <= 6; ++k)
        for (const auto& mu : enumerate_partitions(k, n)) src.add(mu, c(rng));
      const MultiPoly f = to_x_expansion(src);
      for (Basis a : bases) {
        const auto ea = expand_in_basis(f, a);
        t.check(to_x_expansion(ea) == f, "x round trip");
        for (Basis b : bases) t.check(convert_basis(convert_basis(ea, b), a) == ea, "basis round trip");
      }
    }
  for (int delta = 0; delta <= 10; ++delta)
    for (int j = 0; 2 * j <= delta; ++j) {
      std::vector<int> shape{delta - j};
      if (j > 0) shape.push_back(j);
      if (delta == 0) shape.clear();
      t.check(catalan_triangle(delta, j) == oracle::kostka(shape, std::vector<int>(delta, 1)), "Kostka = Catalan");
    }
  for (int k = 0; k <= 10; ++k)
    for (const auto& lam : enumerate_partitions(k)) t.check(syt_count(lam) == oracle::syt_count(lam.parts()), "SYT");
  // Guard points: every interpolation in the matrix raises if its check fails.
  int computed = 0;
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= (n <= 3 ? 6 : 4); ++k) {
      try {
        chern_interpolated({n, k, Basis::monomial});
        ++computed;
        t.check(true, "");
      } catch (const Error& e) {
        t.check(false, std::string("guard fired: ") + e.what());
      }
    }
  t.note(std::to_string(computed) + " interpolations guarded");
  return t.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Stirling identities and second-order Eulerian expansion", criterion1},
      {"M~ quintic, vanishing at -1 and divisibility", criterion2},
      {"rising-product oracle equivalence", criterion3},
      {"c3(Pol^d(C^2)) and c3(Pol^d(C^3)) Schur coefficients", criterion4},
      {"c4(Pol^d(C^2)) elementary coefficients, degrees 8 7 6", criterion5},
      {"c1 and c2 binomial formulas for n = 2..5", criterion6},
      {"Euler class closed formula for d <= 10", criterion7},
      {"elementary degree bound and n = 2 leading terms", criterion8},
      {"orbit enumeration, orbit term and factorization", criterion9},
      {"Fano degrees of lines", criterion10},
      {"Fano Euler characteristics of lines", criterion11},
      {"degrees of Sigma(d,m,r)", criterion12},
      {"property suite", criterion13},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << "; " << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }

  std::cout << "\nReported, not asserted:\n";
  try {
    for (const auto& row : conjecture_report(4, 4))
      std::cout << "  " << (row.agrees ? "consistent  " : "differs     ") << row.label << ": predicted " << row.predicted
                << ", observed " << row.observed << '\n';
  } catch (const std::exception& e) {
    std::cout << "  report aborted: " << e.what() << '\n';
  }
  std::cout << '\n' << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

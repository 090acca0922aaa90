#include "cpold/enumgeo.hpp"

#include <array>

#include "cpold/error.hpp"
#include "cpold/symfunc.hpp"

namespace cpold {

void GrassmannianSpec::validate() const {
  if (k < 1 || k > n_amb) throw Error(ErrorKind::invalid_input, "need 1 <= k <= n for Gr_k(C^n)");
}

Partition GrassmannianSpec::volume_partition() const {
  validate();
  if (n_amb == k) return Partition();
  return Partition(std::vector<int>(static_cast<std::size_t>(k), n_amb - k));
}

long expected_dimension(long d, long m, long r) { return (r + 1) * (m - r) - binomial(r + d, r).get_si(); }

Rational grassmann_integral(const MultiPoly& f, const GrassmannianSpec& spec) {
  spec.validate();
  if (f.num_vars() != static_cast<std::size_t>(spec.k))
    throw Error(ErrorKind::invalid_input, "integrand must be a polynomial in k variables");
  if (!f.is_symmetric()) throw Error(ErrorKind::not_symmetric, "integrand is not symmetric");
  const MultiPoly top = f.homogeneous_component(spec.dimension());
  if (top.is_zero()) return 0;
  return expand_in_basis(top, Basis::schur).coefficient(spec.volume_partition());
}

MultiPoly chern_grassmannian(const GrassmannianSpec& spec, const TruncationPolicy& policy) {
  spec.validate();
  const auto k = static_cast<std::size_t>(spec.k);
  MultiPoly num = MultiPoly::constant(k, 1);
  MultiPoly den = MultiPoly::constant(k, 1);
  std::vector<Rational> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::fill(coeffs.begin(), coeffs.end(), Rational(0));
    coeffs[i] = 1;
    for (int p = 0; p < spec.n_amb; ++p) multiply_by_linear(num, coeffs, policy);
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      std::fill(coeffs.begin(), coeffs.end(), Rational(0));
      coeffs[j] = 1;
      coeffs[i] = -1;
      multiply_by_linear(den, coeffs, policy);
    }
  }
  return divide(num, den, policy);
}

SigmaDegree sigma_degree(long d, int m, int r) {
  if (r < 0 || m <= r) throw Error(ErrorKind::invalid_input, "need 0 <= r < m");
  if (d < 0) throw Error(ErrorKind::out_of_domain, "d must be non-negative");
  SigmaDegree out;
  if (d < 3) out.warnings.push_back("d <= 2 lies outside the range where this is the degree of Sigma");
  if (expected_dimension(d, m, r) >= 0)
    out.warnings.push_back("expected dimension is non-negative: every hypersurface contains an r-plane");
  const GrassmannianSpec gr{r + 1, m + 1};
  const int top = gr.dimension();
  out.value = grassmann_integral(chern_direct(r + 1, d, TruncationPolicy{top, {}}), gr);
  return out;
}

UniPoly sigma_degree_symbolic(int m, int r, ChernCache* cache) {
  if (r < 0 || m <= r) throw Error(ErrorKind::invalid_input, "need 0 <= r < m");
  const GrassmannianSpec gr{r + 1, m + 1};
  const auto poly = chern_interpolated({r + 1, gr.dimension(), Basis::schur}, cache);
  return poly.terms.coefficient(gr.volume_partition());
}

LeadingTerm sigma_leading_term(int m, int r) {
  if (r < 0 || m <= r) throw Error(ErrorKind::invalid_input, "need 0 <= r < m");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= r; ++i) num *= factorial(i);
  for (int i = m - r; i <= m; ++i) den *= factorial(i);
  const int count = (r + 1) * (m - r);
  LeadingTerm out;
  out.coefficient = Rational(num, den) * pow(Rational(1, factorial(r + 1)), static_cast<unsigned>(count));
  out.exponent = (r + 1) * (r + 1) * (m - r);
  return out;
}

BigInt sigma_degree_hyperplane(long d, int m) { return binomial(binomial(d + m - 1, m) + m - 1, m); }

MultiPoly euler_class_c2(long d) {
  if (d < 0) throw Error(ErrorKind::out_of_domain, "d must be non-negative");
  const int top = static_cast<int>(d + 1);
  return chern_direct(2, d, TruncationPolicy{top, {}}).homogeneous_component(top);
}

namespace {

long check_fano(long d, int m, Regime regime) {
  if (m < 2) throw Error(ErrorKind::invalid_input, "need m >= 2");
  if (d < 1) throw Error(ErrorKind::invalid_input, "need d >= 1");
  const long delta = 2L * m - d - 3;
  if (delta < 0) throw Error(ErrorKind::empty_fano, "a general hypersurface of this degree contains no lines");
  if (d <= 2 && regime == Regime::strict)
    throw Error(ErrorKind::unsupported_degree, "d <= 2: the general quadric is not covered");
  return delta;
}

BigInt euler_coefficient(const std::vector<std::pair<int, BigInt>>& e, long j) {
  if (j < 0 || j >= static_cast<long>(e.size())) return 0;
  return e[static_cast<std::size_t>(j)].second;
}

BigInt integral_value(const MultiPoly& f, const GrassmannianSpec& gr) {
  const Rational v = grassmann_integral(f, gr);
  if (!v.is_integer()) throw Error(ErrorKind::internal_error, "non-integral intersection number " + v.to_string());
  return v.to_integer();
}

}  // namespace

BigInt fano_degree_lines(long d, int m, FanoMethod method, Regime regime) {
  const long delta = check_fano(d, m, regime);
  if (method == FanoMethod::closed) {
    const auto e = euler_c2_closed(d);
    BigInt sum = 0;
    // s_{(delta-j, j)} pairs with its complement s_{(m-1-j, m-1-delta+j)} in the (m-1)^2 box.
    for (long j = 0; 2 * j <= delta; ++j)
      sum += catalan_triangle(static_cast<int>(delta), static_cast<int>(j)) * euler_coefficient(e, d - m + 2 + j);
    return sum;
  }
  const GrassmannianSpec gr{2, m + 1};
  const TruncationPolicy policy{gr.dimension(), {}};
  MultiPoly f = euler_class_c2(d);
  const MultiPoly e1 = elementary_polynomial(1, 2);
  for (long i = 0; i < delta; ++i) f = multiply(f, e1, policy);
  return integral_value(f, gr);
}

Rational fano_chi_delta2(int m, bool displayed) {
  const auto e = euler_c2_closed(2L * m - 5);
  const Rational M(m);
  // Coefficients of s_{1,1} and s_2 in the degree-two part of c(Gr)/c(Pol^d).
  Rational a = Rational(2) * pow(M, 4) - Rational(20) * pow(M, 3) + Rational(67) * pow(M, 2);
  Rational b = Rational(2) * pow(M, 4) - Rational(56, 3) * pow(M, 3) + Rational(59) * pow(M, 2);
  if (displayed) {
    a += Rational(-86) * M + Rational(36);
    b += Rational(-208, 3) * M + Rational(23);
  } else {
    a += Rational(-85) * M + Rational(33);
    b += Rational(-211, 3) * M + Rational(26);
  }
  return Rational(euler_coefficient(e, m - 2)) * a + Rational(euler_coefficient(e, m - 3)) * b;
}

BigInt fano_chi_lines(long d, int m, FanoMethod method, Regime regime) {
  const long delta = check_fano(d, m, regime);
  if (method == FanoMethod::closed) {
    if (delta == 1) {
      const auto e = euler_c2_closed(2L * m - 4);
      return euler_coefficient(e, m - 2) * (BigInt(m + 1) - binomial(2L * m - 3, 2));
    }
    if (delta == 2) return fano_chi_delta2(m, false).to_integer();
    throw Error(ErrorKind::unsupported, "closed Euler characteristic formulas exist only for delta = 1, 2");
  }
  const GrassmannianSpec gr{2, m + 1};
  const int top = gr.dimension();
  const MultiPoly c_gr = chern_grassmannian(gr, TruncationPolicy{top, {}});
  const TruncationPolicy inv_policy{static_cast<int>(delta), {}};
  const MultiPoly inv = invert(chern_direct(2, d, inv_policy), inv_policy);
  const TruncationPolicy policy{top, {}};
  const MultiPoly f = multiply(multiply(c_gr, euler_class_c2(d), policy), inv, policy);
  return integral_value(f, gr);
}

ChiDegRatio chi_deg_ratio_check(int m, Regime regime) {
  ChiDegRatio out;
  out.m = m;
  out.d = 2L * m - 4;
  out.ratio = BigInt(m + 1) - binomial(2L * m - 3, 2);
  out.chi = fano_chi_lines(out.d, m, FanoMethod::integral, regime);
  out.degree = fano_degree_lines(out.d, m, FanoMethod::integral, regime);
  out.holds = out.chi == out.ratio * out.degree;
  return out;
}

}  // namespace cpold

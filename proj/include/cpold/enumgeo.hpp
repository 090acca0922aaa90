#pragma once

#include <string>
#include <vector>

#include "cpold/chern.hpp"
#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/rational.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

class ChernCache;

/// Gr_k(C^{n_amb}).
struct GrassmannianSpec {
  int k = 1;
  int n_amb = 1;

  void validate() const;
  int dimension() const { return k * (n_amb - k); }
  /// ((n_amb - k)^k)
  Partition volume_partition() const;
};

/// (r+1)(m-r) - binom(r+d, r)
long expected_dimension(long d, long m, long r);

/// Coefficient of s_{((n_amb-k)^k)} in the degree k(n_amb-k) part of `f`,
/// a symmetric polynomial in k variables.
Rational grassmann_integral(const MultiPoly& f, const GrassmannianSpec& spec);

/// prod_i (1+x_i)^n / prod_{i,j} (1+x_j-x_i) in the Chern roots x_1..x_k, truncated.
MultiPoly chern_grassmannian(const GrassmannianSpec& spec, const TruncationPolicy& policy);

/// Whether formulas are evaluated outside the range in which they are geometrically
/// meaningful (d <= 2). Strict rejects those inputs.
enum class Regime { strict, permissive };
enum class FanoMethod { closed, integral };

struct SigmaDegree {
  Rational value;
  std::vector<std::string> warnings;
};
/// deg Sigma(d, m, r) from the direct product in r+1 variables. Outside d >= 3,
/// delta < 0 the value is still computed and a warning is attached.
SigmaDegree sigma_degree(long d, int m, int r);
/// deg Sigma(d, m, r) as a polynomial in d (Schur coefficient of c_{(r+1)(m-r)}).
UniPoly sigma_degree_symbolic(int m, int r, ChernCache* cache = nullptr);
/// Predicted leading term of sigma_degree_symbolic.
LeadingTerm sigma_leading_term(int m, int r);
/// binom(binom(d+m-1, m) + m-1, m): the r = m-1 case.
BigInt sigma_degree_hyperplane(long d, int m);

/// Top Chern class c_{d+1}(Pol^d(C^2)) as a polynomial in x_1, x_2.
MultiPoly euler_class_c2(long d);

/// Degree of the Fano scheme of lines on a general degree-d hypersurface in P^m.
/// Throws empty_fano when 2m-d-3 < 0 and, in strict mode, unsupported_degree for d <= 2.
BigInt fano_degree_lines(long d, int m, FanoMethod method, Regime regime = Regime::strict);
/// Euler characteristic of the same Fano scheme. The closed method covers
/// 2m-d-3 in {1, 2} only (unsupported otherwise).
BigInt fano_chi_lines(long d, int m, FanoMethod method, Regime regime = Regime::strict);

/// Closed form for chi(F_1(2m-5, m)) = e_{m-2} a(m) + e_{m-3} b(m) with
/// e_j = e^{2m-5}_j. `displayed` selects the displayed-variant coefficients
///   a = 2m^4-20m^3+67m^2-86m+36, b = 2m^4-(56/3)m^3+59m^2-(208/3)m+23,
/// which disagree with the integral (18 instead of 27 at m = 4); otherwise the
/// rederived a = 2m^4-20m^3+67m^2-85m+33, b = 2m^4-(56/3)m^3+59m^2-(211/3)m+26.
Rational fano_chi_delta2(int m, bool displayed);

struct ChiDegRatio {
  int m = 0;
  long d = 0;
  BigInt ratio;
  BigInt chi;
  BigInt degree;
  bool holds = false;
};
/// chi = (m + 1 - binom(2m-3, 2)) deg for the one-dimensional Fano schemes (d = 2m-4).
ChiDegRatio chi_deg_ratio_check(int m, Regime regime = Regime::strict);

}  // namespace cpold

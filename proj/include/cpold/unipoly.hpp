#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "cpold/rational.hpp"

namespace cpold {

/// Univariate polynomial over Q. Stored densely; trailing zeros are always trimmed,
/// so the zero polynomial has no coefficients at all.
class UniPoly {
 public:
  /// Degree of the zero polynomial. Distinct from every real exponent and from -1.
  static constexpr int kMinusInfinity = INT_MIN;

  UniPoly() = default;
  UniPoly(Rational constant);  // NOLINT(implicit)
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly monomial(int exponent, Rational coefficient = 1);
  /// x - root
  static UniPoly linear_root(const Rational& root);
  /// Falling factorial x (x-1) ... (x-k+1) shifted: (x+shift)(x+shift-1)...(x+shift-k+1).
  static UniPoly falling_factorial(const Rational& shift, int k);

  int degree() const { return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int exponent) const;
  Rational leading_coefficient() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Rational>> terms() const;

  Rational evaluate(const Rational& x) const;
  UniPoly compose(const UniPoly& inner) const;

  /// Exact division; `remainder` receives the remainder when given.
  UniPoly divide(const UniPoly& divisor, UniPoly* remainder = nullptr) const;
  bool divisible_by(const UniPoly& divisor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Expanded form, e.g. "(1/2)d^2+(1/2)d".
  std::string to_string(const std::string& var = "d") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Square-free-ish display factorization: rational content, linear factors
/// with rational roots (with multiplicity), and the remaining cofactor.
std::string factored_string(const UniPoly& p, const std::string& var = "d");

}  // namespace cpold

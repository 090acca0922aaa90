#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cpold/rational.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

using Exponent = std::vector<int>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Discards every term whose (weighted) total degree exceeds `max_total_degree`.
/// Empty `weights` means every variable has weight one.
struct TruncationPolicy {
  int max_total_degree = 0;
  std::vector<int> weights;

  int degree_of(const Exponent& e) const;
  bool keeps(const Exponent& e) const { return degree_of(e) <= max_total_degree; }
};

/// Sparse multivariate polynomial over Q in a fixed, ordered variable list.
class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t num_vars, std::vector<std::string> names = {});

  static MultiPoly constant(std::size_t num_vars, const Rational& c);
  static MultiPoly variable(std::size_t num_vars, std::size_t index, const Rational& c = 1);
  /// Embeds a univariate polynomial as a polynomial in variable `index`.
  static MultiPoly from_unipoly(const UniPoly& p, std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);
  std::string var_name(std::size_t i) const;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Exponent& e) const;
  Rational constant_term() const { return coefficient(Exponent(num_vars_, 0)); }
  void add_term(const Exponent& e, const Rational& c);

  /// UniPoly::kMinusInfinity for the zero polynomial.
  int total_degree() const;
  MultiPoly homogeneous_component(int degree) const;
  MultiPoly truncated(const TruncationPolicy& policy) const;

  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes polynomials (all in the same ring) for every variable.
  MultiPoly substitute(std::span<const MultiPoly> values) const;
  /// Univariate view; requires num_vars() == 1.
  UniPoly to_unipoly() const;

  bool is_symmetric() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t num_vars_ = 0;
  std::vector<std::string> names_;
  TermMap terms_;
};

/// Truncated product.
MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const TruncationPolicy& policy);
/// Multiplies by (1 + sum_i coeffs[i] * x_i) in place, truncating.
void multiply_by_linear(MultiPoly& p, std::span<const Rational> coeffs, const TruncationPolicy& policy);
/// Truncated power-series inverse; the constant term must be 1.
MultiPoly invert(const MultiPoly& f, const TruncationPolicy& policy);
/// a / b as truncated power series; b must have constant term 1.
MultiPoly divide(const MultiPoly& a, const MultiPoly& b, const TruncationPolicy& policy);

enum class SeriesOp { multiply, invert, divide };
/// multiply folds over all operands; invert takes one; divide takes two.
MultiPoly series_arith(SeriesOp op, std::span<const MultiPoly> operands, const TruncationPolicy& policy);

}  // namespace cpold

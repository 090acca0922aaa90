#pragma once

#include <map>
#include <string>
#include <string_view>

#include "cpold/multipoly.hpp"
#include "cpold/partition.hpp"
#include "cpold/unipoly.hpp"

namespace cpold {

enum class Basis { monomial, elementary, schur, power };

std::string_view to_string(Basis basis);
/// Accepts the short ids m/e/s/p as well as the full names.
Basis parse_basis(std::string_view text);

/// A symmetric polynomial written in one of the classical bases of the ring
/// of symmetric polynomials in `num_vars` variables.
///
/// Index conventions: monomial and Schur indices have length <= num_vars;
/// an elementary index nu stands for prod_i e_{nu_i} and has parts <= num_vars;
/// power-sum indices are unrestricted for construction, but expansions
/// produced by expand_in_basis only use parts <= num_vars.
template <class Coeff>
struct BasisExpansion {
  Basis basis = Basis::monomial;
  int num_vars = 0;
  std::map<Partition, Coeff> terms;

  Coeff coefficient(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Coeff{} : it->second;
  }
  void add(const Partition& p, const Coeff& c) {
    auto [it, inserted] = terms.try_emplace(p, c);
    if (!inserted) it->second += c;
    if (is_zero_coeff(it->second)) terms.erase(it);
  }
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;

 private:
  static bool is_zero_coeff(const Coeff& c) { return c.is_zero(); }
};

/// Throws ErrorKind::invalid_index when `index` violates the basis constraint.
void check_basis_index(Basis basis, const Partition& index, int num_vars);

/// e_i(x_1..x_n); zero when i > n.
MultiPoly elementary_polynomial(int i, int num_vars);

/// The basis element as an explicit polynomial in x_1..x_n.
/// Schur polynomials come from the dual Jacobi-Trudi determinant in the e_i.
MultiPoly to_x_expansion(Basis basis, const Partition& index, int num_vars);
MultiPoly to_x_expansion(Basis basis, const Partition& index, int num_vars, const TruncationPolicy& policy);
MultiPoly to_x_expansion(const BasisExpansion<Rational>& expansion);

/// Exact expansion of a symmetric polynomial. Monomial, Schur and elementary
/// expansions peel off the dominance-maximal term (ties broken by graded-lex
/// order); the power-sum expansion goes through e and Newton's identities.
/// Throws ErrorKind::not_symmetric on non-symmetric input.
BasisExpansion<Rational> expand_in_basis(const MultiPoly& f, Basis basis);

/// Expansion of one basis element of `from` in the basis `to` (cached).
BasisExpansion<Rational> basis_element_in(Basis from, const Partition& index, int num_vars, Basis to);

/// Re-expresses an expansion with UniPoly (or Rational) coefficients in another basis.
template <class Coeff>
BasisExpansion<Coeff> convert_basis(const BasisExpansion<Coeff>& src, Basis target) {
  BasisExpansion<Coeff> out;
  out.basis = target;
  out.num_vars = src.num_vars;
  if (src.basis == target) {
    out.terms = src.terms;
    return out;
  }
  for (const auto& [index, coeff] : src.terms) {
    const auto row = basis_element_in(src.basis, index, src.num_vars, target);
    for (const auto& [target_index, r] : row.terms) out.add(target_index, coeff * r);
  }
  return out;
}

/// Number of standard Young tableaux, by the factorial-quotient formula.
BigInt syt_count(const Partition& shape);

/// binom(delta, j) - binom(delta, j-1); zero outside 0 <= 2j <= delta.
BigInt catalan_triangle(int delta, int j);

std::string expansion_to_string(const BasisExpansion<Rational>& e);
std::string expansion_to_string(const BasisExpansion<UniPoly>& e, const std::string& var = "d", bool factored = false);
std::string basis_element_name(Basis basis, const Partition& index);

}  // namespace cpold

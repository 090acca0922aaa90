#include "cpold/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <tuple>

#include "cpold/error.hpp"

namespace cpold {

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::monomial: return "monomial";
    case Basis::elementary: return "elementary";
    case Basis::schur: return "schur";
    case Basis::power: return "power";
  }
  return "unknown";
}

Basis parse_basis(std::string_view text) {
  if (text == "m" || text == "monomial") return Basis::monomial;
  if (text == "e" || text == "elementary") return Basis::elementary;
  if (text == "s" || text == "schur") return Basis::schur;
  if (text == "p" || text == "power") return Basis::power;
  throw Error(ErrorKind::invalid_input, "unknown basis: " + std::string(text));
}

void check_basis_index(Basis basis, const Partition& index, int num_vars) {
  if (num_vars < 1) throw Error(ErrorKind::invalid_index, "need at least one variable");
  switch (basis) {
    case Basis::monomial:
    case Basis::schur:
      if (static_cast<int>(index.length()) > num_vars)
        throw Error(ErrorKind::invalid_index, std::string(to_string(basis)) + " index " + index.to_string() +
                                                  " is longer than the number of variables");
      break;
    case Basis::elementary:
      if (!index.empty() && index[0] > num_vars)
        throw Error(ErrorKind::invalid_index,
                    "elementary index " + index.to_string() + " has a part above the number of variables");
      break;
    case Basis::power:
      break;
  }
}

MultiPoly elementary_polynomial(int i, int num_vars) {
  const auto n = static_cast<std::size_t>(num_vars);
  MultiPoly out(n);
  if (i < 0 || i > num_vars) return out;
  // Every 0/1 vector with i ones.
  Exponent e(n, 0);
  std::fill(e.end() - i, e.end(), 1);
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

namespace {

MultiPoly monomial_symmetric(const Partition& index, int num_vars) {
  Exponent e(static_cast<std::size_t>(num_vars), 0);
  std::copy(index.parts().begin(), index.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  MultiPoly out(static_cast<std::size_t>(num_vars));
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MultiPoly power_sum(int k, int num_vars) {
  MultiPoly out(static_cast<std::size_t>(num_vars));
  for (int i = 0; i < num_vars; ++i) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(i)] = k;
    out.add_term(e, 1);
  }
  return out;
}

// det[e_{conj_i - i + j}] by Laplace expansion along rows, memoised on the
// set of columns already used.
MultiPoly schur_jacobi_trudi(const Partition& index, int num_vars) {
  const Partition conj = index.conjugate();
  const std::size_t size = conj.length();
  const auto n = static_cast<std::size_t>(num_vars);
  if (size == 0) return MultiPoly::constant(n, 1);
  std::vector<MultiPoly> e;
  for (int i = 0; i <= num_vars; ++i) e.push_back(elementary_polynomial(i, num_vars));
  auto entry = [&](std::size_t row, std::size_t col) -> const MultiPoly* {
    const int k = conj[row] - static_cast<int>(row) + static_cast<int>(col);
    if (k < 0 || k > num_vars) return nullptr;
    return &e[static_cast<std::size_t>(k)];
  };
  std::map<unsigned long, MultiPoly> memo;
  std::function<MultiPoly(unsigned long)> minor = [&](unsigned long used) -> MultiPoly {
    const auto row = static_cast<std::size_t>(__builtin_popcountl(used));
    if (row == size) return MultiPoly::constant(n, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    MultiPoly acc(n);
    int sign = 1;
    for (std::size_t col = 0; col < size; ++col) {
      if (used & (1UL << col)) continue;
      const MultiPoly* a = entry(row, col);
      if (a != nullptr) {
        MultiPoly term = *a * minor(used | (1UL << col));
        if (sign > 0) acc += term;
        else acc -= term;
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return minor(0);
}

}  // namespace

MultiPoly to_x_expansion(Basis basis, const Partition& index, int num_vars) {
  check_basis_index(basis, index, num_vars);
  const auto n = static_cast<std::size_t>(num_vars);
  switch (basis) {
    case Basis::monomial:
      return monomial_symmetric(index, num_vars);
    case Basis::elementary: {
      MultiPoly out = MultiPoly::constant(n, 1);
      for (int part : index.parts()) out = out * elementary_polynomial(part, num_vars);
      return out;
    }
    case Basis::schur:
      return schur_jacobi_trudi(index, num_vars);
    case Basis::power: {
      MultiPoly out = MultiPoly::constant(n, 1);
      for (int part : index.parts()) out = out * power_sum(part, num_vars);
      return out;
    }
  }
  throw Error(ErrorKind::internal_error, "unknown basis");
}

MultiPoly to_x_expansion(Basis basis, const Partition& index, int num_vars, const TruncationPolicy& policy) {
  return to_x_expansion(basis, index, num_vars).truncated(policy);
}

MultiPoly to_x_expansion(const BasisExpansion<Rational>& expansion) {
  MultiPoly out(static_cast<std::size_t>(expansion.num_vars));
  for (const auto& [index, c] : expansion.terms)
    out += to_x_expansion(expansion.basis, index, expansion.num_vars) * c;
  return out;
}

namespace {

// Cache of explicit basis polynomials; Schur determinants dominate otherwise.
const MultiPoly& cached_x_expansion(Basis basis, const Partition& index, int num_vars) {
  static std::mutex mutex;
  static std::map<std::tuple<Basis, int, Partition>, MultiPoly> cache;
  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(basis, num_vars, index);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, to_x_expansion(basis, index, num_vars)).first;
  return it->second;
}

Partition leading_partition(const Exponent& e) {
  std::vector<int> parts;
  for (int v : e)
    if (v > 0) parts.push_back(v);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// Repeatedly removes the graded-lex largest monomial. For a symmetric
// polynomial that monomial is a sorted exponent, i.e. dominance-maximal in its degree.
BasisExpansion<Rational> peel(MultiPoly f, Basis basis, int num_vars) {
  BasisExpansion<Rational> out;
  out.basis = basis;
  out.num_vars = num_vars;
  while (!f.is_zero()) {
    const auto& [e, c] = *f.terms().rbegin();
    const Partition lead = leading_partition(e);
    const Rational coeff = c;
    Partition index = basis == Basis::elementary ? lead.conjugate() : lead;
    const MultiPoly& element = cached_x_expansion(basis, index, num_vars);
    const Rational unit = element.coefficient(e);
    if (!unit.is_one()) throw Error(ErrorKind::internal_error, "basis is not unitriangular at " + index.to_string());
    f -= element * coeff;
    out.add(index, coeff);
  }
  return out;
}

// e_k as a polynomial in p_1..p_n (variable j-1 holds p_j), via Newton's identities.
std::vector<MultiPoly> elementary_in_power_sums(int num_vars) {
  const auto n = static_cast<std::size_t>(num_vars);
  std::vector<MultiPoly> e{MultiPoly::constant(n, 1)};
  for (int k = 1; k <= num_vars; ++k) {
    MultiPoly acc(n);
    for (int j = 1; j <= k; ++j) {
      MultiPoly term = e[static_cast<std::size_t>(k - j)] * MultiPoly::variable(n, static_cast<std::size_t>(j - 1));
      acc += term * Rational(j % 2 == 1 ? 1 : -1);
    }
    e.push_back(acc * Rational(1, k));
  }
  return e;
}

}  // namespace

BasisExpansion<Rational> expand_in_basis(const MultiPoly& f, Basis basis) {
  if (!f.is_symmetric()) throw Error(ErrorKind::not_symmetric, "polynomial is not symmetric");
  const int n = static_cast<int>(f.num_vars());
  switch (basis) {
    case Basis::monomial: {
      BasisExpansion<Rational> out;
      out.basis = basis;
      out.num_vars = n;
      for (const auto& [e, c] : f.terms())
        if (std::is_sorted(e.begin(), e.end(), std::greater<>())) out.add(leading_partition(e), c);
      return out;
    }
    case Basis::schur:
    case Basis::elementary:
      return peel(f, basis, n);
    case Basis::power: {
      const auto in_e = peel(f, Basis::elementary, n);
      const auto e_in_p = elementary_in_power_sums(n);
      MultiPoly acc(static_cast<std::size_t>(n));
      for (const auto& [index, c] : in_e.terms) {
        MultiPoly t = MultiPoly::constant(static_cast<std::size_t>(n), c);
        for (int part : index.parts()) t = t * e_in_p[static_cast<std::size_t>(part)];
        acc += t;
      }
      BasisExpansion<Rational> out;
      out.basis = basis;
      out.num_vars = n;
      for (const auto& [e, c] : acc.terms()) {
        std::vector<int> parts;
        for (int j = n; j >= 1; --j)
          for (int r = 0; r < e[static_cast<std::size_t>(j - 1)]; ++r) parts.push_back(j);
        out.add(Partition(std::move(parts)), c);
      }
      return out;
    }
  }
  throw Error(ErrorKind::internal_error, "unknown basis");
}

BasisExpansion<Rational> basis_element_in(Basis from, const Partition& index, int num_vars, Basis to) {
  static std::mutex mutex;
  static std::map<std::tuple<Basis, Basis, int, Partition>, BasisExpansion<Rational>> cache;
  const auto key = std::make_tuple(from, to, num_vars, index);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = expand_in_basis(cached_x_expansion(from, index, num_vars), to);
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

BigInt syt_count(const Partition& shape) {
  const auto& l = shape.parts();
  const long len = static_cast<long>(l.size());
  BigInt num = factorial(shape.weight());
  BigInt den = 1;
  for (long i = 0; i < len; ++i) {
    for (long j = i + 1; j < len; ++j) num *= l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)] + j - i;
    den *= factorial(l[static_cast<std::size_t>(i)] + len - 1 - i);
  }
  return num / den;
}

BigInt catalan_triangle(int delta, int j) {
  if (delta < 0 || j < 0 || 2 * j > delta) return 0;
  return binomial(delta, j) - binomial(delta, j - 1);
}

std::string basis_element_name(Basis basis, const Partition& index) {
  std::string prefix;
  switch (basis) {
    case Basis::monomial: prefix = "m"; break;
    case Basis::elementary: prefix = "e"; break;
    case Basis::schur: prefix = "s"; break;
    case Basis::power: prefix = "p"; break;
  }
  if (basis == Basis::elementary || basis == Basis::power) {
    if (index.empty()) return "1";
    // e_(2,1,1) reads better as e2*e1^2.
    std::string s;
    std::size_t i = 0;
    while (i < index.length()) {
      std::size_t j = i;
      while (j < index.length() && index[j] == index[i]) ++j;
      if (!s.empty()) s += "*";
      s += prefix + std::to_string(index[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    return s;
  }
  std::string s = prefix + "[";
  for (std::size_t i = 0; i < index.length(); ++i) s += (i ? "," : "") + std::to_string(index[i]);
  return s + "]";
}

std::string expansion_to_string(const BasisExpansion<Rational>& e) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!s.empty()) s += " + ";
    s += "(" + it->second.to_string() + ")*" + basis_element_name(e.basis, it->first);
  }
  return s;
}

std::string expansion_to_string(const BasisExpansion<UniPoly>& e, const std::string& var, bool factored) {
  if (e.terms.empty()) return "0";
  std::string s;
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    if (!s.empty()) s += "\n";
    s += basis_element_name(e.basis, it->first) + ": " +
         (factored ? factored_string(it->second, var) : it->second.to_string(var));
  }
  return s;
}

}  // namespace cpold

#include "cpold/unipoly.hpp"

#include <algorithm>
#include <map>

#include "cpold/error.hpp"

namespace cpold {

UniPoly::UniPoly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(int exponent, Rational coefficient) {
  if (exponent < 0) throw Error(ErrorKind::invalid_input, "negative exponent");
  std::vector<Rational> c(static_cast<std::size_t>(exponent) + 1);
  c.back() = std::move(coefficient);
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_root(const Rational& root) { return UniPoly(std::vector<Rational>{-root, 1}); }

UniPoly UniPoly::falling_factorial(const Rational& shift, int k) {
  UniPoly r(Rational(1));
  for (int i = 0; i < k; ++i) r *= UniPoly(std::vector<Rational>{shift - i, 1});
  return r;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UniPoly::coefficient(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

Rational UniPoly::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

std::vector<std::pair<int, Rational>> UniPoly::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) out.emplace_back(static_cast<int>(i), coeffs_[i]);
  return out;
}

Rational UniPoly::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += UniPoly(*it);
  }
  return acc;
}

UniPoly UniPoly::divide(const UniPoly& divisor, UniPoly* remainder) const {
  if (divisor.is_zero()) throw Error(ErrorKind::invalid_input, "polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead = divisor.leading_coefficient();
  std::vector<Rational> quot;
  if (degree() >= dd) quot.resize(static_cast<std::size_t>(degree() - dd) + 1);
  for (int i = degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  if (remainder) *remainder = UniPoly(std::move(rem));
  return UniPoly(std::move(quot));
}

bool UniPoly::divisible_by(const UniPoly& divisor) const {
  UniPoly rem;
  divide(divisor, &rem);
  return rem.is_zero();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

namespace {

std::string term_string(const Rational& c, int e, const std::string& var, bool first) {
  std::string s;
  Rational mag = c;
  if (c.sign() < 0) {
    s += "-";
    mag = -c;
  } else if (!first) {
    s += "+";
  }
  const bool unit = mag.is_one();
  if (e == 0) return s + mag.to_string();
  if (!unit) s += mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")";
  s += var;
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    s += term_string(c, i, var, first);
    first = false;
  }
  return s;
}

namespace {

std::vector<BigInt> divisors(BigInt v) {
  if (v < 0) v = -v;
  std::vector<BigInt> out;
  if (v == 0) return out;
  // Rational-root candidates only come from display-sized polynomials.
  for (BigInt i = 1; i * i <= v; ++i) {
    if (v % i == 0) {
      out.push_back(i);
      if (i * i != v) out.push_back(v / i);
    }
  }
  return out;
}

}  // namespace

std::string factored_string(const UniPoly& p, const std::string& var) {
  if (p.degree() <= 0) return p.to_string(var);
  // Clear denominators to get an integer polynomial with positive leading term.
  BigInt lcm_den = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  UniPoly work = p * Rational(lcm_den);
  BigInt content = 0;
  for (const auto& c : work.coefficients()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.num().get_mpz_t());
  if (work.leading_coefficient().sign() < 0) content = -content;
  work *= Rational(1, content);
  const Rational scalar = Rational(content, lcm_den);

  std::map<Rational, int> roots;
  bool progress = true;
  while (progress && work.degree() > 0) {
    progress = false;
    if (work.coefficient(0).is_zero()) {
      roots[Rational(0)]++;
      work = work.divide(UniPoly::linear_root(0));
      progress = true;
      continue;
    }
    const BigInt a0 = work.coefficient(0).to_integer();
    const BigInt an = work.leading_coefficient().to_integer();
    const auto ps = divisors(a0);
    const auto qs = divisors(an);
    for (const auto& num : ps) {
      for (const auto& den : qs) {
        for (int sgn : {1, -1}) {
          const Rational r(sgn * num, den);
          if (work.evaluate(r).is_zero()) {
            roots[r]++;
            work = work.divide(UniPoly::linear_root(r));
            // Gauss: the cofactor of (den*x - num) stays integral.
            work *= Rational(1, den);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  const Rational total = scalar;

  std::string s;
  if (!total.is_one()) s += total == Rational(-1) ? "-" : (total.is_integer() ? total.to_string() : "(" + total.to_string() + ")");
  // Roots in descending order read like (d+1)d(d-1).
  for (auto it = roots.rbegin(); it != roots.rend(); ++it) {
    const auto& [r, mult] = *it;
    std::string f;
    if (r.is_zero()) {
      f = var;
    } else {
      // Factor is (den*x - num).
      const Rational den(r.den());
      std::string lin = (den.is_one() ? "" : den.to_string()) + var;
      const Rational c = -Rational(r.num());
      lin += (c.sign() > 0 ? "+" : "-") + (c.sign() > 0 ? c : -c).to_string();
      f = "(" + lin + ")";
    }
    if (mult > 1) f += "^" + std::to_string(mult);
    s += f;
  }
  if (work.degree() > 0) s += "(" + work.to_string(var) + ")";
  else if (!work.coefficient(0).is_one()) s += work.coefficient(0).to_string();
  return s.empty() ? "1" : s;
}

}  // namespace cpold

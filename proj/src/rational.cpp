#include "cpold/rational.hpp"

#include <vector>

#include "cpold/error.hpp"

namespace cpold {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::inconsistent_data: return "inconsistent-data";
    case ErrorKind::not_invertible: return "not-invertible";
    case ErrorKind::invalid_index: return "invalid-index";
    case ErrorKind::not_symmetric: return "not-symmetric";
    case ErrorKind::invalid_bound: return "invalid-bound";
    case ErrorKind::out_of_domain: return "out-of-domain";
    case ErrorKind::empty_fano: return "empty-fano";
    case ErrorKind::unsupported_degree: return "unsupported-degree";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::internal_error: return "internal-error";
  }
  return "unknown";
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::invalid_input, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  if (s.empty()) throw Error(ErrorKind::invalid_input, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::invalid_input, "bad rational literal: " + s);
  if (q.get_den() == 0) throw Error(ErrorKind::invalid_input, "zero denominator: " + s);
  q.canonicalize();
  Rational r;
  r.value_ = q;
  return r;
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw Error(ErrorKind::invalid_input, "not an integer: " + to_string());
  return value_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::invalid_input, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), base.value().get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), base.value().get_den_mpz_t(), exponent);
  return Rational(n, d);
}

BigInt factorial(long n) {
  if (n < 0) throw Error(ErrorKind::invalid_input, "factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(const BigInt& n, long k) {
  if (k < 0) return 0;
  BigInt r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(const std::vector<long>& parts) {
  BigInt r = 1;
  long total = 0;
  for (long p : parts) {
    if (p < 0) return 0;
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

}  // namespace cpold

#include "cpold/multipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cpold/error.hpp"

namespace cpold {

bool GradedLex::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

int TruncationPolicy::degree_of(const Exponent& e) const {
  int deg = 0;
  for (std::size_t i = 0; i < e.size(); ++i) deg += e[i] * (weights.empty() ? 1 : weights.at(i));
  return deg;
}

MultiPoly::MultiPoly(std::size_t num_vars, std::vector<std::string> names) : num_vars_(num_vars) {
  set_names(std::move(names));
}

void MultiPoly::set_names(std::vector<std::string> names) {
  if (!names.empty() && names.size() != num_vars_)
    throw Error(ErrorKind::invalid_input, "variable name list does not match the number of variables");
  names_ = std::move(names);
}

std::string MultiPoly::var_name(std::size_t i) const {
  if (i < names_.size()) return names_[i];
  return "x" + std::to_string(i + 1);
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponent(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index, const Rational& c) {
  if (index >= num_vars) throw Error(ErrorKind::invalid_input, "variable index out of range");
  MultiPoly p(num_vars);
  Exponent e(num_vars, 0);
  e[index] = 1;
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& u, std::size_t num_vars, std::size_t index) {
  MultiPoly p(num_vars);
  for (const auto& [e, c] : u.terms()) {
    Exponent ex(num_vars, 0);
    ex.at(index) = e;
    p.add_term(ex, c);
  }
  return p;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != num_vars_) throw Error(ErrorKind::invalid_input, "exponent length does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return UniPoly::kMinusInfinity;
  const auto& e = terms_.rbegin()->first;  // graded order puts the top degree last
  return std::accumulate(e.begin(), e.end(), 0);
}

MultiPoly MultiPoly::homogeneous_component(int degree) const {
  MultiPoly out(num_vars_, names_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

MultiPoly MultiPoly::truncated(const TruncationPolicy& policy) const {
  MultiPoly out(num_vars_, names_);
  for (const auto& [e, c] : terms_)
    if (policy.keeps(e)) out.terms_.emplace_hint(out.terms_.end(), e, c);
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw Error(ErrorKind::invalid_input, "evaluation point has wrong dimension");
  Rational acc;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < num_vars_; ++i)
      if (e[i] != 0) t *= pow(point[i], static_cast<unsigned>(e[i]));
    acc += t;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> values) const {
  if (values.size() != num_vars_) throw Error(ErrorKind::invalid_input, "substitution has wrong arity");
  const std::size_t target = values.empty() ? 0 : values[0].num_vars();
  MultiPoly acc(target);
  // Power caches per variable.
  std::vector<std::vector<MultiPoly>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) powers[i].push_back(MultiPoly::constant(target, 1));
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * values[i]);
      if (e[i] != 0) t = t * powers[i][static_cast<std::size_t>(e[i])];
    }
    acc += t;
  }
  return acc;
}

UniPoly MultiPoly::to_unipoly() const {
  if (num_vars_ != 1) throw Error(ErrorKind::invalid_input, "univariate view needs exactly one variable");
  std::vector<Rational> c;
  for (const auto& [e, v] : terms_) {
    if (static_cast<int>(c.size()) <= e[0]) c.resize(static_cast<std::size_t>(e[0]) + 1);
    c[static_cast<std::size_t>(e[0])] = v;
  }
  return UniPoly(std::move(c));
}

bool MultiPoly::is_symmetric() const {
  // Symmetric iff every term matches its sorted exponent and each sorted
  // exponent shows up once per distinct permutation.
  std::map<Exponent, std::size_t> seen;
  for (const auto& [e, c] : terms_) {
    Exponent s = e;
    std::sort(s.begin(), s.end(), std::greater<>());
    if (coefficient(s) != c) return false;
    ++seen[s];
  }
  for (const auto& [sorted, count] : seen) {
    Exponent s = sorted;
    std::size_t perms = 0;
    std::sort(s.begin(), s.end());
    do ++perms;
    while (std::next_permutation(s.begin(), s.end()));
    if (perms != count) return false;
  }
  return true;
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (o.num_vars_ != num_vars_) throw Error(ErrorKind::invalid_input, "polynomials live in different rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.num_vars_, a.names_);
  Exponent e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c;
    if (c.sign() < 0) {
      s += "-";
      mag = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      s += mag.to_string();
    } else {
      if (!mag.is_one()) s += (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + "*";
      s += mono;
    }
  }
  return s;
}

MultiPoly multiply(const MultiPoly& a, const MultiPoly& b, const TruncationPolicy& policy) {
  if (a.num_vars() != b.num_vars()) throw Error(ErrorKind::invalid_input, "polynomials live in different rings");
  MultiPoly out(a.num_vars(), a.names());
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms()) {
    const int da = policy.degree_of(ea);
    if (da > policy.max_total_degree) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + policy.degree_of(eb) > policy.max_total_degree) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

void multiply_by_linear(MultiPoly& p, std::span<const Rational> coeffs, const TruncationPolicy& policy) {
  if (coeffs.size() != p.num_vars()) throw Error(ErrorKind::invalid_input, "linear factor has wrong arity");
  MultiPoly extra(p.num_vars());
  Exponent e;
  for (const auto& [ep, cp] : p.terms()) {
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i].is_zero()) continue;
      e = ep;
      e[i] += 1;
      if (!policy.keeps(e)) continue;
      extra.add_term(e, cp * coeffs[i]);
    }
  }
  p += extra;
}

namespace {

// Splits a polynomial into its (weighted) homogeneous pieces 0..max.
std::vector<MultiPoly> graded_pieces(const MultiPoly& f, const TruncationPolicy& policy) {
  std::vector<MultiPoly> pieces(static_cast<std::size_t>(std::max(policy.max_total_degree, 0)) + 1,
                                MultiPoly(f.num_vars(), f.names()));
  for (const auto& [e, c] : f.terms()) {
    const int d = policy.degree_of(e);
    if (d <= policy.max_total_degree) pieces[static_cast<std::size_t>(d)].add_term(e, c);
  }
  return pieces;
}

}  // namespace

MultiPoly invert(const MultiPoly& f, const TruncationPolicy& policy) {
  if (f.constant_term() != Rational(1))
    throw Error(ErrorKind::not_invertible, "series inverse needs constant term 1");
  if (policy.max_total_degree < 0) return MultiPoly(f.num_vars(), f.names());
  const auto fp = graded_pieces(f, policy);
  std::vector<MultiPoly> g(fp.size(), MultiPoly(f.num_vars(), f.names()));
  g[0] = MultiPoly::constant(f.num_vars(), 1);
  for (std::size_t j = 1; j < g.size(); ++j) {
    MultiPoly acc(f.num_vars());
    for (std::size_t i = 1; i <= j; ++i) {
      if (fp[i].is_zero() || g[j - i].is_zero()) continue;
      acc += fp[i] * g[j - i];
    }
    g[j] = -acc;
  }
  MultiPoly out(f.num_vars(), f.names());
  for (const auto& piece : g) out += piece;
  return out;
}

MultiPoly divide(const MultiPoly& a, const MultiPoly& b, const TruncationPolicy& policy) {
  return multiply(a, invert(b, policy), policy);
}

MultiPoly series_arith(SeriesOp op, std::span<const MultiPoly> operands, const TruncationPolicy& policy) {
  switch (op) {
    case SeriesOp::multiply: {
      if (operands.empty()) throw Error(ErrorKind::invalid_input, "multiply needs at least one operand");
      MultiPoly acc = operands[0].truncated(policy);
      for (std::size_t i = 1; i < operands.size(); ++i) acc = multiply(acc, operands[i], policy);
      return acc;
    }
    case SeriesOp::invert:
      if (operands.size() != 1) throw Error(ErrorKind::invalid_input, "invert takes exactly one operand");
      return invert(operands[0], policy);
    case SeriesOp::divide:
      if (operands.size() != 2) throw Error(ErrorKind::invalid_input, "divide takes exactly two operands");
      return divide(operands[0], operands[1], policy);
  }
  throw Error(ErrorKind::internal_error, "unknown series operation");
}

}  // namespace cpold

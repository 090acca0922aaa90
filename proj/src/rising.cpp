#include "cpold/rising.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "cpold/error.hpp"
#include "cpold/specialization.hpp"

namespace cpold {

BigInt VectorPartition::multiplicity_factorial() const {
  BigInt r = 1;
  std::size_t i = 0;
  while (i < blocks.size()) {
    std::size_t j = i;
    while (j < blocks.size() && blocks[j] == blocks[i]) ++j;
    r *= factorial(static_cast<long>(j - i));
    i = j;
  }
  return r;
}

namespace {

bool graded_less_equal(const IntVector& a, const IntVector& b) { return !GradedLex{}(b, a); }

// Nonzero vectors componentwise <= bound, in decreasing graded-lex order.
std::vector<IntVector> sub_vectors(const IntVector& bound) {
  std::vector<IntVector> out;
  IntVector v(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.size()) {
      if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) out.push_back(v);
      return;
    }
    for (int x = 0; x <= bound[i]; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) { return GradedLex{}(b, a); });
  return out;
}

}  // namespace

std::vector<VectorPartition> vector_partitions(const IntVector& target) {
  for (int x : target)
    if (x < 0) throw Error(ErrorKind::invalid_input, "vector partition target must be non-negative");
  using Blocks = std::vector<std::vector<IntVector>>;
  std::map<std::pair<IntVector, IntVector>, Blocks> memo;
  const IntVector zero(target.size(), 0);
  // Partitions of `remaining` whose largest block is <= ceiling.
  std::function<const Blocks&(const IntVector&, const IntVector&)> rec =
      [&](const IntVector& remaining, const IntVector& ceiling) -> const Blocks& {
    const auto key = std::make_pair(remaining, ceiling);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Blocks out;
    if (remaining == zero) {
      out.push_back({});
    } else {
      for (const auto& block : sub_vectors(remaining)) {
        if (!graded_less_equal(block, ceiling)) continue;
        IntVector rest = remaining;
        for (std::size_t i = 0; i < rest.size(); ++i) rest[i] -= block[i];
        for (const auto& tail : rec(rest, block)) {
          std::vector<IntVector> blocks{block};
          blocks.insert(blocks.end(), tail.begin(), tail.end());
          out.push_back(std::move(blocks));
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };
  std::vector<VectorPartition> result;
  for (const auto& blocks : rec(target, target)) result.push_back(VectorPartition{blocks});
  return result;
}

void RisingProductSpec::add(const IntVector& exponent, int t_power, const MultiPoly& c) {
  if (t_power < 0) throw Error(ErrorKind::invalid_input, "negative t exponent");
  if (c.num_vars() != num_params()) throw Error(ErrorKind::invalid_input, "coefficient is not a polynomial in the parameters");
  if (c.is_zero()) return;
  auto [it, inserted] = table.try_emplace({exponent, t_power}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) table.erase(it);
  }
}

void RisingProductSpec::add(const IntVector& exponent, int t_power, const UniPoly& c) {
  if (num_params() != 1) throw Error(ErrorKind::invalid_input, "univariate coefficient needs a one-parameter spec");
  add(exponent, t_power, MultiPoly::from_unipoly(c, 1, 0));
}

std::vector<int> RisingProductSpec::support(const IntVector& exponent) const {
  std::vector<int> out;
  for (auto it = table.lower_bound({exponent, 0}); it != table.end() && it->first.first == exponent; ++it)
    out.push_back(it->first.second);
  return out;
}

const MultiPoly* RisingProductSpec::entry(const IntVector& exponent, int t_power) const {
  auto it = table.find({exponent, t_power});
  return it == table.end() ? nullptr : &it->second;
}

void RisingProductSpec::validate() const {
  if (params.empty()) throw Error(ErrorKind::invalid_input, "a rising product needs at least one parameter");
  if (bound.num_vars() != num_params()) throw Error(ErrorKind::invalid_input, "K must be a polynomial in the parameters");
  for (const auto& [key, c] : table) {
    const auto& [e, m] = key;
    if (e.size() != num_x) throw Error(ErrorKind::invalid_input, "exponent vector has the wrong length");
    if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; }))
      throw Error(ErrorKind::invalid_input, "P must have constant term 1 in x");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
      throw Error(ErrorKind::invalid_input, "negative exponent in the table");
    if (c.num_vars() != num_params()) throw Error(ErrorKind::invalid_input, "coefficient arity mismatch");
  }
}

MultiPoly stirling_coefficient(const RisingProductSpec& spec, const IntVector& target) {
  spec.validate();
  if (target.size() != spec.num_x) throw Error(ErrorKind::invalid_input, "H has the wrong length");
  const std::size_t np = spec.num_params();

  // Group prod_s P_{J_s, lambda_s} / mult(J)! by the sorted lambda, then apply M~ once per lambda.
  std::map<WeakPartition, MultiPoly> grouped;
  for (const auto& J : vector_partitions(target)) {
    std::vector<std::vector<int>> supports;
    bool empty = false;
    for (const auto& block : J.blocks) {
      supports.push_back(spec.support(block));
      if (supports.back().empty()) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    const Rational inv_mult(1, J.multiplicity_factorial());
    std::vector<int> lambda(J.length());
    std::function<void(std::size_t, const MultiPoly&)> rec = [&](std::size_t s, const MultiPoly& acc) {
      if (s == J.length()) {
        auto key = WeakPartition::sorted(lambda);
        auto [it, inserted] = grouped.try_emplace(key, MultiPoly(np));
        it->second += acc * inv_mult;
        return;
      }
      for (int m : supports[s]) {
        lambda[s] = m;
        rec(s + 1, acc * *spec.entry(J.blocks[s], m));
      }
    };
    rec(0, MultiPoly::constant(np, 1));
  }

  MultiPoly result(np, spec.params);
  for (const auto& [lambda, coeff] : grouped) {
    if (coeff.is_zero()) continue;
    const UniPoly m = M_tilde(lambda);
    // Horner: M~(K(d)).
    MultiPoly composed(np);
    const auto& cs = m.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      composed = composed * spec.bound;
      composed += MultiPoly::constant(np, *it);
    }
    result += coeff * composed;
  }
  return result;
}

UniPoly stirling_coefficient_univariate(const RisingProductSpec& spec, const IntVector& target) {
  return stirling_coefficient(spec, target).to_unipoly();
}

SimpleCoefficient simple_coefficient(const IntVector& exponents, const IntVector& target) {
  if (exponents.size() != target.size()) throw Error(ErrorKind::invalid_input, "E and H must have equal length");
  std::map<int, std::vector<long>> groups;
  for (std::size_t s = 0; s < target.size(); ++s) {
    if (target[s] == 0) throw Error(ErrorKind::invalid_input, "every H_s must be nonzero");
    if (target[s] < 0 || exponents[s] < 0) throw Error(ErrorKind::invalid_input, "negative entry");
    groups[exponents[s]].push_back(target[s]);
  }
  SimpleCoefficient out;
  out.multinomial_product = 1;
  std::vector<int> parts;
  for (const auto& [value, hs] : groups) {
    const BigInt mn = multinomial(hs);
    out.group_multinomials.emplace(value, mn);
    out.multinomial_product *= mn;
    const long total = std::accumulate(hs.begin(), hs.end(), 0L);
    parts.insert(parts.end(), static_cast<std::size_t>(total), value);
  }
  out.lambda = WeakPartition::sorted(std::move(parts));
  return out;
}

long LinearForm::operator()(const IntVector& v) const {
  if (v.size() > weights.size()) throw Error(ErrorKind::invalid_input, "linear form has too few weights");
  long acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += static_cast<long>(weights[i]) * v[i];
  return acc;
}

long degree_bound(const LinearForm& form, const IntVector& target) {
  return form(target) + std::accumulate(target.begin(), target.end(), 0L);
}

LeadingCoefficient leading_coefficient(const RisingProductSpec& spec, const LinearForm& form, const IntVector& target) {
  spec.validate();
  if (spec.num_params() != 1) throw Error(ErrorKind::invalid_input, "leading coefficient needs a one-parameter spec");
  if (spec.bound.total_degree() > 1) throw Error(ErrorKind::invalid_input, "K must be linear");
  for (const auto& [key, c] : spec.table) {
    if (c.total_degree() + key.second > form(key.first))
      throw Error(ErrorKind::invalid_bound, "a table entry exceeds the linear form bound");
  }
  const Rational slope = spec.bound.coefficient({1});

  LeadingCoefficient out;
  out.bound = degree_bound(form, target);
  out.coefficient = 1;
  out.sharp = true;
  for (std::size_t i = 0; i < spec.num_x; ++i) {
    IntVector unit(spec.num_x, 0);
    unit[i] = 1;
    const long w = form(unit);
    Rational factor;
    for (int m : spec.support(unit)) {
      const long e = w - m;
      if (e < 0) continue;
      // K(d) = a d + b contributes a^{m+1} through M~'s leading term.
      factor += spec.entry(unit, m)->coefficient({static_cast<int>(e)}) * pow(slope, static_cast<unsigned>(m + 1)) /
                Rational(m + 1);
    }
    if (factor.is_zero()) out.sharp = false;
    const int h = i < target.size() ? target[i] : 0;
    out.coefficient *= pow(factor, static_cast<unsigned>(h)) / Rational(factorial(h));
  }
  return out;
}

MultiPoly direct_rising_oracle(const RisingProductSpec& spec, std::span<const long> params,
                               const TruncationPolicy& policy) {
  spec.validate();
  if (params.size() != spec.num_params()) throw Error(ErrorKind::invalid_input, "wrong number of parameters");
  std::vector<Rational> point(params.begin(), params.end());
  const Rational k = spec.bound.evaluate(point);
  if (!k.is_integer()) throw Error(ErrorKind::out_of_domain, "K is not integral at these parameters");
  const BigInt upper = k.to_integer();
  if (upper < -1) throw Error(ErrorKind::out_of_domain, "K(d) < -1");
  std::vector<std::pair<std::pair<IntVector, int>, Rational>> evaluated;
  for (const auto& [key, c] : spec.table) evaluated.emplace_back(key, c.evaluate(point));

  MultiPoly acc = MultiPoly::constant(spec.num_x, 1);
  for (long t = 0; t <= upper.get_si(); ++t) {
    MultiPoly factor = MultiPoly::constant(spec.num_x, 1);
    for (const auto& [key, c] : evaluated) {
      if (!policy.keeps(key.first)) continue;
      factor.add_term(key.first, c * pow(Rational(t), static_cast<unsigned>(key.second)));
    }
    acc = multiply(acc, factor, policy);
  }
  return acc;
}

}  // namespace cpold

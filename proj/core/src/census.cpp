#include "primepoly/census.hpp"

#include <algorithm>
#include <map>

#include "primepoly/roots.hpp"

namespace primepoly {

FactoredPolynomial::FactoredPolynomial(std::vector<RatPolynomial> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw InvalidInput("factored polynomial needs at least one factor");
  product_ = RatPolynomial::constant(1);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].is_constant()) {
      throw InvalidInput("factor " + std::to_string(i) + " is constant: " + format_poly(factors_[i]));
    }
    product_ *= factors_[i];
  }
}

UnitFibers unit_fibers(const RatPolynomial& g) {
  if (g.is_constant()) throw InvalidInput("unit_fibers: constant polynomial");
  return {integer_solutions(g, 1), integer_solutions(g, -1)};
}

Census prime_census(const FactoredPolynomial& f) {
  if (f.factors().size() < 2) throw InvalidInput("prime_census needs at least two factors");
  for (std::size_t i = 0; i < f.factors().size(); ++i) {
    if (!is_integer_valued(f.factors()[i])) {
      throw InvalidInput("factor " + std::to_string(i) + " is not integer-valued: " + format_poly(f.factors()[i]));
    }
  }
  Census c;
  c.degree = f.degree();
  for (std::size_t i = 0; i < f.factors().size(); ++i) {
    const auto& g = f.factors()[i];
    auto fib = unit_fibers(g);
    c.fibers.push_back({i, 1, g - 1, fib.plus});
    c.fibers.push_back({i, -1, g + 1, fib.minus});
    c.candidates.insert(c.candidates.end(), fib.plus.begin(), fib.plus.end());
    c.candidates.insert(c.candidates.end(), fib.minus.begin(), fib.minus.end());
  }
  std::sort(c.candidates.begin(), c.candidates.end());
  c.candidates.erase(std::unique(c.candidates.begin(), c.candidates.end()), c.candidates.end());

  for (const auto& m : c.candidates) {
    const Rational value = f.product()(Rational(m));
    // integer-valued factors give an integer product
    const auto verdict = is_prime(value.get_num());
    if (!verdict.passed()) continue;
    CensusWitness w{m, value.get_num(), verdict.status, {}};
    for (std::size_t i = 0; i < f.factors().size(); ++i) {
      if (abs(f.factors()[i](Rational(m))) == 1) w.unit_factors.push_back(i);
    }
    ++c.P;
    if (w.value > 0) ++c.Pplus;
    c.witnesses.push_back(std::move(w));
  }
  return c;
}

LevelCensus level_census(const RatPolynomial& f, const std::vector<Integer>& S) {
  if (f.is_constant()) throw InvalidInput("level_census: constant polynomial");
  if (S.empty()) throw InvalidInput("level_census: empty level set");
  std::map<Integer, Integer> hits;
  for (const auto& s : S) {
    for (auto& m : integer_solutions(f, Rational(s))) hits.emplace(std::move(m), s);
  }
  LevelCensus out;
  out.count = hits.size();
  for (auto& [m, v] : hits) out.witnesses.push_back({m, v});
  return out;
}

}  // namespace primepoly

#include "primepoly/sampling.hpp"

namespace primepoly {

namespace {

std::vector<Rational> random_coeffs(std::mt19937_64& rng, int min_degree, int max_degree, int coeff_bound) {
  if (min_degree < 0 || min_degree > max_degree || coeff_bound < 1) {
    throw InvalidInput("random polynomial: bad degree range or coefficient bound");
  }
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> lead(1, 2 * coeff_bound);
  const int d = deg(rng);
  std::vector<Rational> c(d + 1);
  for (int i = 0; i < d; ++i) c[i] = coeff(rng);
  const int l = lead(rng);
  c[d] = l <= coeff_bound ? l : coeff_bound - l;  // maps 1..2B onto +-1..+-B
  return c;
}

}  // namespace

RatPolynomial random_integer_poly(std::mt19937_64& rng, int min_degree, int max_degree, int coeff_bound) {
  return RatPolynomial(random_coeffs(rng, min_degree, max_degree, coeff_bound));
}

RatPolynomial random_integer_valued_poly(std::mt19937_64& rng, int min_degree, int max_degree, int coeff_bound) {
  return from_binomial(BinomialForm{random_coeffs(rng, min_degree, max_degree, coeff_bound)});
}

}  // namespace primepoly

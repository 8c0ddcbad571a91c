#pragma once

#include <random>

#include "primepoly/poly.hpp"

namespace primepoly {

// Integer polynomial with degree uniform in [min_degree, max_degree],
// coefficients uniform in [-coeff_bound, coeff_bound] and a nonzero leading
// coefficient.
RatPolynomial random_integer_poly(std::mt19937_64& rng, int min_degree, int max_degree, int coeff_bound);

// Integer-valued polynomial given by random integer coefficients in the
// binomial basis (same degree and bound conventions).
RatPolynomial random_integer_valued_poly(std::mt19937_64& rng, int min_degree, int max_degree, int coeff_bound);

}  // namespace primepoly

#pragma once

#include <cstddef>
#include <vector>

#include "primepoly/poly.hpp"

namespace primepoly {

/// A real algebraic number: the unique root of `defining` in [lo, hi].
///
/// `defining` is square-free. Either lo == hi (an exact rational root) or
/// lo < hi with neither endpoint a root. Endpoints produced by bisection are
/// dyadic rationals.
struct IsolatedRoot {
  RatPolynomial defining;
  Rational lo;
  Rational hi;

  bool is_exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
};

/// Two-sided enclosure of a Lebesgue measure.
struct MeasureBracket {
  Rational lower;
  Rational upper;
  Rational tolerance;
};

RatPolynomial square_free_part(const RatPolynomial& p);

// Sturm chain of the square-free part of p, each member scaled to a primitive
// integer polynomial by a positive factor.
std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);
std::size_t sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x);
// Variations at +infinity (positive = true) or -infinity.
std::size_t sign_variations_at_infinity(const std::vector<RatPolynomial>& chain, bool positive);

// Power of two strictly above |root| for every complex root of p (Cauchy bound).
Rational root_bound(const RatPolynomial& p);

// Distinct real roots in (lo, hi]. Throws InvalidInput for the zero polynomial or lo >= hi.
std::size_t sturm_count(const RatPolynomial& p, const Rational& lo, const Rational& hi);
// Distinct real roots on the whole line.
std::size_t count_real_roots(const RatPolynomial& p);

// One isolating interval per distinct real root, ascending and pairwise
// disjoint. Rational roots come back exact. Throws InvalidInput for zero p.
std::vector<IsolatedRoot> isolate_roots(const RatPolynomial& p);

// Bisects until width <= max_width (exact roots are left alone).
IsolatedRoot refine(IsolatedRoot root, const Rational& max_width);

// Every integer m with p(m) == v, ascending. Throws InvalidInput if p is constant.
std::vector<Integer> integer_solutions(const RatPolynomial& p, const Rational& v);

// Sign of q at the root: 0 exactly when q vanishes there.
int sign_at(const RatPolynomial& q, const IsolatedRoot& root);

// Measure of {x : |p(x)| <= K}, bracketed to within tol.
MeasureBracket sublevel_measure(const RatPolynomial& p, const Rational& K, const Rational& tol);

}  // namespace primepoly

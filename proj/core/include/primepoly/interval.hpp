#pragma once

#include <string>

#include "primepoly/numeric.hpp"

namespace primepoly {

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
};

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
// both operands nonnegative
RationalInterval mul_nonnegative(const RationalInterval& a, const RationalInterval& b);

// Enclosures of transcendental values, computed in binary floating point with
// `bits` of precision and outward (directed) rounding at every step.
RationalInterval log_enclosure(const Rational& x, unsigned bits);                     // x > 0
RationalInterval root_enclosure(const Rational& x, unsigned long n, unsigned bits);  // x >= 0, n >= 1

// Decimal text of q with `digits` fractional digits, rounded toward -inf / +inf.
std::string decimal_floor(const Rational& q, int digits);
std::string decimal_ceil(const Rational& q, int digits);
// Short scientific rendering of an upper bound, e.g. "3.2e-13" (rounded up).
std::string scientific_upper(const Rational& q);

}  // namespace primepoly

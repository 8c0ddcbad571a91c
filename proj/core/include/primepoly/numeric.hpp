#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace primepoly {

using Integer = mpz_class;
using Rational = mpq_class;

// Error taxonomy. The CLI maps each family onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A bounded search ran out of budget before finding a hit.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// A property that must always hold failed. Always a bug.
class PropertyViolation : public Error {
 public:
  using Error::Error;
};

// Canonical decimal text: "n" for integers, "p/q" otherwise (lowest terms, q > 0).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "int" or "int/int" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
Integer factorial(unsigned long n);

// floor and ceiling of a rational as integers
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

}  // namespace primepoly

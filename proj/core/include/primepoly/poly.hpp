#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "primepoly/numeric.hpp"

namespace primepoly {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are stored in ascending degree with trailing zeros trimmed,
/// so the zero polynomial is the empty sequence and reports
/// `kZeroDegree` as its degree. Values are immutable once built; all
/// arithmetic returns fresh polynomials.
class RatPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);

  static RatPolynomial constant(const Rational& c);
  static RatPolynomial monomial(const Rational& c, unsigned degree);
  // x - root
  static RatPolynomial linear_factor(const Rational& root);
  static RatPolynomial identity() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // true for zero and nonzero constants alike
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  // 0 beyond the stored range
  Rational coeff(std::size_t i) const;
  // 0 for the zero polynomial
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  RatPolynomial operator-() const;
  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& c);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
  friend RatPolynomial operator*(RatPolynomial a, const Rational& c) { return a *= c; }
  friend RatPolynomial operator*(const Rational& c, RatPolynomial a) { return a *= c; }

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPolynomial make_poly(std::vector<Rational> coeffs);
RatPolynomial make_poly(std::initializer_list<long> coeffs);
RatPolynomial operator+(RatPolynomial a, const Rational& c);
RatPolynomial operator-(RatPolynomial a, const Rational& c);

struct DivMod {
  RatPolynomial quotient;
  RatPolynomial remainder;
};

// Euclidean division over Q. Throws InvalidInput on a zero divisor.
DivMod divmod(const RatPolynomial& a, const RatPolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial derivative(const RatPolynomial& p);
RatPolynomial make_monic(const RatPolynomial& p);
// Positive rational multiple of p with coprime integer coefficients. Sign of p is kept.
RatPolynomial primitive_part(const RatPolynomial& p);

// sigma * p(tau * x + a) with sigma, tau in {+1, -1}.
RatPolynomial compose_affine(const RatPolynomial& p, int sigma, int tau, const Integer& a);

// ---- Binomial basis ---------------------------------------------------------

/// f(x) = sum_k coeffs[k] * C(x, k), where C(x, k) = x(x-1)...(x-k+1)/k!.
struct BinomialForm {
  std::vector<Rational> coeffs;

  // Integer-valued on Z exactly when every binomial coefficient is integral.
  bool integer_valued() const;
  friend bool operator==(const BinomialForm&, const BinomialForm&) = default;
};

// C(x, k) as a power-basis polynomial.
RatPolynomial binomial_poly(unsigned k);
BinomialForm to_binomial(const RatPolynomial& p);
RatPolynomial from_binomial(const BinomialForm& b);
bool is_integer_valued(const RatPolynomial& p);

struct IntegerScaled {
  std::vector<Integer> coeffs;  // ascending, equal to denominator * p
  Integer denominator;          // least common denominator, > 0
};

// Throws InvalidInput for the zero polynomial.
IntegerScaled scale_to_integer(const RatPolynomial& p);

// ---- Ring elements used for exact evaluation ----------------------------------

struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational conj() const { return {re, -im}; }
  bool is_real() const { return im == 0; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// a + b*sqrt(d) for a fixed square-free d >= 2.
class QuadExtElement {
 public:
  QuadExtElement(Rational a, Rational b, Integer d);
  static QuadExtElement sqrt(const Integer& d) { return {0, 1, d}; }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Integer& d() const { return d_; }
  bool is_rational() const { return b_ == 0; }
  // exact sign of a + b*sqrt(d)
  int sign() const;

  // Mixing elements with different d throws InvalidInput.
  friend QuadExtElement operator+(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator-(const QuadExtElement& x, const QuadExtElement& y);
  friend QuadExtElement operator*(const QuadExtElement& x, const QuadExtElement& y);
  friend bool operator==(const QuadExtElement& x, const QuadExtElement& y);

 private:
  Rational a_;
  Rational b_;
  Integer d_;
};

std::string to_string(const GaussianRational& z);
std::string to_string(const QuadExtElement& z);

Rational evaluate(const RatPolynomial& p, const Rational& x);
GaussianRational evaluate(const RatPolynomial& p, const GaussianRational& x);
QuadExtElement evaluate(const RatPolynomial& p, const QuadExtElement& x);

// ---- Text grammar -------------------------------------------------------------
//
// Comma-separated rationals in ascending degree, e.g. "1,-3,1" for x^2-3x+1.
// A "binom:" prefix reads the coefficients in the binomial basis.

RatPolynomial parse_poly(std::string_view text);
// Canonical power-basis text; "0" for the zero polynomial.
std::string format_poly(const RatPolynomial& p);
// Human-readable form, e.g. "x^2 - 3*x + 1".
std::string pretty(const RatPolynomial& p);

}  // namespace primepoly

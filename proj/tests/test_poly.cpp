#include <random>

#include "doctest.h"
#include "primepoly/poly.hpp"
#include "primepoly/sampling.hpp"

using namespace primepoly;

namespace {

RatPolynomial random_rational_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-20, 20), den(1, 7);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return make_poly(c);
}

Integer horner(const std::vector<Integer>& c, const Integer& m) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + *it;
  return acc;
}

}  // namespace

TEST_CASE("numeric parsing") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/-2"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_integer("1/2"), InvalidInput);
  CHECK_THROWS_AS(parse_integer(""), InvalidInput);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(factorial(10) == 3628800);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("make_poly trims and keeps a zero sentinel") {
  const RatPolynomial h2 = make_poly({1, -3, 1});
  CHECK(h2.degree() == 2);
  CHECK(h2.leading() == 1);
  CHECK(pretty(h2) == "x^2 - 3*x + 1");

  const RatPolynomial zero = make_poly(std::vector<Rational>{});
  CHECK(zero.is_zero());
  CHECK(zero.degree() == RatPolynomial::kZeroDegree);
  CHECK(format_poly(zero) == "0");

  const RatPolynomial five = make_poly({5, 0, 0});
  CHECK(five.degree() == 0);
  CHECK(five.coeffs() == std::vector<Rational>{5});
  CHECK(make_poly({0, 0, 0}).is_zero());
}

TEST_CASE("to_binomial") {
  const RatPolynomial c2 = make_poly({0, -1, 1}) * Rational(1, 2);
  CHECK(to_binomial(c2).coeffs == std::vector<Rational>{0, 0, 1});
  CHECK(to_binomial(c2).integer_valued());

  const RatPolynomial half = make_poly({0, 1}) * Rational(1, 2);
  CHECK(to_binomial(half).coeffs == std::vector<Rational>{0, Rational(1, 2)});
  CHECK_FALSE(is_integer_valued(half));

  CHECK(to_binomial(make_poly({1, -3, 1})).coeffs == std::vector<Rational>{1, -2, 2});
  CHECK(binomial_poly(3) == make_poly({0, 2, -3, 1}) * Rational(1, 6));
}

TEST_CASE("evaluate over the three number kinds") {
  CHECK(evaluate(make_poly({1, -3, 1}), Rational(0)) == 1);

  const RatPolynomial h = RatPolynomial(std::vector<Rational>{Rational(17, 9), Rational(-8, 9), Rational(2, 9)});
  const GaussianRational hz = evaluate(h, GaussianRational{2, 3});
  CHECK(hz == GaussianRational{-1, 0});
  CHECK(evaluate(h, GaussianRational{2, -3}) == GaussianRational{-1, 0});

  const GaussianRational z{2, 3};
  CHECK(z * z * z == GaussianRational{-46, 9});
  CHECK(z / z == GaussianRational{1, 0});

  const RatPolynomial g(std::vector<Rational>{1, -1, 0, Rational(1, 3)});
  CHECK(evaluate(g, QuadExtElement::sqrt(3)) == QuadExtElement(1, 0, 3));
  CHECK(evaluate(g, QuadExtElement(0, -1, 3)) == QuadExtElement(1, 0, 3));
  CHECK(evaluate(g, GaussianRational{2, 3}) == GaussianRational{Rational(-49, 3), 0});
}

TEST_CASE("quadratic extension arithmetic") {
  const QuadExtElement r3 = QuadExtElement::sqrt(3);
  CHECK(r3 * r3 == QuadExtElement(3, 0, 3));
  CHECK(QuadExtElement(Rational(23, 9), Rational(-8, 9), 3).sign() == 1);  // 529 > 192
  CHECK(QuadExtElement(2, -2, 3).sign() == -1);                            // 4 < 12
  CHECK(QuadExtElement(0, 0, 3).sign() == 0);
  CHECK_THROWS_AS(r3 + QuadExtElement::sqrt(5), InvalidInput);
  CHECK_THROWS_AS(QuadExtElement(0, 1, 4), InvalidInput);
  CHECK_THROWS_AS(QuadExtElement(0, 1, 1), InvalidInput);
}

TEST_CASE("scale_to_integer") {
  const auto a = scale_to_integer(make_poly({0, -1, 1}) * Rational(1, 2));
  CHECK(a.denominator == 2);
  CHECK(a.coeffs == std::vector<Integer>{0, -1, 1});

  const auto b = scale_to_integer(make_poly({1, -3, 1}));
  CHECK(b.denominator == 1);
  CHECK(b.coeffs == std::vector<Integer>{1, -3, 1});

  const auto c = scale_to_integer(RatPolynomial(std::vector<Rational>{Rational(1, 6), Rational(1, 3)}));
  CHECK(c.denominator == 6);
  CHECK(c.coeffs == std::vector<Integer>{1, 2});

  CHECK_THROWS_AS(scale_to_integer(RatPolynomial()), InvalidInput);
}

TEST_CASE("compose_affine") {
  CHECK(compose_affine(make_poly({-1, 1}), 1, -1, 2) == make_poly({1, -1}));
  const RatPolynomial p = make_poly({4, 0, -2, 7});
  CHECK(compose_affine(p, 1, 1, 0) == p);
  CHECK(compose_affine(make_poly({1, -3, 1}), 1, 1, 4) == make_poly({5, 5, 1}));
  CHECK(compose_affine(p, -1, 1, 0) == -p);
}

TEST_CASE("derivative") {
  CHECK(derivative(make_poly({1, -3, 1})) == make_poly({-3, 2}));
  CHECK(derivative(make_poly({5})).is_zero());
  CHECK(derivative(RatPolynomial(std::vector<Rational>{1, -1, 0, Rational(1, 3)})) == make_poly({-1, 0, 1}));
}

TEST_CASE("division and gcd") {
  const RatPolynomial a = make_poly({-1, 0, 0, 1});  // x^3 - 1
  const RatPolynomial b = make_poly({-1, 1});
  const DivMod qr = divmod(a, b);
  CHECK(qr.quotient == make_poly({1, 1, 1}));
  CHECK(qr.remainder.is_zero());
  CHECK(gcd(make_poly({-1, 0, 1}), make_poly({2, -3, 1})) == make_poly({-1, 1}));
  CHECK_THROWS_AS(divmod(a, RatPolynomial()), InvalidInput);
}

TEST_CASE("text grammar") {
  CHECK(parse_poly("1,-3,1") == make_poly({1, -3, 1}));
  CHECK(parse_poly(" 1/2 , 0 , -3/4 ") == RatPolynomial(std::vector<Rational>{Rational(1, 2), 0, Rational(-3, 4)}));
  CHECK(parse_poly("binom:0,0,1") == make_poly({0, -1, 1}) * Rational(1, 2));
  CHECK(format_poly(make_poly({29, -11, 1})) == "29,-11,1");
  CHECK_THROWS_AS(parse_poly(""), InvalidInput);
  CHECK_THROWS_AS(parse_poly("1,,2"), InvalidInput);
  CHECK_THROWS_AS(parse_poly("1,x"), InvalidInput);
  CHECK_THROWS_AS(parse_poly("1/0"), InvalidInput);
}

TEST_CASE("property: evaluation agrees with integer Horner after scaling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    RatPolynomial p = random_rational_poly(rng, 8);
    if (p.is_zero()) continue;
    const IntegerScaled s = scale_to_integer(p);
    for (int m = -20; m <= 20; ++m) {
      CHECK(evaluate(p, Rational(m)) == Rational(horner(s.coeffs, m)) / s.denominator);
    }
  }
}

TEST_CASE("property: binomial round trip and three-way integer-valued agreement") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const RatPolynomial p = trial % 2 ? random_rational_poly(rng, 8) : random_integer_valued_poly(rng, 0, 8, 9);
    const BinomialForm b = to_binomial(p);
    CHECK(from_binomial(b) == p);

    bool values_integral = true;
    for (int m = 0; m <= std::max(p.degree(), 0); ++m) values_integral &= evaluate(p, Rational(m)).get_den() == 1;
    CHECK(values_integral == b.integer_valued());
    CHECK(values_integral == is_integer_valued(p));
    if (values_integral) {
      for (int m = -30; m <= 30; ++m) CHECK(evaluate(p, Rational(m)).get_den() == 1);
    }
  }
}

TEST_CASE("property: affine maps invert") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> sign(0, 1), shift(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPolynomial p = random_rational_poly(rng, 6);
    const int sigma = sign(rng) ? 1 : -1, tau = sign(rng) ? 1 : -1;
    const Integer a = shift(rng);
    // p(tau (tau x - tau a) + a) = p(x)
    const RatPolynomial q = compose_affine(p, sigma, tau, a);
    CHECK(compose_affine(q, sigma, tau, -tau * a) == p);
  }
}

TEST_CASE("property: derivative is linear and obeys the product rule") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const RatPolynomial p = random_rational_poly(rng, 6), q = random_rational_poly(rng, 6);
    const Rational c = Rational(trial - 100) / 7;
    CHECK(derivative(p + c * q) == derivative(p) + c * derivative(q));
    CHECK(derivative(p * q) == derivative(p) * q + p * derivative(q));
  }
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "primepoly/census.hpp"
#include "primepoly/interval.hpp"
#include "primepoly/roots.hpp"

namespace primepoly {

// ---- The constant c = 1 + 1/t, t(2 log t + 1/2) = 2 log 2 - 1/2 -------------------

struct ConstantSolution {
  int digits = 0;
  std::string t_star;    // certified truncation to `digits` decimals
  std::string c;         // likewise for 1 + 1/t
  std::string residual;  // upper bound on |lhs(t) - rhs| at the bracket midpoint
  Rational residual_bound;
  RationalInterval t_bracket;  // encloses the root
  std::size_t steps = 0;
};

// Enclosures used by the bisection (exposed for independent checks).
RationalInterval constant_lhs(const Rational& t, unsigned bits);  // t in [1, 2]
RationalInterval constant_rhs(unsigned bits);

using BracketObserver = std::function<void(const Rational& lo, const Rational& hi)>;

// Bisection on [1, 2]; 1 <= digits <= 50. The observer sees every bracket.
ConstantSolution solve_constant(int digits, const BracketObserver& observer = {});

// ---- Products over two point sets ------------------------------------------------

/// Products of |differences|: U within a, V within b, D across the two sets,
/// W over all pairs of the merged set (so W == U*V*D always).
struct SetPairData {
  std::vector<Integer> a;
  std::vector<Integer> b;
  Integer U;
  Integer V;
  Integer D;
  Integer W;
};

// Throws InvalidInput when the k+s points are not distinct or a set is empty.
SetPairData set_pair_data(const std::vector<Integer>& a, const std::vector<Integer>& b);

/// Outcome of one exact inequality check lhs >= rhs (both sides raised to a
/// common power so no roots are taken).
struct LemmaCheck {
  SetPairData data;
  Rational lhs;
  Rational rhs;
  unsigned exponent = 1;
  bool holds = false;
  bool identity_holds = false;  // W == U*V*D
};

// D >= U V (4/9)^k, with |a| == |b| == k.
LemmaCheck check_distance_product_bound(const std::vector<Integer>& a, const std::vector<Integer>& b);
// D^2 >= (4/9)^k * 1! 2! ... (2k-1)!, with |a| == |b| == k.
LemmaCheck check_superfactorial_bound(const std::vector<Integer>& a, const std::vector<Integer>& b);
// D^{2k} >= (2/3)^{2ks} * (1! 2! ... (2k-1)!)^s, with k = |a| <= s = |b|.
LemmaCheck check_unbalanced_superfactorial_bound(const std::vector<Integer>& a, const std::vector<Integer>& b);

// 1! 2! ... m!
Integer superfactorial(unsigned m);

struct LemmaSuiteReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int kmax = 0;
  int coord = 0;
  std::uint64_t distance_product_pass = 0;
  std::uint64_t superfactorial_pass = 0;
  std::uint64_t unbalanced_pass = 0;
  std::uint64_t identity_pass = 0;
  std::vector<std::string> counterexamples;  // must stay empty

  bool ok() const { return counterexamples.empty(); }
};

// `trials` random instances per lemma, sizes in 1..kmax, coordinates in [-coord, coord].
LemmaSuiteReport run_lemma_suite(std::uint64_t trials, std::uint64_t seed, int kmax = 6, int coord = 50);

// ---- Measure and level-set bounds --------------------------------------------------

struct PolyaCheck {
  MeasureBracket bracket;
  RationalInterval bound;  // enclosure of 4 (K/|lead|)^{1/n}
  bool holds = false;      // bracket.upper <= 4 (K/|lead|)^{1/n}, decided exactly
};

PolyaCheck check_polya(const RatPolynomial& f, const Rational& K, const Rational& tol);

struct ESUpperCheck {
  LevelCensus census;
  std::size_t E_S = 0;
  Integer K;               // max |s|
  RationalInterval bound;  // enclosure of n + 4 (K n!)^{1/n}
  bool holds = false;      // decided exactly; K = 0 means E_S <= n
};

// Throws InvalidInput if f is not integer-valued or is constant.
ESUpperCheck check_ES_upper(const RatPolynomial& f, const std::vector<Integer>& S);

struct ESLowerFamily {
  RatPolynomial f;      // a * C(x, n) + b
  BinomialForm binomial;
  std::vector<Integer> S;  // {b, a + b}
  LevelCensus census;
  std::size_t E_S = 0;
};

// n even >= 2, a != 0. Throws PropertyViolation if E_S < n + 2.
ESLowerFamily es_lower_family(int n, const Integer& a, const Integer& b);

}  // namespace primepoly

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primepoly/poly.hpp"
#include "primepoly/roots.hpp"

namespace primepoly {

// Which unit equation a real point satisfies.
enum class UnitType { g_plus, g_minus, h_plus, h_minus };

std::string to_string(UnitType t);

/// A real x with g(x) = +-1 or h(x) = +-1 and g(x) h(x) > 1.
///
/// A point where both factors are units has |gh| = 1 and is never bad, so
/// every surviving point carries exactly one type.
struct BadPoint {
  IsolatedRoot root;
  UnitType type;
};

struct Block {
  UnitType type;
  std::size_t first = 0;  // index into the point list
  std::size_t last = 0;
  bool extremal = false;  // contains the first or last point
};

/// Real bad points of a pair (g, h), grouped into maximal runs of equal type,
/// together with the derivative root counts that bound them.
struct BlockReport {
  RatPolynomial g;
  RatPolynomial h;
  int degree = 0;  // deg g + deg h
  std::vector<BadPoint> points;
  std::vector<Block> blocks;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t equal_pairs = 0;  // consecutive points of equal type, k - l
  std::size_t equal_pairs_g = 0;
  std::size_t equal_pairs_h = 0;
  std::size_t central_blocks = 0;
  std::size_t central_blocks_g = 0;
  std::size_t central_blocks_h = 0;
  std::size_t g_prime_roots = 0;  // distinct real roots of g'
  std::size_t h_prime_roots = 0;

  bool count_bound_holds() const { return k <= static_cast<std::size_t>(degree); }
  // g' roots + h' roots >= k - 2
  bool derivative_bound_holds() const { return g_prime_roots + h_prime_roots + 2 >= k; }
  // g' roots >= g-pairs + central h-blocks, and symmetrically for h'
  bool split_bounds_hold() const {
    return g_prime_roots >= equal_pairs_g + central_blocks_h && h_prime_roots >= equal_pairs_h + central_blocks_g;
  }
  bool holds() const { return count_bound_holds() && derivative_bound_holds() && split_bounds_hold(); }

  // e.g. "[g+ g+ h- g+]"
  std::string type_sequence() const;
};

// Ascending; throws InvalidInput if g or h is constant.
std::vector<BadPoint> bad_points(const RatPolynomial& g, const RatPolynomial& h);

BlockReport verify_bad_point_bound(const RatPolynomial& g, const RatPolynomial& h);

struct RandomPairSuite {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t max_k = 0;
  std::vector<BlockReport> failures;  // must stay empty
  std::vector<BlockReport> reports;   // kept only when requested

  bool ok() const { return failures.empty(); }
};

// Random integer pairs with 1 <= deg <= max_degree and |coeffs| <= coeff_bound.
RandomPairSuite run_bad_point_suite(std::uint64_t trials, std::uint64_t seed, int max_degree = 4,
                                    int coeff_bound = 5, bool keep_reports = false);

/// Exact verification of a complex pair with more bad points than its degree.
struct ComplexCounterexample {
  RatPolynomial g;  // x^3/3 - x + 1
  RatPolynomial h;  // (2/9)(x-2)^2 + 1
  int degree = 0;
  bool g_minus_one_factors = false;  // g - 1 == (x/3)(x^2 - 3)
  struct Point {
    std::string label;   // the point, e.g. "2+3*i"
    std::string type;    // g+ / h-
    std::string factor_value;
    std::string f_value;
    bool f_exceeds_one = false;
  };
  std::vector<Point> points;
  std::size_t real_bad_points = 0;  // what the real-only count gives

  bool verified() const;
};

ComplexCounterexample complex_counterexample();

}  // namespace primepoly

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "primepoly/census.hpp"
#include "primepoly/poly.hpp"

namespace primepoly {

// One row of the list of polynomials with more unit values than their degree.
struct ListEntry {
  int index = 0;  // 1..5
  RatPolynomial polynomial;
  int degree = 0;
  std::size_t expected_E = 0;
  UnitFibers fibers;
};

// h1 = x(x-1)(x-3)+1, h2 = (x-1)(x-2)-1, h3 = 2x(x-2)+1, h4 = 2x-1, h5 = x-1,
// each re-checked through unit_fibers (PropertyViolation on mismatch).
const std::vector<ListEntry>& dorwart_ore_list();

/// f = sigma * h_index(tau * x + a).
struct Equivalence {
  int index = 0;
  int sigma = 1;
  int tau = 1;
  Integer a;

  friend bool operator==(const Equivalence&, const Equivalence&) = default;
};

// First match in (index, sigma, tau) order with + before -. The shift a is
// pinned by the two leading coefficients. Degree outside 1..3 throws InvalidInput.
std::optional<Equivalence> equivalent_to_list(const RatPolynomial& f);

struct ExceptionalHit {
  RatPolynomial f;
  std::size_t E = 0;
  std::optional<Equivalence> equivalence;
};

struct ExceptionalReport {
  int degree = 0;
  int coeff_bound = 0;
  std::uint64_t candidates = 0;
  std::uint64_t list_equivalent = 0;  // candidates matching the list
  std::vector<ExceptionalHit> hits;   // E(f) > degree
  // E(f) > degree without a list match, or a list match with E(f) <= degree
  std::vector<ExceptionalHit> mismatches;

  bool consistent() const { return mismatches.empty(); }
};

// Every integer polynomial of exact degree `degree` (1..4) with coefficients in
// [-coeff_bound, coeff_bound]. Results are ordered by coefficient vector,
// leading coefficient first.
ExceptionalReport search_exceptional(int degree, int coeff_bound);

}  // namespace primepoly

#pragma once

#include <cstddef>
#include <vector>

#include "primepoly/poly.hpp"
#include "primepoly/primes.hpp"

namespace primepoly {

/// f given as an ordered product of nonconstant factors.
class FactoredPolynomial {
 public:
  // Throws InvalidInput if the list is empty or a factor is constant.
  explicit FactoredPolynomial(std::vector<RatPolynomial> factors);

  const std::vector<RatPolynomial>& factors() const { return factors_; }
  const RatPolynomial& product() const { return product_; }
  int degree() const { return product_.degree(); }

  friend bool operator==(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<RatPolynomial> factors_;
  RatPolynomial product_;
};

/// Integers where g = +1 and where g = -1.
struct UnitFibers {
  std::vector<Integer> plus;
  std::vector<Integer> minus;

  std::size_t E() const { return plus.size() + minus.size(); }
  friend bool operator==(const UnitFibers&, const UnitFibers&) = default;
};

// Throws InvalidInput for constant g.
UnitFibers unit_fibers(const RatPolynomial& g);

/// One solved equation `factor(x) - level = 0` backing the exhaustiveness claim.
struct FiberCertificate {
  std::size_t factor = 0;
  int level = 1;
  RatPolynomial equation;
  std::vector<Integer> solutions;

  friend bool operator==(const FiberCertificate&, const FiberCertificate&) = default;
};

struct CensusWitness {
  Integer m;
  Integer value;  // f(m), possibly negative
  PrimalityStatus status = PrimalityStatus::composite;
  std::vector<std::size_t> unit_factors;  // factors with |value| == 1 at m

  friend bool operator==(const CensusWitness&, const CensusWitness&) = default;
};

/// Prime values of a reducible f. If |f(m)| is prime then every factor but
/// one is a unit at m, so the union of the unit fibers contains every witness.
struct Census {
  int degree = 0;
  std::size_t P = 0;      // #{m : |f(m)| prime}
  std::size_t Pplus = 0;  // #{m : f(m) > 0 prime}
  std::vector<CensusWitness> witnesses;  // ascending m
  std::vector<Integer> candidates;       // union of all unit fibers, ascending
  std::vector<FiberCertificate> fibers;

  friend bool operator==(const Census&, const Census&) = default;
};

// Requires >= 2 factors, each integer-valued; throws InvalidInput otherwise.
Census prime_census(const FactoredPolynomial& f);

struct LevelWitness {
  Integer m;
  Integer value;

  friend bool operator==(const LevelWitness&, const LevelWitness&) = default;
};

/// E_S(f): distinct integers m with f(m) in S.
struct LevelCensus {
  std::size_t count = 0;
  std::vector<LevelWitness> witnesses;  // ascending m
};

// Throws InvalidInput for constant f or empty S.
LevelCensus level_census(const RatPolynomial& f, const std::vector<Integer>& S);

}  // namespace primepoly

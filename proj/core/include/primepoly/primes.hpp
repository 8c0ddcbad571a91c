#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primepoly/numeric.hpp"

namespace primepoly {

enum class PrimalityStatus { prime, composite, probable_prime };
enum class PrimalityMethod { trial_division, miller_rabin_64, strong_probable_prime };

std::string to_string(PrimalityStatus s);
std::string to_string(PrimalityMethod m);

/// Verdict about |value|. `prime` only ever comes from a deterministic procedure;
/// values of magnitude >= 2^64 get at best `probable_prime`.
struct PrimalityVerdict {
  Integer value;
  PrimalityStatus status = PrimalityStatus::composite;
  PrimalityMethod method = PrimalityMethod::trial_division;

  bool passed() const { return status != PrimalityStatus::composite; }
  friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

// Deterministic for every 64-bit input (trial division below 2^16, Miller-Rabin
// with the first twelve prime bases otherwise).
bool is_prime_u64(std::uint64_t n);

// Tests |n|. |n| < 2 is composite.
PrimalityVerdict is_prime(const Integer& n);

/// First multiplier t (scan order 1, -1, 2, -2, ...) making 1 + t*M prime.
struct ProgressionHit {
  Integer M;
  Integer t;
  Integer value;  // 1 + t*M
  bool positive_required = false;
  PrimalityStatus status = PrimalityStatus::composite;

  friend bool operator==(const ProgressionHit&, const ProgressionHit&) = default;
};

// Position of t in the scan order 1, -1, 2, -2, ... (0-based) and its inverse.
Integer scan_multiplier(std::uint64_t index);

// Accepts 1 + t*M if |1 + t*M| is prime, or if it is a positive prime when
// positive_required is set. Throws BudgetExhausted when no |t| <= t_max works
// and InvalidInput for M == 0 or t_max == 0. The result is the scan-order
// minimum regardless of how many workers are used.
ProgressionHit find_multiplier(const Integer& M, bool positive_required, std::uint64_t t_max);

// Whether 1 + t*M is accepted under the rule above.
bool is_progression_hit(const Integer& M, const Integer& t, bool positive_required);

// Ascending primes 2, 3, 5, ...; with signed_pairs: 3, -3, 5, -5, ...
std::vector<Integer> first_primes(std::size_t count, bool signed_pairs);

}  // namespace primepoly

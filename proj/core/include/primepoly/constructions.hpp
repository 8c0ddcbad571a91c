#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "primepoly/census.hpp"
#include "primepoly/primes.hpp"

namespace primepoly {

enum class ConstructionKind { deg2, deg3, deg4_nplus4, deg5_nplus3, n_plus_1, p_plus, n_plus_2 };
enum class ClaimKind { P, Pplus };

std::string to_string(ConstructionKind k);

/// The multiplier t of g(x) = 1 + t * prod(x - r_i) and the values it was
/// chosen to make prime.
struct MultiplierRecord {
  Integer t;
  std::vector<PrimalityVerdict> induced;

  friend bool operator==(const MultiplierRecord&, const MultiplierRecord&) = default;
};

/// A generated polynomial with the facts backing its prime count. `census` is
/// recomputed from scratch by `reverify`.
struct ConstructionCertificate {
  ConstructionKind kind;
  FactoredPolynomial f;
  std::vector<Integer> primes_used;  // n+1 and P+ families
  std::vector<Integer> b_values;     // n+2 search: points where h2(b) is prime
  std::optional<MultiplierRecord> multiplier;
  ClaimKind claim = ClaimKind::P;
  std::size_t claimed = 0;
  Census census;

  // census meets the claim
  bool meets_claim() const;
};

// Recomputes the census and checks it matches and meets the claim.
bool reverify(const ConstructionCertificate& cert);

enum class FixedExample { deg2, deg3, deg4_nplus4, deg5_nplus3 };

ConstructionCertificate fixed_example(FixedExample kind);

struct PairingCheck {
  Integer left;   // prod (1 - p_i)
  Integer right;  // prod (-1 - p_i)
  bool equal = false;
};

// Throws InvalidInput for repeated entries or entries equal to +-1.
PairingCheck check_pairing(std::span<const Integer> primes);

// n-1 distinct primes with prod(1 - p) = prod(-1 - p): for odd n the pairs
// +-3, +-5, ...; for even n the pairs +-7, +-11, ... followed by 2, -3, -5.
std::vector<Integer> pairing_primes(int n);

// f = x * (1 + t * prod(x - p_i)) with at least n+1 prime values. n >= 3.
ConstructionCertificate build_n_plus_1(int n, std::uint64_t t_max);

// f = x * (1 + t * prod(x - p_i)) over the first n-1 positive primes with
// exactly n positive prime values. n >= 2.
ConstructionCertificate build_p_plus(int n, std::uint64_t t_max);

/// Outcome of the conjecture-dependent n+2 search; absence is not an error.
struct NPlus2Search {
  std::optional<ConstructionCertificate> certificate;
  std::vector<Integer> b_values;  // chosen b with |h2(b)| prime
  Integer b_frontier;             // largest |b| examined
  std::uint64_t t_frontier = 0;   // largest |t| examined
};

// h = x^2 - 3x + 1, g = 1 + t * prod(x - b_i). n >= 3.
NPlus2Search search_n_plus_2(int n, std::uint64_t b_scan_max, std::uint64_t t_max);

}  // namespace primepoly

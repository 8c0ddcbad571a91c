#include "primepoly/primes.hpp"

#include <array>
#include <limits>

#include "primepoly/parallel.hpp"

namespace primepoly {

std::string to_string(PrimalityStatus s) {
  switch (s) {
    case PrimalityStatus::prime: return "prime";
    case PrimalityStatus::composite: return "composite";
    case PrimalityStatus::probable_prime: return "probable_prime";
  }
  return "?";
}

std::string to_string(PrimalityMethod m) {
  switch (m) {
    case PrimalityMethod::trial_division: return "trial_division";
    case PrimalityMethod::miller_rabin_64: return "miller_rabin_64";
    case PrimalityMethod::strong_probable_prime: return "strong_probable_prime";
  }
  return "?";
}

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1u << 16;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool trial_division(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

// Strong probable prime to base a; n odd, n > a.
bool strong_probable_prime(u64 n, u64 a) {
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool fits_u64(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

u64 to_u64(const Integer& z) {
  u64 r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, z.get_mpz_t());
  return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < kTrialLimit) return trial_division(n);
  if (n % 2 == 0) return false;
  // The first twelve primes as bases are deterministic below 3.3e24.
  static constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 a : kBases) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

PrimalityVerdict is_prime(const Integer& n) {
  PrimalityVerdict v;
  v.value = n;
  Integer mag = abs(n);
  if (fits_u64(mag)) {
    const u64 m = to_u64(mag);
    v.method = m < kTrialLimit ? PrimalityMethod::trial_division : PrimalityMethod::miller_rabin_64;
    v.status = is_prime_u64(m) ? PrimalityStatus::prime : PrimalityStatus::composite;
    return v;
  }
  // GMP runs Baillie-PSW followed by extra Miller-Rabin rounds.
  v.method = PrimalityMethod::strong_probable_prime;
  v.status = mpz_probab_prime_p(mag.get_mpz_t(), 30) ? PrimalityStatus::probable_prime : PrimalityStatus::composite;
  return v;
}

Integer scan_multiplier(std::uint64_t index) {
  Integer t = Integer(static_cast<unsigned long>(index / 2)) + 1;
  return (index % 2) ? Integer(-t) : t;
}

bool is_progression_hit(const Integer& M, const Integer& t, bool positive_required) {
  Integer value = 1 + t * M;
  if (positive_required && value <= 0) return false;
  return is_prime(value).passed();
}

ProgressionHit find_multiplier(const Integer& M, bool positive_required, std::uint64_t t_max) {
  if (M == 0) throw InvalidInput("find_multiplier: M must be nonzero");
  if (t_max == 0) throw InvalidInput("find_multiplier: t_max must be positive");
  if (t_max > std::numeric_limits<std::uint64_t>::max() / 2) throw InvalidInput("find_multiplier: t_max too large");
  auto hit = first_index(2 * t_max, [&](std::uint64_t i) {
    return is_progression_hit(M, scan_multiplier(i), positive_required);
  });
  if (!hit) {
    throw BudgetExhausted("no multiplier |t| <= " + std::to_string(t_max) + " makes 1 + t*(" + to_string(M) +
                          ") prime");
  }
  ProgressionHit out;
  out.M = M;
  out.t = scan_multiplier(*hit);
  out.value = 1 + out.t * M;
  out.positive_required = positive_required;
  out.status = is_prime(out.value).status;
  return out;
}

std::vector<Integer> first_primes(std::size_t count, bool signed_pairs) {
  std::vector<Integer> out;
  out.reserve(count);
  u64 p = signed_pairs ? 3 : 2;
  while (out.size() < count) {
    if (is_prime_u64(p)) {
      out.emplace_back(static_cast<unsigned long>(p));
      if (signed_pairs && out.size() < count) out.emplace_back(-static_cast<long>(p));
    }
    ++p;
  }
  return out;
}

}  // namespace primepoly

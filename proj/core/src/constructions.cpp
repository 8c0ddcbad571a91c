#include "primepoly/constructions.hpp"

#include <algorithm>
#include <set>

#include "primepoly/parallel.hpp"

namespace primepoly {

std::string to_string(ConstructionKind k) {
  switch (k) {
    case ConstructionKind::deg2: return "deg2";
    case ConstructionKind::deg3: return "deg3";
    case ConstructionKind::deg4_nplus4: return "deg4_nplus4";
    case ConstructionKind::deg5_nplus3: return "deg5_nplus3";
    case ConstructionKind::n_plus_1: return "nplus1";
    case ConstructionKind::p_plus: return "pplus";
    case ConstructionKind::n_plus_2: return "nplus2";
  }
  return "?";
}

bool ConstructionCertificate::meets_claim() const {
  return (claim == ClaimKind::P ? census.P : census.Pplus) >= claimed;
}

bool reverify(const ConstructionCertificate& cert) {
  return prime_census(cert.f) == cert.census && cert.meets_claim();
}

namespace {

const RatPolynomial& h2() {
  static const RatPolynomial h = make_poly({1, -3, 1});
  return h;
}

// 1 + t * prod (x - r)
RatPolynomial unit_shift(const Integer& t, std::span<const Integer> roots) {
  RatPolynomial prod = RatPolynomial::constant(1);
  for (const auto& r : roots) prod *= RatPolynomial::linear_factor(Rational(r));
  return prod * Rational(t) + Rational(1);
}

Integer product_at(const Integer& x, std::span<const Integer> roots) {
  Integer acc = 1;
  for (const auto& r : roots) acc *= x - r;
  return acc;
}

void require_claim(const ConstructionCertificate& cert) {
  if (!cert.meets_claim()) {
    throw PropertyViolation(to_string(cert.kind) + ": census found " + std::to_string(cert.census.P) + " (P) / " +
                            std::to_string(cert.census.Pplus) + " (P+) prime values, claimed " +
                            std::to_string(cert.claimed));
  }
}

}  // namespace

ConstructionCertificate fixed_example(FixedExample kind) {
  std::vector<RatPolynomial> factors;
  ConstructionKind ck{};
  std::size_t claimed = 0;
  switch (kind) {
    case FixedExample::deg2:
      factors = {make_poly({0, 1}), make_poly({-4, 1})};
      ck = ConstructionKind::deg2;
      claimed = 4;
      break;
    case FixedExample::deg3:
      factors = {h2(), make_poly({-5, 1})};
      ck = ConstructionKind::deg3;
      claimed = 5;
      break;
    case FixedExample::deg4_nplus4:
      // 1 + (x-4)(x-7)
      factors = {h2(), make_poly({29, -11, 1})};
      ck = ConstructionKind::deg4_nplus4;
      claimed = 8;
      break;
    case FixedExample::deg5_nplus3: {
      const std::vector<Integer> roots{4, 5, 7};
      factors = {h2(), unit_shift(1, roots)};
      ck = ConstructionKind::deg5_nplus3;
      claimed = 8;
      break;
    }
  }
  FactoredPolynomial f(std::move(factors));
  ConstructionCertificate cert{ck, f, {}, {}, std::nullopt, ClaimKind::P, claimed, prime_census(f)};
  require_claim(cert);
  return cert;
}

PairingCheck check_pairing(std::span<const Integer> primes) {
  std::set<Integer> seen;
  for (const auto& p : primes) {
    if (abs(p) == 1) throw InvalidInput("check_pairing: entries must differ from +-1");
    if (!seen.insert(p).second) throw InvalidInput("check_pairing: repeated entry " + to_string(p));
  }
  PairingCheck out;
  out.left = product_at(1, primes);
  out.right = product_at(-1, primes);
  out.equal = out.left == out.right;
  return out;
}

std::vector<Integer> pairing_primes(int n) {
  if (n < 3) throw InvalidInput("pairing_primes: need n >= 3");
  const std::size_t needed = static_cast<std::size_t>(n - 1);
  if (n % 2 == 1) return first_primes(needed, true);
  // pairs start at 7 so they avoid the tail 2, -3, -5; needed - 3 is even
  std::vector<Integer> out;
  for (unsigned long p = 7; out.size() < needed - 3; p += 2) {
    if (is_prime_u64(p)) {
      out.emplace_back(p);
      out.emplace_back(-static_cast<long>(p));
    }
  }
  out.insert(out.end(), {Integer(2), Integer(-3), Integer(-5)});
  return out;
}

ConstructionCertificate build_n_plus_1(int n, std::uint64_t t_max) {
  if (n < 3) throw InvalidInput("nplus1 construction needs n >= 3");
  auto primes = pairing_primes(n);
  auto pairing = check_pairing(primes);
  if (!pairing.equal) throw PropertyViolation("pairing equation fails for n = " + std::to_string(n));

  const auto hit = find_multiplier(pairing.left, false, t_max);
  const RatPolynomial g = unit_shift(hit.t, primes);
  FactoredPolynomial f({RatPolynomial::identity(), g});

  MultiplierRecord mult{hit.t, {}};
  // f(1) = g(1) and f(-1) = -g(-1) = -g(1)
  mult.induced.push_back(is_prime(hit.value));
  mult.induced.push_back(is_prime(-hit.value));

  ConstructionCertificate cert{ConstructionKind::n_plus_1, f,    primes, {}, std::move(mult), ClaimKind::P,
                               static_cast<std::size_t>(n + 1), prime_census(f)};
  require_claim(cert);
  return cert;
}

ConstructionCertificate build_p_plus(int n, std::uint64_t t_max) {
  if (n < 2) throw InvalidInput("pplus construction needs n >= 2");
  auto primes = first_primes(static_cast<std::size_t>(n - 1), false);
  const auto hit = find_multiplier(product_at(1, primes), true, t_max);
  const RatPolynomial g = unit_shift(hit.t, primes);
  FactoredPolynomial f({RatPolynomial::identity(), g});

  MultiplierRecord mult{hit.t, {is_prime(hit.value)}};
  ConstructionCertificate cert{ConstructionKind::p_plus, f,    primes, {}, std::move(mult), ClaimKind::Pplus,
                               static_cast<std::size_t>(n), prime_census(f)};
  require_claim(cert);
  if (cert.census.Pplus != static_cast<std::size_t>(n)) {
    throw PropertyViolation("pplus construction exceeds the degree bound: P+ = " +
                            std::to_string(cert.census.Pplus) + " > n = " + std::to_string(n));
  }
  return cert;
}

NPlus2Search search_n_plus_2(int n, std::uint64_t b_scan_max, std::uint64_t t_max) {
  if (n < 3) throw InvalidInput("nplus2 search needs n >= 3");
  if (t_max == 0) throw InvalidInput("nplus2 search needs t_max >= 1");
  NPlus2Search out;
  out.b_frontier = 0;
  const std::size_t needed = static_cast<std::size_t>(n - 2);

  // b ordered by |b|, positive first; h2 is +-1 on 0..3 so those are skipped
  for (std::uint64_t mag = 1; mag <= b_scan_max && out.b_values.size() < needed; ++mag) {
    out.b_frontier = Integer(static_cast<unsigned long>(mag));
    for (int s : {1, -1}) {
      Integer b = Integer(static_cast<unsigned long>(mag)) * s;
      if (b >= 0 && b <= 3) continue;
      if (out.b_values.size() < needed && is_prime(h2()(Rational(b)).get_num()).passed()) out.b_values.push_back(b);
    }
  }
  if (out.b_values.size() < needed) return out;

  std::vector<Integer> a;
  for (int i = 0; i < 4; ++i) a.push_back(product_at(i, out.b_values));
  auto hit = first_index(2 * t_max, [&](std::uint64_t idx) {
    const Integer t = scan_multiplier(idx);
    return std::all_of(a.begin(), a.end(), [&](const Integer& ai) { return is_prime(1 + t * ai).passed(); });
  });
  if (!hit) {
    out.t_frontier = t_max;
    return out;
  }
  const Integer t = scan_multiplier(*hit);
  out.t_frontier = Integer(abs(t)).get_ui();

  MultiplierRecord mult{t, {}};
  for (const auto& ai : a) mult.induced.push_back(is_prime(1 + t * ai));
  FactoredPolynomial f({unit_shift(t, out.b_values), h2()});
  ConstructionCertificate cert{ConstructionKind::n_plus_2, f,    {}, out.b_values, std::move(mult), ClaimKind::P,
                               static_cast<std::size_t>(n + 2), prime_census(f)};
  require_claim(cert);
  out.certificate = std::move(cert);
  return out;
}

}  // namespace primepoly

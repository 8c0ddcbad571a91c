#include "primepoly/bounds.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace primepoly {

// ---- The constant --------------------------------------------------------------------

RationalInterval constant_lhs(const Rational& t, unsigned bits) {
  if (t < 1 || t > 2) throw InvalidInput("constant_lhs: t must lie in [1, 2]");
  // log t >= 0 on [1, 2], so every factor is nonnegative
  RationalInterval log_t = log_enclosure(t, bits);
  RationalInterval inner{2 * log_t.lo + Rational(1, 2), 2 * log_t.hi + Rational(1, 2)};
  return mul_nonnegative({t, t}, inner);
}

RationalInterval constant_rhs(unsigned bits) {
  RationalInterval log2 = log_enclosure(2, bits);
  return {2 * log2.lo - Rational(1, 2), 2 * log2.hi - Rational(1, 2)};
}

ConstantSolution solve_constant(int digits, const BracketObserver& observer) {
  if (digits < 1 || digits > 50) throw InvalidInput("solve_constant: digits must be in 1..50");
  const unsigned bits = static_cast<unsigned>(digits * 3.33) + 96;
  const RationalInterval rhs = constant_rhs(bits);
  const Rational stop_width = std::min(Rational(1, pow(Integer(10), digits + 3)), Rational(1, pow(Integer(10), 14)));

  ConstantSolution out;
  out.digits = digits;
  Rational lo = 1, hi = 2;
  if (observer) observer(lo, hi);
  const auto certified = [&] {
    const Rational c_lo = 1 + 1 / hi, c_hi = 1 + 1 / lo;
    return decimal_floor(lo, digits) == decimal_floor(hi, digits) &&
           decimal_floor(c_lo, digits) == decimal_floor(c_hi, digits);
  };
  while (hi - lo >= stop_width || !certified()) {
    const Rational mid = (lo + hi) / 2;
    const RationalInterval lhs = constant_lhs(mid, bits);
    if (lhs.hi < rhs.lo) {
      lo = mid;
    } else if (lhs.lo > rhs.hi) {
      hi = mid;
    } else {
      break;  // working precision exhausted
    }
    ++out.steps;
    if (observer) observer(lo, hi);
  }
  if (!certified()) throw PropertyViolation("solve_constant: could not certify the requested digits");

  out.t_bracket = {lo, hi};
  out.t_star = decimal_floor(lo, digits);
  out.c = decimal_floor(1 + 1 / hi, digits);
  const RationalInterval at_mid = constant_lhs((lo + hi) / 2, bits);
  out.residual_bound = std::max<Rational>(abs(at_mid.hi - rhs.lo), abs(at_mid.lo - rhs.hi));
  out.residual = scientific_upper(out.residual_bound);
  return out;
}

// ---- Set products ----------------------------------------------------------------------

namespace {

Integer pairwise_product(const std::vector<Integer>& v) {
  Integer acc = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) acc *= abs(v[i] - v[j]);
  }
  return acc;
}

Rational four_ninths_pow(std::size_t k) { return pow(Rational(4, 9), k); }

void require_balanced(const SetPairData& d) {
  if (d.a.size() != d.b.size()) throw InvalidInput("balanced bound needs |a| == |b|");
}

}  // namespace

Integer superfactorial(unsigned m) {
  Integer acc = 1;
  for (unsigned j = 1; j <= m; ++j) acc *= factorial(j);
  return acc;
}

SetPairData set_pair_data(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  if (a.empty() || b.empty()) throw InvalidInput("point sets must be nonempty");
  std::vector<Integer> merged = a;
  merged.insert(merged.end(), b.begin(), b.end());
  if (std::set<Integer>(merged.begin(), merged.end()).size() != merged.size()) {
    throw InvalidInput("point sets must consist of distinct integers");
  }
  SetPairData d{a, b, pairwise_product(a), pairwise_product(b), 1, pairwise_product(merged)};
  for (const auto& x : a) {
    for (const auto& y : b) d.D *= abs(x - y);
  }
  return d;
}

LemmaCheck check_distance_product_bound(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  LemmaCheck c;
  c.data = set_pair_data(a, b);
  require_balanced(c.data);
  c.lhs = c.data.D;
  c.rhs = Rational(c.data.U * c.data.V) * four_ninths_pow(a.size());
  c.holds = c.lhs >= c.rhs;
  c.identity_holds = c.data.W == c.data.U * c.data.V * c.data.D;
  return c;
}

LemmaCheck check_superfactorial_bound(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  LemmaCheck c;
  c.data = set_pair_data(a, b);
  require_balanced(c.data);
  const auto k = static_cast<unsigned>(a.size());
  c.exponent = 2;
  c.lhs = c.data.D * c.data.D;
  c.rhs = four_ninths_pow(k) * Rational(superfactorial(2 * k - 1));
  c.holds = c.lhs >= c.rhs;
  c.identity_holds = c.data.W == c.data.U * c.data.V * c.data.D;
  return c;
}

LemmaCheck check_unbalanced_superfactorial_bound(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  LemmaCheck c;
  c.data = set_pair_data(a, b);
  const auto k = static_cast<unsigned>(a.size()), s = static_cast<unsigned>(b.size());
  if (k > s) throw InvalidInput("unbalanced bound needs |a| <= |b|");
  c.exponent = 2 * k;
  c.lhs = pow(c.data.D, 2UL * k);
  c.rhs = pow(Rational(2, 3), 2UL * k * s) * Rational(pow(superfactorial(2 * k - 1), s));
  c.holds = c.lhs >= c.rhs;
  c.identity_holds = c.data.W == c.data.U * c.data.V * c.data.D;
  return c;
}

namespace {

std::vector<Integer> distinct_points(std::mt19937_64& rng, std::size_t count, int coord) {
  std::uniform_int_distribution<int> dist(-coord, coord);
  std::set<int> seen;
  std::vector<Integer> out;
  while (out.size() < count) {
    int x = dist(rng);
    if (seen.insert(x).second) out.emplace_back(x);
  }
  return out;
}

std::string describe(const char* what, const LemmaCheck& c) {
  std::ostringstream os;
  os << what << " a={";
  for (std::size_t i = 0; i < c.data.a.size(); ++i) os << (i ? "," : "") << c.data.a[i];
  os << "} b={";
  for (std::size_t i = 0; i < c.data.b.size(); ++i) os << (i ? "," : "") << c.data.b[i];
  os << "}";
  return os.str();
}

}  // namespace

LemmaSuiteReport run_lemma_suite(std::uint64_t trials, std::uint64_t seed, int kmax, int coord) {
  if (kmax < 1) throw InvalidInput("lemma suite: kmax must be positive");
  if (2 * kmax > 2 * coord + 1) throw InvalidInput("lemma suite: coordinate range too small for kmax");
  LemmaSuiteReport r;
  r.trials = trials;
  r.seed = seed;
  r.kmax = kmax;
  r.coord = coord;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(1, kmax);
  for (std::uint64_t i = 0; i < trials; ++i) {
    {
      const auto k = static_cast<std::size_t>(size(rng));
      auto pts = distinct_points(rng, 2 * k, coord);
      std::vector<Integer> a(pts.begin(), pts.begin() + k), b(pts.begin() + k, pts.end());
      auto cd = check_distance_product_bound(a, b);
      if (cd.holds) ++r.distance_product_pass; else r.counterexamples.push_back(describe("distance_product", cd));
      if (cd.identity_holds) ++r.identity_pass; else r.counterexamples.push_back(describe("W=UVD", cd));
    }
    {
      const auto k = static_cast<std::size_t>(size(rng));
      auto pts = distinct_points(rng, 2 * k, coord);
      std::vector<Integer> a(pts.begin(), pts.begin() + k), b(pts.begin() + k, pts.end());
      auto cs = check_superfactorial_bound(a, b);
      if (cs.holds) ++r.superfactorial_pass; else r.counterexamples.push_back(describe("superfactorial", cs));
    }
    {
      const auto k = static_cast<std::size_t>(size(rng));
      std::uniform_int_distribution<int> ssize(static_cast<int>(k), kmax);
      const auto s = static_cast<std::size_t>(ssize(rng));
      auto pts = distinct_points(rng, k + s, coord);
      std::vector<Integer> a(pts.begin(), pts.begin() + k), b(pts.begin() + k, pts.end());
      auto cu = check_unbalanced_superfactorial_bound(a, b);
      if (cu.holds) ++r.unbalanced_pass; else r.counterexamples.push_back(describe("unbalanced_superfactorial", cu));
    }
  }
  return r;
}

// ---- Measure and level-set bounds --------------------------------------------------------

PolyaCheck check_polya(const RatPolynomial& f, const Rational& K, const Rational& tol) {
  if (f.is_constant()) throw InvalidInput("check_polya: polynomial must be nonconstant");
  PolyaCheck out;
  out.bracket = sublevel_measure(f, K, tol);
  const auto n = static_cast<unsigned long>(f.degree());
  const Rational ratio = K / abs(f.leading());
  const RationalInterval root = root_enclosure(ratio, n, 128);
  out.bound = {4 * root.lo, 4 * root.hi};
  // upper <= 4 ratio^{1/n}  <=>  (upper/4)^n <= ratio
  out.holds = pow(Rational(out.bracket.upper / 4), n) <= ratio;
  return out;
}

ESUpperCheck check_ES_upper(const RatPolynomial& f, const std::vector<Integer>& S) {
  if (f.is_constant()) throw InvalidInput("check_ES_upper: polynomial must be nonconstant");
  if (!is_integer_valued(f)) throw InvalidInput("check_ES_upper: polynomial is not integer-valued");
  ESUpperCheck out;
  out.census = level_census(f, S);
  out.E_S = out.census.count;
  out.K = 0;
  for (const auto& s : S) out.K = std::max<Integer>(out.K, abs(s));
  const auto n = static_cast<unsigned long>(f.degree());
  const Integer scale = out.K * factorial(n);
  const RationalInterval root = root_enclosure(Rational(scale), n, 128);
  out.bound = {Rational(n) + 4 * root.lo, Rational(n) + 4 * root.hi};
  if (out.E_S <= n) {
    out.holds = true;
  } else {
    // E_S - n <= 4 (K n!)^{1/n}  <=>  ((E_S - n)/4)^n <= K n!
    out.holds = pow(Rational(static_cast<long>(out.E_S - n), 4), n) <= Rational(scale);
  }
  return out;
}

ESLowerFamily es_lower_family(int n, const Integer& a, const Integer& b) {
  if (n < 2 || n % 2 != 0) throw InvalidInput("es_lower_family: n must be even and >= 2");
  if (a == 0) throw InvalidInput("es_lower_family: a must be nonzero");
  ESLowerFamily out;
  out.binomial.coeffs.assign(static_cast<std::size_t>(n) + 1, Rational(0));
  out.binomial.coeffs.front() = b;
  out.binomial.coeffs.back() = a;
  out.f = from_binomial(out.binomial);
  out.S = {b, a + b};
  out.census = level_census(out.f, out.S);
  out.E_S = out.census.count;
  if (out.E_S < static_cast<std::size_t>(n) + 2) {
    throw PropertyViolation("es_lower_family: E_S = " + std::to_string(out.E_S) + " < n + 2");
  }
  return out;
}

}  // namespace primepoly

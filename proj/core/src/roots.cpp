#include "primepoly/roots.hpp"

#include <algorithm>

namespace primepoly {

namespace {

int sign_of(const RatPolynomial& p, const Rational& x) { return sign(p(x)); }

std::vector<RatPolynomial> chain_of(const RatPolynomial& square_free) {
  std::vector<RatPolynomial> chain;
  chain.push_back(primitive_part(square_free));
  if (square_free.degree() < 1) return chain;
  chain.push_back(primitive_part(derivative(chain[0])));
  while (chain.back().degree() > 0) {
    RatPolynomial r = divmod(chain[chain.size() - 2], chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

std::size_t count_variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// |leading coefficient| of the primitive integer form; every rational root has
// a denominator dividing it.
Integer denominator_bound(const RatPolynomial& primitive) { return abs(primitive.leading().get_num()); }

// Bisection step on a non-exact root; may collapse to an exact root.
void bisect_once(IsolatedRoot& r) {
  Rational mid = (r.lo + r.hi) / 2;
  const int sm = sign_of(r.defining, mid);
  if (sm == 0) {
    r.lo = r.hi = mid;
    return;
  }
  if (sm == sign_of(r.defining, r.lo)) {
    r.lo = mid;
  } else {
    r.hi = mid;
  }
}

// Turns an isolating interval into an exact root when the root is rational.
void detect_rational_root(IsolatedRoot& r) {
  const Integer den = denominator_bound(r.defining);
  const Rational step(1, den);
  while (!r.is_exact() && r.width() >= step) bisect_once(r);
  if (r.is_exact()) return;
  // at most one multiple of 1/den lies strictly inside (lo, hi)
  Rational candidate(floor(r.lo * den) + 1, den);
  candidate.canonicalize();
  if (candidate < r.hi && sign_of(r.defining, candidate) == 0) r.lo = r.hi = candidate;
}

struct Node {
  Rational lo, hi;
  std::size_t vlo, vhi;
  bool hi_root;
};

}  // namespace

RatPolynomial square_free_part(const RatPolynomial& p) {
  if (p.degree() < 1) return p;
  RatPolynomial g = gcd(p, derivative(p));
  return make_monic(divmod(p, g).quotient);
}

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("sturm_sequence: zero polynomial");
  return chain_of(square_free_part(p));
}

std::size_t sign_variations(const std::vector<RatPolynomial>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(sign_of(q, x));
  return count_variations(signs);
}

std::size_t sign_variations_at_infinity(const std::vector<RatPolynomial>& chain, bool positive) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = sign(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_variations(signs);
}

Rational root_bound(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("root_bound: zero polynomial");
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p.coeffs()[i] / p.leading()));
  Rational cauchy = m + 1;
  Rational b = 1;
  while (b <= cauchy) b *= 2;
  return b;
}

std::size_t sturm_count(const RatPolynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw InvalidInput("sturm_count: zero polynomial");
  if (!(lo < hi)) throw InvalidInput("sturm_count: need lo < hi");
  auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

std::size_t count_real_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("count_real_roots: zero polynomial");
  auto chain = sturm_sequence(p);
  return sign_variations_at_infinity(chain, false) - sign_variations_at_infinity(chain, true);
}

std::vector<IsolatedRoot> isolate_roots(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("isolate_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  const RatPolynomial sqf = primitive_part(square_free_part(p));
  if (sqf.degree() < 1) return out;
  const auto chain = chain_of(sqf);
  const Rational bound = root_bound(sqf);

  // Each node stands for the open interval (lo, hi); roots at endpoints have
  // already been emitted. V is right-continuous, so V(a) - V(b) counts (a, b].
  std::vector<Node> stack;
  stack.push_back({-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound), false});
  while (!stack.empty()) {
    Node n = std::move(stack.back());
    stack.pop_back();
    const std::size_t count = n.vlo - n.vhi - (n.hi_root ? 1 : 0);
    if (count == 0) continue;
    if (count == 1 && sign_of(sqf, n.lo) != 0 && !n.hi_root) {
      IsolatedRoot r{sqf, n.lo, n.hi};
      detect_rational_root(r);
      out.push_back(std::move(r));
      continue;
    }
    Rational mid = (n.lo + n.hi) / 2;
    const std::size_t vm = sign_variations(chain, mid);
    const bool mid_root = sign_of(sqf, mid) == 0;
    if (mid_root) out.push_back({sqf, mid, mid});
    // push right first so the left half is processed first
    stack.push_back({mid, n.hi, vm, n.vhi, n.hi_root});
    stack.push_back({n.lo, mid, n.vlo, vm, mid_root});
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lo < b.lo; });
  return out;
}

IsolatedRoot refine(IsolatedRoot root, const Rational& max_width) {
  while (!root.is_exact() && root.width() > max_width) bisect_once(root);
  return root;
}

std::vector<Integer> integer_solutions(const RatPolynomial& p, const Rational& v) {
  if (p.is_constant()) throw InvalidInput("integer_solutions: polynomial must be nonconstant");
  const RatPolynomial q = p - v;
  std::vector<Integer> out;
  for (auto r : isolate_roots(q)) {
    r = refine(std::move(r), Rational(1, 2));
    for (Integer m = ceil(r.lo); m <= floor(r.hi); ++m) {
      if (q(Rational(m)) == 0) out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int sign_at(const RatPolynomial& q, const IsolatedRoot& root) {
  if (q.is_zero()) return 0;
  if (root.is_exact()) return sign_of(q, root.lo);
  if (q.is_constant()) return sign(q.leading());
  const RatPolynomial common = gcd(q, root.defining);
  if (common.degree() >= 1 && sturm_count(common, root.lo, root.hi) > 0) return 0;
  // q has no root in common with the isolated root, so shrinking the interval
  // eventually leaves q root-free on it.
  const auto chain = sturm_sequence(q);
  IsolatedRoot r = root;
  while (true) {
    if (r.is_exact()) return sign_of(q, r.lo);
    // roots of q in the open interval (lo, hi)
    const std::size_t open_count =
        sign_variations(chain, r.lo) - sign_variations(chain, r.hi) - (sign_of(q, r.hi) == 0 ? 1 : 0);
    if (open_count == 0) return sign_of(q, (r.lo + r.hi) / 2);
    bisect_once(r);
  }
}

MeasureBracket sublevel_measure(const RatPolynomial& p, const Rational& K, const Rational& tol) {
  if (p.is_constant()) throw InvalidInput("sublevel_measure: polynomial must be nonconstant");
  if (K <= 0) throw InvalidInput("sublevel_measure: K must be positive");
  if (tol <= 0) throw InvalidInput("sublevel_measure: tolerance must be positive");

  // Boundary points are the roots of p^2 - K^2; between consecutive ones the
  // membership of {|p| <= K} is constant. |p| -> infinity outside the extremes.
  const RatPolynomial boundary = p * p - K * K;
  auto roots = isolate_roots(boundary);
  std::vector<std::size_t> inside;  // segment i spans roots[i]..roots[i+1]
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    Rational probe = (roots[i].hi + roots[i + 1].lo) / 2;
    if (abs(p(probe)) < K) inside.push_back(i);
  }
  MeasureBracket out{0, 0, tol};
  if (inside.empty()) return out;
  const Rational target = tol / Rational(static_cast<long>(2 * inside.size()));
  for (auto& r : roots) r = refine(std::move(r), target);
  for (std::size_t i : inside) {
    out.lower += roots[i + 1].lo - roots[i].hi;
    out.upper += roots[i + 1].hi - roots[i].lo;
  }
  return out;
}

}  // namespace primepoly

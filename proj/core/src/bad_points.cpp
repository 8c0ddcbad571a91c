#include "primepoly/bad_points.hpp"

#include <array>
#include <random>

#include "primepoly/sampling.hpp"

namespace primepoly {

std::string to_string(UnitType t) {
  switch (t) {
    case UnitType::g_plus: return "g+";
    case UnitType::g_minus: return "g-";
    case UnitType::h_plus: return "h+";
    case UnitType::h_minus: return "h-";
  }
  return "?";
}

namespace {

bool is_g(UnitType t) { return t == UnitType::g_plus || t == UnitType::g_minus; }

std::size_t derivative_root_count(const RatPolynomial& p) {
  RatPolynomial d = derivative(p);
  return d.is_constant() ? 0 : count_real_roots(d);
}

}  // namespace

std::string BlockReport::type_sequence() const {
  std::string s = "[";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ' ';
    s += to_string(points[i].type);
  }
  return s + "]";
}

std::vector<BadPoint> bad_points(const RatPolynomial& g, const RatPolynomial& h) {
  if (g.is_constant() || h.is_constant()) throw InvalidInput("bad_points: both factors must be nonconstant");
  const std::array<std::pair<RatPolynomial, UnitType>, 4> units{{
      {g - 1, UnitType::g_plus},
      {g + 1, UnitType::g_minus},
      {h - 1, UnitType::h_plus},
      {h + 1, UnitType::h_minus},
  }};
  RatPolynomial all = RatPolynomial::constant(1);
  for (const auto& [u, type] : units) all *= u;
  const RatPolynomial excess = g * h - 1;

  std::vector<BadPoint> out;
  for (auto& root : isolate_roots(all)) {
    if (sign_at(excess, root) != 1) continue;
    for (const auto& [u, type] : units) {
      if (sign_at(u, root) == 0) {
        out.push_back({std::move(root), type});
        break;
      }
    }
  }
  return out;
}

BlockReport verify_bad_point_bound(const RatPolynomial& g, const RatPolynomial& h) {
  BlockReport r;
  r.g = g;
  r.h = h;
  r.points = bad_points(g, h);
  r.degree = g.degree() + h.degree();
  r.k = r.points.size();
  for (std::size_t i = 0; i < r.k; ++i) {
    if (i > 0 && r.points[i].type == r.points[i - 1].type) {
      r.blocks.back().last = i;
      ++r.equal_pairs;
      ++(is_g(r.points[i].type) ? r.equal_pairs_g : r.equal_pairs_h);
    } else {
      r.blocks.push_back({r.points[i].type, i, i, false});
    }
  }
  r.l = r.blocks.size();
  for (auto& b : r.blocks) {
    b.extremal = b.first == 0 || b.last + 1 == r.k;
    if (!b.extremal) {
      ++r.central_blocks;
      ++(is_g(b.type) ? r.central_blocks_g : r.central_blocks_h);
    }
  }
  r.g_prime_roots = derivative_root_count(g);
  r.h_prime_roots = derivative_root_count(h);
  return r;
}

RandomPairSuite run_bad_point_suite(std::uint64_t trials, std::uint64_t seed, int max_degree, int coeff_bound,
                                    bool keep_reports) {
  RandomPairSuite suite;
  suite.trials = trials;
  suite.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    RatPolynomial g = random_integer_poly(rng, 1, max_degree, coeff_bound);
    RatPolynomial h = random_integer_poly(rng, 1, max_degree, coeff_bound);
    BlockReport r = verify_bad_point_bound(g, h);
    suite.max_k = std::max(suite.max_k, r.k);
    if (!r.holds()) suite.failures.push_back(r);
    if (keep_reports) suite.reports.push_back(std::move(r));
  }
  return suite;
}

bool ComplexCounterexample::verified() const {
  if (!g_minus_one_factors || points.size() != 6) return false;
  for (const auto& p : points) {
    if (!p.f_exceeds_one) return false;
  }
  return static_cast<int>(points.size()) > degree;
}

ComplexCounterexample complex_counterexample() {
  ComplexCounterexample out;
  out.g = RatPolynomial({1, -1, 0, Rational(1, 3)});
  out.h = RatPolynomial::constant(1) + Rational(2, 9) * compose_affine(make_poly({0, 0, 1}), 1, 1, -2);
  const RatPolynomial f = out.g * out.h;
  out.degree = f.degree();
  out.g_minus_one_factors = out.g - 1 == make_poly({0, 1}) * Rational(1, 3) * make_poly({-3, 0, 1});

  auto add_rational = [&](const Rational& x, const char* type, const RatPolynomial& unit) {
    const Rational fv = evaluate(f, x);
    out.points.push_back({to_string(x), type, to_string(evaluate(unit, x)), to_string(fv), fv > 1});
  };
  auto add_quadratic = [&](const QuadExtElement& x, const char* type, const RatPolynomial& unit) {
    const QuadExtElement fv = evaluate(f, x);
    const bool exceeds = (fv - QuadExtElement(1, 0, x.d())).sign() > 0;
    out.points.push_back({to_string(x), type, to_string(evaluate(unit, x)), to_string(fv), exceeds});
  };
  auto add_gaussian = [&](const GaussianRational& x, const char* type, const RatPolynomial& unit) {
    const GaussianRational fv = evaluate(f, x);
    out.points.push_back({to_string(x), type, to_string(evaluate(unit, x)), to_string(fv), fv.is_real() && fv.re > 1});
  };

  add_rational(0, "g+", out.g);
  add_quadratic(QuadExtElement(0, 1, 3), "g+", out.g);
  add_quadratic(QuadExtElement(0, -1, 3), "g+", out.g);
  add_rational(2, "h+", out.h);
  add_gaussian({2, 3}, "h-", out.h);
  add_gaussian({2, -3}, "h-", out.h);

  out.real_bad_points = bad_points(out.g, out.h).size();
  return out;
}

}  // namespace primepoly

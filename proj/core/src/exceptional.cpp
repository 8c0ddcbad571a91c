#include "primepoly/exceptional.hpp"

#include "primepoly/parallel.hpp"

namespace primepoly {

const std::vector<ListEntry>& dorwart_ore_list() {
  static const std::vector<ListEntry> list = [] {
    const std::vector<std::pair<RatPolynomial, std::size_t>> rows{
        {make_poly({1, 3, -4, 1}), 4},  // x(x-1)(x-3) + 1
        {make_poly({1, -3, 1}), 4},     // (x-1)(x-2) - 1
        {make_poly({1, -4, 2}), 3},     // 2x(x-2) + 1
        {make_poly({-1, 2}), 2},        // 2x - 1
        {make_poly({-1, 1}), 2},        // x - 1
    };
    std::vector<ListEntry> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& [p, expected] = rows[i];
      ListEntry e{static_cast<int>(i + 1), p, p.degree(), expected, unit_fibers(p)};
      if (e.fibers.E() != expected) {
        throw PropertyViolation("list entry h" + std::to_string(i + 1) + " has E = " + std::to_string(e.fibers.E()) +
                                ", expected " + std::to_string(expected));
      }
      out.push_back(std::move(e));
    }
    return out;
  }();
  return list;
}

std::optional<Equivalence> equivalent_to_list(const RatPolynomial& f) {
  const int n = f.degree();
  if (n < 1 || n > 3) throw InvalidInput("equivalent_to_list: degree must be 1, 2 or 3");
  const Rational fn = f.leading(), fn1 = f.coeff(n - 1);
  for (const auto& entry : dorwart_ore_list()) {
    if (entry.degree != n) continue;
    const Rational cn = entry.polynomial.leading(), cn1 = entry.polynomial.coeff(n - 1);
    for (int sigma : {1, -1}) {
      for (int tau : {1, -1}) {
        const int tau_n1 = (n - 1) % 2 ? tau : 1;
        if (sigma * tau_n1 * tau * cn != fn) continue;
        // x^{n-1}: sigma * tau^{n-1} * (n * cn * a + cn1)
        const Rational a = (fn1 / Rational(sigma * tau_n1) - cn1) / (cn * n);
        if (!is_integral(a)) continue;
        if (compose_affine(entry.polynomial, sigma, tau, a.get_num()) == f) {
          return Equivalence{entry.index, sigma, tau, a.get_num()};
        }
      }
    }
  }
  return std::nullopt;
}

namespace {

struct Partial {
  std::uint64_t candidates = 0;
  std::uint64_t list_equivalent = 0;
  std::vector<ExceptionalHit> hits;
  std::vector<ExceptionalHit> mismatches;
};

}  // namespace

ExceptionalReport search_exceptional(int degree, int coeff_bound) {
  if (degree < 1 || degree > 4) throw InvalidInput("search_exceptional: degree must be in 1..4");
  if (coeff_bound < 1) throw InvalidInput("search_exceptional: coefficient bound must be positive");
  dorwart_ore_list();  // initialize before the workers start

  std::vector<long> leads;
  for (long c = -coeff_bound; c <= coeff_bound; ++c) {
    if (c != 0) leads.push_back(c);
  }
  const long width = 2L * coeff_bound + 1;
  std::uint64_t per_lead = 1;
  for (int i = 0; i < degree; ++i) per_lead *= static_cast<std::uint64_t>(width);

  std::vector<Partial> parts(leads.size());
  parallel_for(leads.size(), [&](std::uint64_t li) {
    Partial& part = parts[li];
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = leads[li];
    for (std::uint64_t code = 0; code < per_lead; ++code) {
      // c_{degree-1} is the most significant digit
      std::uint64_t rest = code;
      for (int i = 0; i < degree; ++i) {
        coeffs[i] = static_cast<long>(rest % width) - coeff_bound;
        rest /= width;
      }
      RatPolynomial f(coeffs);
      const std::size_t E = unit_fibers(f).E();
      std::optional<Equivalence> eq;
      if (degree <= 3) eq = equivalent_to_list(f);
      ++part.candidates;
      if (eq) ++part.list_equivalent;
      const bool exceptional = E > static_cast<std::size_t>(degree);
      if (exceptional) part.hits.push_back({f, E, eq});
      if (exceptional != eq.has_value()) part.mismatches.push_back({std::move(f), E, std::move(eq)});
    }
  });

  ExceptionalReport report;
  report.degree = degree;
  report.coeff_bound = coeff_bound;
  for (auto& part : parts) {
    report.candidates += part.candidates;
    report.list_equivalent += part.list_equivalent;
    for (auto& h : part.hits) report.hits.push_back(std::move(h));
    for (auto& m : part.mismatches) report.mismatches.push_back(std::move(m));
  }
  return report;
}

}  // namespace primepoly

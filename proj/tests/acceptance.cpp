// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// gating criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "primepoly/bad_points.hpp"
#include "primepoly/bounds.hpp"
#include "primepoly/census.hpp"
#include "primepoly/constructions.hpp"
#include "primepoly/exceptional.hpp"
#include "primepoly/sampling.hpp"
#include "report.hpp"

using namespace primepoly;
using primepoly::cli::Json;

namespace {

constexpr std::uint64_t kSeed = 20240607;

// wall-clock limits in seconds
constexpr double kFixedExampleLimit = 1.0;
constexpr double kConstantLimit = 0.1;
constexpr double kListLimit = 0.1;
constexpr double kExceptionalLimit = 300.0;
constexpr double kNPlus1Limit = 60.0;
constexpr double kLemmaLimit = 30.0;
constexpr double kBadPointLimit = 300.0;
constexpr double kCounterexampleLimit = 0.1;
constexpr double kPolyaLimit = 120.0;
constexpr double kESLimit = 60.0;
constexpr double kOracleLimit = 120.0;

const Rational kResidualTolerance("1/1000000000000");
const Rational kPolyaTolerance(1, 1000);
constexpr std::uint64_t kTMax = 1000000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Json cli_json(std::vector<std::string> args, int& code) {
  args.push_back("--json");
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return out.str().empty() ? Json() : Json::parse(out.str());
}

std::string n(std::size_t v) { return std::to_string(v); }

// ---- criteria -------------------------------------------------------------------------

Outcome fixed_examples() {
  Outcome o;
  const std::vector<std::pair<std::string, int>> want{{"deg4", 8}, {"deg5", 8}, {"deg2", 4}, {"deg3", 5}};
  for (const auto& [kind, P] : want) {
    const auto start = Clock::now();
    int code = 0;
    const Json j = cli_json({"construct", kind}, code);
    const double t = seconds_since(start);
    o.require(code == 0, kind + " exit code");
    const int got = j["result"]["census"]["P"].get<int>();
    o.require(got == P, kind + " P=" + std::to_string(got));
    o.require(j["result"]["reverified"].get<bool>(), kind + " re-verification");
    o.require(t < kFixedExampleLimit, kind + " time");
    o.note(kind + " P=" + std::to_string(got));
  }
  return o;
}

Outcome constant() {
  Outcome o;
  const auto start = Clock::now();
  const ConstantSolution s = solve_constant(10);
  const double t = seconds_since(start);
  o.require(s.t_star == "1.1463411865", "t=" + s.t_star);
  o.require(s.c == "1.8723406362", "c=" + s.c);
  o.require(s.residual_bound <= kResidualTolerance, "residual " + s.residual);
  o.require(t < kConstantLimit, "time");
  o.note("t=" + s.t_star + " c=" + s.c + " residual<=" + s.residual);
  return o;
}

Outcome list_fibers() {
  Outcome o;
  const auto start = Clock::now();
  const std::vector<std::size_t> want{4, 4, 3, 2, 2};
  std::string got;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::size_t E = unit_fibers(dorwart_ore_list()[i].polynomial).E();
    o.require(E == want[i], "h" + n(i + 1) + " E=" + n(E));
    got += (i ? "," : "") + n(E);
  }
  o.require(seconds_since(start) < kListLimit, "time");
  o.note("E=" + got);
  return o;
}

Outcome exceptional_search() {
  Outcome o;
  const auto start = Clock::now();
  std::string summary;
  for (int degree = 1; degree <= 3; ++degree) {
    const ExceptionalReport r = search_exceptional(degree, 10);
    o.require(r.consistent(), "degree " + std::to_string(degree) + " mismatches");
    o.require(r.list_equivalent == r.hits.size(), "degree " + std::to_string(degree) + " hit/list counts");
    summary += "d" + std::to_string(degree) + ":" + n(r.hits.size()) + "/" + std::to_string(r.candidates) + " ";
  }
  const ExceptionalReport d4 = search_exceptional(4, 4);
  o.require(d4.hits.empty(), "degree-4 hits");
  summary += "d4:" + n(d4.hits.size()) + "/" + std::to_string(d4.candidates);
  const double t = seconds_since(start);
  o.require(t < kExceptionalLimit, "time");
  o.note(summary);
  return o;
}

Outcome constructions() {
  Outcome o;
  const auto start = Clock::now();
  for (int N = 3; N <= 12; ++N) {
    int code = 0;
    const Json j = cli_json({"construct", "nplus1", "--n", std::to_string(N), "--tmax", std::to_string(kTMax)}, code);
    o.require(code == 0, "nplus1 n=" + std::to_string(N) + " exit code");
    if (code != 0) continue;
    o.require(j["result"]["census"]["P"].get<int>() >= N + 1, "nplus1 n=" + std::to_string(N));
    o.require(j["result"]["reverified"].get<bool>(), "nplus1 n=" + std::to_string(N) + " re-verification");
  }
  o.require(seconds_since(start) < kNPlus1Limit, "nplus1 time");
  for (int N = 2; N <= 12; ++N) {
    int code = 0;
    const Json j = cli_json({"construct", "pplus", "--n", std::to_string(N), "--tmax", std::to_string(kTMax)}, code);
    o.require(code == 0, "pplus n=" + std::to_string(N) + " exit code");
    if (code != 0) continue;
    o.require(j["result"]["census"]["Pplus"].get<int>() == N, "pplus n=" + std::to_string(N));
  }
  o.note("nplus1 n=3..12 P>=n+1, pplus n=2..12 P+=n");
  return o;
}

Outcome census_sweep() {
  Outcome o;
  std::mt19937_64 rng(kSeed);
  std::size_t violations = 0, big = 0, max_excess = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const FactoredPolynomial f({random_integer_poly(rng, 1, 3, 9), random_integer_poly(rng, 1, 3, 9)});
    const Census c = prime_census(f);
    const auto deg = static_cast<std::size_t>(f.degree());
    bool ok = c.P <= deg + 4 && c.Pplus <= deg;
    if (deg >= 6) {
      ++big;
      ok = ok && c.P <= deg + 2;
    }
    if (c.P > deg) max_excess = std::max(max_excess, c.P - deg);
    violations += !ok;
  }
  o.require(violations == 0, n(violations) + " violations");
  o.note("500 inputs (" + n(big) + " with n>=6), max P-n=" + n(max_excess));
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  const auto start = Clock::now();
  const LemmaSuiteReport r = run_lemma_suite(1000, kSeed);
  o.require(r.ok(), n(r.counterexamples.size()) + " counterexamples");
  o.require(r.distance_product_pass == 1000 && r.superfactorial_pass == 1000 && r.unbalanced_pass == 1000 &&
                r.identity_pass == 1000,
            "pass counts");
  o.require(seconds_since(start) < kLemmaLimit, "time");
  o.note("1000 instances x 3 inequalities + W=UVD");
  return o;
}

Outcome bad_point_suite() {
  Outcome o;
  const auto start = Clock::now();
  const RandomPairSuite s = run_bad_point_suite(500, kSeed, 4, 5);
  o.require(s.ok(), n(s.failures.size()) + " failing pairs");
  o.require(seconds_since(start) < kBadPointLimit, "time");
  o.note("500 pairs, max k=" + n(s.max_k));
  return o;
}

Outcome counterexample() {
  Outcome o;
  const auto start = Clock::now();
  const ComplexCounterexample c = complex_counterexample();
  o.require(c.points.size() == 6, "point count");
  o.require(c.degree == 5, "degree");
  o.require(c.verified(), "verification");
  for (const GaussianRational z : {GaussianRational{2, 3}, GaussianRational{2, -3}}) {
    o.require(evaluate(c.h, z) == GaussianRational{-1, 0}, "h(" + to_string(z) + ")");
    o.require(evaluate(c.g * c.h, z) == GaussianRational{Rational(49, 3), 0}, "f(" + to_string(z) + ")");
  }
  o.require(seconds_since(start) < kCounterexampleLimit, "time");
  o.note("6 bad points vs degree 5, h(2+-3i)=-1, f(2+-3i)=49/3");
  return o;
}

Outcome polya_suite() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  const Rational levels[] = {1, 2, 10};
  std::size_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RatPolynomial f = random_integer_poly(rng, 1, 6, 9);
    violations += !check_polya(f, levels[trial % 3], kPolyaTolerance).holds;
  }
  o.require(violations == 0, n(violations) + " violations");
  o.require(seconds_since(start) < kPolyaLimit, "time");
  o.note("200 polynomials, K in {1,2,10}");
  return o;
}

Outcome es_bounds() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> value(-50, 50), size(1, 5);
  std::size_t violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const RatPolynomial f = random_integer_valued_poly(rng, 1, 6, 9);
    std::vector<Integer> S;
    for (int i = size(rng); i > 0; --i) S.emplace_back(value(rng));
    violations += !check_ES_upper(f, S).holds;
  }
  o.require(violations == 0, n(violations) + " upper-bound violations");
  std::string lower;
  for (int deg = 2; deg <= 10; deg += 2) {
    const ESLowerFamily fam = es_lower_family(deg, 1, 0);
    o.require(fam.E_S >= static_cast<std::size_t>(deg + 2), "lower family n=" + std::to_string(deg));
    lower += (deg > 2 ? "," : "") + n(fam.E_S);
  }
  o.require(seconds_since(start) < kESLimit, "time");
  o.note("200 upper checks; family E_S=" + lower);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> level(-20, 20);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RatPolynomial> factors{random_integer_poly(rng, 1, 3, 9), random_integer_poly(rng, 1, 3, 9)};
    const FactoredPolynomial f(factors);
    const Census c = prime_census(f);
    const std::vector<Integer> S{level(rng), level(rng)};
    const LevelCensus lc = level_census(f.product(), S);

    std::map<Integer, Integer> scan_primes, certified;
    std::vector<Integer> scan_levels, certified_levels;
    for (long m = -500; m <= 500; ++m) {
      const Integer v = evaluate(f.product(), Rational(m)).get_num();
      if (is_prime(v).passed()) scan_primes.emplace(m, v);
      if (v == S[0] || v == S[1]) scan_levels.emplace_back(m);
    }
    for (const auto& w : c.witnesses) {
      if (abs(w.m) <= 500) certified.emplace(w.m, w.value);
    }
    for (const auto& w : lc.witnesses) {
      if (abs(w.m) <= 500) certified_levels.push_back(w.m);
    }
    mismatches += scan_primes != certified || scan_levels != certified_levels;
  }
  o.require(mismatches == 0, n(mismatches) + " mismatching inputs");
  o.require(seconds_since(start) < kOracleLimit, "time");
  o.note("200 factored inputs vs scan over |m|<=500");
  return o;
}

Outcome n_plus_2_search() {
  Outcome o;
  for (int N = 3; N <= 5; ++N) {
    int code = 0;
    const Json j = cli_json({"construct", "nplus2", "--n", std::to_string(N), "--tmax", std::to_string(kTMax),
                             "--bmax", "1000"},
                            code);
    if (code == cli::kBudgetExhausted) {
      o.note("n=" + std::to_string(N) + " budget exhausted");
      continue;
    }
    o.require(code == 0, "n=" + std::to_string(N) + " exit code " + std::to_string(code));
    if (code != 0) continue;
    const Json& cert = j["result"]["certificate"];
    const int P = cert["census"]["P"].get<int>();
    o.require(P >= N + 2, "n=" + std::to_string(N) + " P=" + std::to_string(P));
    o.require(cert["reverified"].get<bool>(), "n=" + std::to_string(N) + " re-verification");
    o.note("n=" + std::to_string(N) + " t=" + cert["multiplier"]["t"].get<std::string>() + " P=" + std::to_string(P));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool gating = true;
  };
  const std::vector<Criterion> criteria{
      {1, "fixed examples", fixed_examples},
      {2, "constant", constant},
      {3, "unit-value list", list_fibers},
      {4, "exceptional search", exceptional_search},
      {5, "constructions", constructions},
      {6, "census consistency sweep", census_sweep},
      {7, "distance-product inequalities", lemma_suite},
      {8, "bad-point suite", bad_point_suite},
      {9, "complex counterexample", counterexample},
      {10, "Polya measure bound", polya_suite},
      {11, "E_S bounds", es_bounds},
      {12, "oracle equivalence", oracle_equivalence},
      {13, "n+2 search", n_plus_2_search, false},
  };

  std::printf("primepoly acceptance (seed %llu)\n", static_cast<unsigned long long>(kSeed));
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    if (!o.pass && c.gating) ++failed;
    std::printf("%-4s %2d  %-30s %8.3fs  %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, t,
                c.gating ? "" : "(non-gating) ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d gating criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}

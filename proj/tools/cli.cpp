#include "cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "primepoly/bad_points.hpp"
#include "primepoly/bounds.hpp"
#include "primepoly/census.hpp"
#include "primepoly/constructions.hpp"
#include "primepoly/exceptional.hpp"
#include "primepoly/interval.hpp"
#include "report.hpp"

namespace primepoly::cli {

namespace {

constexpr int kDisplayDigits = 12;

struct Options {
  bool json = false;
  std::string factors;
  std::string poly;
  std::string set;
  std::string kind;
  std::optional<int> n;
  std::uint64_t tmax = 1000000;
  std::uint64_t bmax = 1000;
  int degree = 0;
  int bound = 0;
  int digits = 10;
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  int kmax = 6;
  int coord = 50;
  std::string K;
  std::string tol = "1/1000";
  std::string g;
  std::string h;
  bool random = false;
  int max_degree = 4;
  int coeff_bound = 5;
};

// Result of one subcommand: the command-specific payload and its exit code.
struct Outcome {
  Json input = Json::object();
  Json result = Json::object();
  int code = kOk;
  std::optional<std::uint64_t> seed;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<RatPolynomial> parse_factor_list(const std::string& text) {
  if (text.empty()) throw InvalidInput("--factors: empty factor list");
  std::vector<RatPolynomial> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_poly(part));
  return out;
}

std::vector<Integer> parse_integer_set(const std::string& text) {
  if (text.empty()) throw InvalidInput("--set: empty set");
  std::vector<Integer> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_integer(part));
  return out;
}

std::string str(const Integer& z) { return to_string(z); }
std::string str(const Rational& q) { return to_string(q); }

Json integers(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(str(z));
  return out;
}

Json polys(const std::vector<RatPolynomial>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(format_poly(p));
  return out;
}

Json verdict_json(const PrimalityVerdict& v) {
  return {{"value", str(v.value)}, {"status", to_string(v.status)}, {"method", to_string(v.method)}};
}

Json census_json(const Census& c) {
  Json witnesses = Json::array();
  for (const auto& w : c.witnesses) {
    witnesses.push_back({{"m", str(w.m)}, {"value", str(w.value)}, {"status", to_string(w.status)}});
  }
  Json fibers = Json::array();
  for (const auto& f : c.fibers) {
    fibers.push_back({{"factor", f.factor},
                      {"level", f.level},
                      {"equation", format_poly(f.equation)},
                      {"solutions", integers(f.solutions)}});
  }
  return {{"degree", c.degree},          {"P", c.P}, {"Pplus", c.Pplus}, {"witnesses", witnesses},
          {"candidates", integers(c.candidates)}, {"fibers", fibers}};
}

Json root_json(const IsolatedRoot& r) {
  if (r.is_exact()) return {{"exact", true}, {"value", str(r.lo)}};
  const IsolatedRoot fine = refine(r, Rational(1, pow(Integer(10), kDisplayDigits)));
  return {{"exact", false},
          {"defining", format_poly(fine.defining)},
          {"lo", decimal_floor(fine.lo, kDisplayDigits)},
          {"hi", decimal_ceil(fine.hi, kDisplayDigits)}};
}

Json interval_json(const RationalInterval& iv, int digits) {
  return {{"lo", decimal_floor(iv.lo, digits)}, {"hi", decimal_ceil(iv.hi, digits)}};
}

Json certificate_json(const ConstructionCertificate& c) {
  Json mult = nullptr;
  if (c.multiplier) {
    Json induced = Json::array();
    for (const auto& v : c.multiplier->induced) induced.push_back(verdict_json(v));
    mult = {{"t", str(c.multiplier->t)}, {"induced", induced}};
  }
  const bool ok = reverify(c);
  return {{"kind", to_string(c.kind)},
          {"factors", polys(c.f.factors())},
          {"product", format_poly(c.f.product())},
          {"product_pretty", pretty(c.f.product())},
          {"primes_used", integers(c.primes_used)},
          {"b_values", integers(c.b_values)},
          {"multiplier", mult},
          {"claim", {{"count", c.claim == ClaimKind::P ? "P" : "Pplus"}, {"at_least", c.claimed}}},
          {"census", census_json(c.census)},
          {"reverified", ok}};
}

Json block_report_json(const BlockReport& r) {
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back({{"type", to_string(p.type)}, {"root", root_json(p.root)}});
  Json blocks = Json::array();
  for (const auto& b : r.blocks) {
    blocks.push_back({{"type", to_string(b.type)}, {"first", b.first}, {"last", b.last}, {"extremal", b.extremal}});
  }
  return {{"g", format_poly(r.g)},
          {"h", format_poly(r.h)},
          {"degree", r.degree},
          {"k", r.k},
          {"l", r.l},
          {"types", r.type_sequence()},
          {"points", points},
          {"blocks", blocks},
          {"equal_pairs", {{"g", r.equal_pairs_g}, {"h", r.equal_pairs_h}, {"total", r.equal_pairs}}},
          {"central_blocks", {{"g", r.central_blocks_g}, {"h", r.central_blocks_h}, {"total", r.central_blocks}}},
          {"derivative_roots", {{"g", r.g_prime_roots}, {"h", r.h_prime_roots}}},
          {"checks",
           {{"k_le_degree", r.count_bound_holds()},
            {"derivative_roots_plus_2_ge_k", r.derivative_bound_holds()},
            {"split_bounds", r.split_bounds_hold()}}}};
}

// ---- Subcommands ---------------------------------------------------------------------

Outcome cmd_analyze(const Options& o) {
  Outcome out;
  FactoredPolynomial f(parse_factor_list(o.factors));
  out.input = {{"factors", polys(f.factors())}};
  out.result = census_json(prime_census(f));
  return out;
}

Outcome cmd_levels(const Options& o) {
  Outcome out;
  const RatPolynomial f = parse_poly(o.poly);
  const auto S = parse_integer_set(o.set);
  out.input = {{"poly", format_poly(f)}, {"set", integers(S)}};
  const LevelCensus lc = level_census(f, S);
  Json witnesses = Json::array();
  for (const auto& w : lc.witnesses) witnesses.push_back({{"m", str(w.m)}, {"value", str(w.value)}});
  out.result = {{"E_S", lc.count}, {"witnesses", witnesses}};
  if (is_integer_valued(f)) {
    const ESUpperCheck check = check_ES_upper(f, S);
    out.result["upper_bound"] = {{"K", str(check.K)}, {"bound", interval_json(check.bound, 6)}, {"holds", check.holds}};
    if (!check.holds) out.code = kPropertyViolation;
  } else {
    out.result["upper_bound"] = nullptr;
  }
  return out;
}

Outcome cmd_construct(const Options& o) {
  Outcome out;
  out.input = {{"kind", o.kind}};
  const auto need_n = [&] {
    if (!o.n) throw InvalidInput("construct " + o.kind + ": --n is required");
    out.input["n"] = *o.n;
    out.input["tmax"] = o.tmax;
    return *o.n;
  };
  std::optional<ConstructionCertificate> cert;
  if (o.kind == "deg2") {
    cert = fixed_example(FixedExample::deg2);
  } else if (o.kind == "deg3") {
    cert = fixed_example(FixedExample::deg3);
  } else if (o.kind == "deg4") {
    cert = fixed_example(FixedExample::deg4_nplus4);
  } else if (o.kind == "deg5") {
    cert = fixed_example(FixedExample::deg5_nplus3);
  } else if (o.kind == "nplus1") {
    cert = build_n_plus_1(need_n(), o.tmax);
  } else if (o.kind == "pplus") {
    cert = build_p_plus(need_n(), o.tmax);
  } else {
    const int n = need_n();
    out.input["bmax"] = o.bmax;
    const NPlus2Search search = search_n_plus_2(n, o.bmax, o.tmax);
    out.result = {{"b_values", integers(search.b_values)},
                  {"b_frontier", str(search.b_frontier)},
                  {"t_frontier", search.t_frontier}};
    if (!search.certificate) {
      out.result["certificate"] = nullptr;
      out.code = kBudgetExhausted;
      return out;
    }
    out.result["certificate"] = certificate_json(*search.certificate);
    if (!out.result["certificate"]["reverified"].get<bool>()) out.code = kPropertyViolation;
    return out;
  }
  out.result = certificate_json(*cert);
  if (!out.result["reverified"].get<bool>()) out.code = kPropertyViolation;
  return out;
}

Outcome cmd_exceptional(const Options& o) {
  Outcome out;
  out.input = {{"degree", o.degree}, {"bound", o.bound}};
  const ExceptionalReport r = search_exceptional(o.degree, o.bound);
  const auto hits_json = [](const std::vector<ExceptionalHit>& hits) {
    Json a = Json::array();
    for (const auto& h : hits) {
      Json eq = nullptr;
      if (h.equivalence) {
        eq = {{"index", h.equivalence->index},
              {"sigma", h.equivalence->sigma},
              {"tau", h.equivalence->tau},
              {"a", str(h.equivalence->a)}};
      }
      a.push_back({{"f", format_poly(h.f)}, {"E", h.E}, {"equivalence", eq}});
    }
    return a;
  };
  out.result = {{"candidates", r.candidates},
                {"list_equivalent", r.list_equivalent},
                {"hit_count", r.hits.size()},
                {"hits", hits_json(r.hits)},
                {"mismatches", hits_json(r.mismatches)},
                {"consistent", r.consistent()}};
  if (!r.consistent()) out.code = kPropertyViolation;
  return out;
}

Outcome cmd_constant(const Options& o) {
  Outcome out;
  out.input = {{"digits", o.digits}};
  const ConstantSolution s = solve_constant(o.digits);
  out.result = {{"t", s.t_star},
                {"c", s.c},
                {"residual", s.residual},
                {"t_bracket", interval_json(s.t_bracket, o.digits + 6)},
                {"steps", s.steps}};
  return out;
}

Outcome cmd_lemmas(const Options& o) {
  Outcome out;
  out.seed = o.seed;
  out.input = {{"trials", o.trials}, {"kmax", o.kmax}, {"coord", o.coord}};
  const LemmaSuiteReport r = run_lemma_suite(o.trials, o.seed, o.kmax, o.coord);
  out.result = {{"distance_product", {{"passed", r.distance_product_pass}, {"trials", r.trials}}},
                {"superfactorial", {{"passed", r.superfactorial_pass}, {"trials", r.trials}}},
                {"unbalanced_superfactorial", {{"passed", r.unbalanced_pass}, {"trials", r.trials}}},
                {"W_eq_UVD", {{"passed", r.identity_pass}, {"trials", r.trials}}},
                {"counterexamples", r.counterexamples},
                {"ok", r.ok()}};
  if (!r.ok()) out.code = kPropertyViolation;
  return out;
}

Outcome cmd_polya(const Options& o) {
  Outcome out;
  const RatPolynomial f = parse_poly(o.poly);
  const Rational K = parse_rational(o.K), tol = parse_rational(o.tol);
  if (K <= 0) throw InvalidInput("--K must be positive");
  if (tol <= 0) throw InvalidInput("--tol must be positive");
  out.input = {{"poly", format_poly(f)}, {"K", str(K)}, {"tol", str(tol)}};
  const PolyaCheck c = check_polya(f, K, tol);
  out.result = {{"measure", {{"lo", decimal_floor(c.bracket.lower, kDisplayDigits)},
                             {"hi", decimal_ceil(c.bracket.upper, kDisplayDigits)}}},
                {"bound", interval_json(c.bound, kDisplayDigits)},
                {"holds", c.holds}};
  if (!c.holds) out.code = kPropertyViolation;
  return out;
}

Outcome cmd_statement41(const Options& o) {
  Outcome out;
  if (o.random) {
    if (!o.g.empty() || !o.h.empty()) throw InvalidInput("statement41: --random excludes --g/--h");
    out.seed = o.seed;
    out.input = {{"trials", o.trials}, {"max_degree", o.max_degree}, {"coeff_bound", o.coeff_bound}};
    const RandomPairSuite s = run_bad_point_suite(o.trials, o.seed, o.max_degree, o.coeff_bound);
    Json failures = Json::array();
    for (const auto& r : s.failures) failures.push_back(block_report_json(r));
    out.result = {{"trials", s.trials}, {"max_k", s.max_k}, {"failures", failures}, {"ok", s.ok()}};
    if (!s.ok()) out.code = kPropertyViolation;
    return out;
  }
  if (o.g.empty() || o.h.empty()) throw InvalidInput("statement41: give --g and --h, or --random");
  const RatPolynomial g = parse_poly(o.g), h = parse_poly(o.h);
  out.input = {{"g", format_poly(g)}, {"h", format_poly(h)}};
  const BlockReport r = verify_bad_point_bound(g, h);
  out.result = block_report_json(r);
  if (!r.holds()) out.code = kPropertyViolation;
  return out;
}

Outcome cmd_counterexample(const Options&) {
  Outcome out;
  const ComplexCounterexample c = complex_counterexample();
  Json points = Json::array();
  for (const auto& p : c.points) {
    points.push_back({{"x", p.label},
                      {"type", p.type},
                      {"factor_value", p.factor_value},
                      {"f_value", p.f_value},
                      {"f_gt_1", p.f_exceeds_one}});
  }
  out.result = {{"g", format_poly(c.g)},
                {"h", format_poly(c.h)},
                {"degree", c.degree},
                {"g_minus_1_eq_x(x^2-3)/3", c.g_minus_one_factors},
                {"points", points},
                {"bad_points", c.points.size()},
                {"real_bad_points", c.real_bad_points},
                {"exceeds_degree", c.verified()}};
  if (!c.verified()) out.code = kPropertyViolation;
  return out;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += ' ';
    s += a;
  }
  return s;
}

const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kPropertyViolation: return "property_violation";
    case kInvalidInput: return "invalid_input";
    default: return "budget_exhausted";
  }
}

void emit(const Options& o, const std::vector<std::string>& args, const Outcome& r, const std::string& error,
          std::ostream& out) {
  Json report = {{"command", join(args)}, {"version", PRIMEPOLY_VERSION}};
  if (r.seed) report["seed"] = *r.seed;
  report["status"] = status_name(r.code);
  if (!error.empty()) report["error"] = error;
  report["input"] = r.input;
  report["result"] = r.result;
  if (o.json) {
    out << report.dump(2) << '\n';
  } else {
    render_text(report, out);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Prime values of reducible polynomials: censuses, constructions and bound checks", "primepoly"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the report as one JSON document");

  using Handler = Outcome (*)(const Options&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  const auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands.emplace_back(sub, h);
    return sub;
  };

  auto* analyze = add("analyze", "Prime census of a product of factors", cmd_analyze);
  analyze->add_option("--factors", o.factors, "Factors, ';'-separated, each ascending coefficients")->required();

  auto* levels = add("levels", "Integers where f takes a value in S", cmd_levels);
  levels->add_option("--poly", o.poly, "Polynomial")->required();
  levels->add_option("--set", o.set, "Comma-separated integers")->required();

  auto* construct = add("construct", "Build and certify a construction", cmd_construct);
  construct->add_option("kind", o.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"deg2", "deg3", "deg4", "deg5", "nplus1", "pplus", "nplus2"}));
  construct->add_option("--n", o.n, "Degree parameter");
  construct->add_option("--tmax", o.tmax, "Largest |t| tried")->check(CLI::PositiveNumber);
  construct->add_option("--bmax", o.bmax, "Largest |b| tried")->check(CLI::PositiveNumber);

  auto* exceptional = add("exceptional", "Enumerate polynomials with more unit values than their degree",
                          cmd_exceptional);
  exceptional->add_option("--degree", o.degree, "Degree (1..4)")->required();
  exceptional->add_option("--bound", o.bound, "Coefficient bound")->required();

  auto* constant = add("constant", "Solve for the constant c = 1 + 1/t", cmd_constant);
  constant->add_option("--digits", o.digits, "Decimal digits (1..50)");

  auto* lemmas = add("lemmas", "Random checks of the distance-product inequalities", cmd_lemmas);
  lemmas->add_option("--trials", o.trials, "Instances per inequality")->required();
  lemmas->add_option("--seed", o.seed, "RNG seed");
  lemmas->add_option("--kmax", o.kmax, "Largest set size");
  lemmas->add_option("--coord", o.coord, "Coordinate range");

  auto* polya = add("polya", "Measure of {|f| <= K} against 4 (K/|lead|)^(1/n)", cmd_polya);
  polya->add_option("--poly", o.poly, "Polynomial")->required();
  polya->add_option("--K", o.K, "Level (positive rational)")->required();
  polya->add_option("--tol", o.tol, "Bracket tolerance (positive rational)");

  auto* s41 = add("statement41", "Real bad points of a pair (g, h)", cmd_statement41);
  s41->set_help_flag("--help", "Print this help message and exit");
  s41->add_option("--g", o.g, "First factor");
  s41->add_option("--h", o.h, "Second factor");
  s41->add_flag("--random", o.random, "Run the random pair suite");
  s41->add_option("--trials", o.trials, "Random pairs");
  s41->add_option("--seed", o.seed, "RNG seed");
  s41->add_option("--max-degree", o.max_degree, "Largest factor degree");
  s41->add_option("--coeff-bound", o.coeff_bound, "Coefficient bound");

  add("counterexample", "Exact check of the complex pair with six bad points", cmd_counterexample);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  const auto it = std::find_if(commands.begin(), commands.end(), [](const auto& c) { return c.first->parsed(); });
  Outcome result;
  std::string error;
  try {
    result = it->second(o);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const PropertyViolation& e) {
    result.code = kPropertyViolation;
    error = e.what();
    err << "property violation: " << e.what() << '\n';
  } catch (const BudgetExhausted& e) {
    result.code = kBudgetExhausted;
    error = e.what();
    err << "budget exhausted: " << e.what() << '\n';
  }
  emit(o, args, result, error, out);
  return result.code;
}

}  // namespace primepoly::cli

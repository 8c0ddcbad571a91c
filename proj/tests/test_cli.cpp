#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "report.hpp"

using primepoly::cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = primepoly::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Run r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("analyze") {
  const Json a = run_json({"analyze", "--factors", "1,-3,1;29,-11,1"});
  CHECK(a["result"]["P"] == 8);
  CHECK(a["status"] == "ok");
  CHECK(a["input"]["factors"] == Json::array({"1,-3,1", "29,-11,1"}));
  CHECK(a["result"]["witnesses"].size() == 8);

  const Json sq = run_json({"analyze", "--factors", "0,1;0,1"});
  CHECK(sq["result"]["P"] == 0);

  const Run text = run({"analyze", "--factors", "1,-3,1;29,-11,1"});
  CHECK(text.code == 0);
  CHECK(text.out.find("\n  P: 8\n") != std::string::npos);
  CHECK(text.out.rfind("command: analyze --factors 1,-3,1;29,-11,1\n", 0) == 0);
}

TEST_CASE("constant") {
  const Json c = run_json({"constant", "--digits", "10"});
  CHECK(c["result"]["t"] == "1.1463411865");
  CHECK(c["result"]["c"] == "1.8723406362");
}

TEST_CASE("construct and counterexample") {
  for (const char* kind : {"deg2", "deg3", "deg4", "deg5"}) {
    const Json j = run_json({"construct", kind});
    CHECK(j["result"]["reverified"] == true);
  }
  const Json n = run_json({"construct", "nplus1", "--n", "7"});
  CHECK(n["result"]["census"]["P"].get<int>() >= 8);
  CHECK(n["input"]["tmax"] == 1000000);

  const Json ce = run_json({"counterexample"});
  CHECK(ce["result"]["bad_points"] == 6);
  CHECK(ce["result"]["degree"] == 5);
}

TEST_CASE("other subcommands") {
  CHECK(run_json({"levels", "--poly", "binom:0,0,1", "--set", "0,1"})["result"]["E_S"] == 4);
  CHECK(run_json({"exceptional", "--degree", "2", "--bound", "3"})["result"]["consistent"] == true);
  CHECK(run_json({"polya", "--poly", "-2,0,1", "--K", "1"})["result"]["holds"] == true);
  CHECK(run_json({"statement41", "--g", "1,-3,1", "--h", "29,-11,1"})["result"]["k"] == 4);
  const Json lemmas = run_json({"lemmas", "--trials", "50", "--seed", "3"});
  CHECK(lemmas["seed"] == 3);
  CHECK(lemmas["result"]["ok"] == true);
}

TEST_CASE("reports are reproducible byte for byte") {
  const std::vector<std::vector<std::string>> lines{
      {"lemmas", "--trials", "100", "--seed", "9"},
      {"statement41", "--random", "--trials", "40", "--seed", "9"},
      {"construct", "nplus1", "--n", "9"},
      {"exceptional", "--degree", "1", "--bound", "3", "--json"},
  };
  for (const auto& args : lines) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  CHECK(run({"lemmas", "--trials", "100", "--seed", "9"}).out != run({"lemmas", "--trials", "100", "--seed", "10"}).out);
}

TEST_CASE("json and text carry the same data") {
  const std::vector<std::string> args{"construct", "pplus", "--n", "4"};
  std::vector<std::string> with_json = args;
  with_json.push_back("--json");
  const Json j = Json::parse(run(with_json).out);
  std::ostringstream text;
  Json same = j;
  same["command"] = "construct pplus --n 4";
  primepoly::cli::render_text(same, text);
  CHECK(text.str() == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "--factors", "1,x"}).code == 2);
  CHECK(run({"analyze", "--factors", "0,1/2;0,1"}).code == 2);
  CHECK(run({"analyze", "--factors", "1,-3,1"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"construct", "deg9"}).code == 2);
  CHECK(run({"construct", "nplus1"}).code == 2);
  CHECK(run({"constant", "--digits", "0"}).code == 2);
  CHECK(run({"polya", "--poly", "1,1", "--K", "-1"}).code == 2);
  CHECK(run({"statement41"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const Run pplus = run({"construct", "pplus", "--n", "6", "--tmax", "1"});
  CHECK(pplus.code == 3);
  CHECK(pplus.out.find("status: budget_exhausted") != std::string::npos);

  const Run nplus2 = run({"construct", "nplus2", "--n", "3", "--tmax", "1"});
  CHECK(nplus2.code == 3);
  CHECK(nplus2.out.find("certificate: none") != std::string::npos);
}

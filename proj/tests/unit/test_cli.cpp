// framoid - exact computations in framed and tied diagram monoids

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "framoid/cli.hpp"
#include "json.hpp"

namespace framoid {

  namespace {
    struct Outcome {
      int         code;
      std::string out;
      std::string err;
    };

    Outcome run(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }
  }  // namespace

  TEST_CASE("enumerate prints one JSON line per ambient", "[cli]") {
    auto r = run({"enumerate", "--family", "jdn", "--d", "2", "--n", "3"});
    CHECK(r.code == cli::ok);
    CHECK(r.out == "{\"family\":\"jdn\",\"d\":2,\"n\":3,\"count\":40,\"predicted\":40,\"match\":true}\n");
    auto many = run({"enumerate", "--family", "Brdn", "--d", "1..2", "--n", "1..3"});
    CHECK(many.code == cli::ok);
    CHECK(std::count(many.out.begin(), many.out.end(), '\n') == 6);
  }

  TEST_CASE("cardinality-table prints CSV", "[cli]") {
    auto r = run({"cardinality-table", "--family", "rdn", "--d", "2", "--n", "1..4",
                  "--format", "csv"});
    CHECK(r.code == cli::ok);
    CHECK(r.out
          == "family,d,n,count,predicted,match\n"
             "rdn,2,1,3,3,true\nrdn,2,2,17,17,true\nrdn,2,3,139,139,true\n"
             "rdn,2,4,1473,1473,true\n");
    // unbeaded families have d = 1 only, so repeated rows are dropped
    auto j = run({"cardinality-table", "--family", "jn", "--d", "1..3", "--n", "2"});
    CHECK(j.out == "family,d,n,count,predicted,match\njn,1,2,2,2,true\n");
  }

  TEST_CASE("eval-word prints the diagram and the removed loops", "[cli]") {
    auto r = run({"eval-word", "--family", "jdn", "--d", "2", "--n", "2", "--word", "t1 o1 t1"});
    CHECK(r.code == cli::ok);
    CHECK(r.out
          == "diagram: n=2;d=2;blocks=[{t1,t2}:0,{b1,b2}:0]\nnormal form: t1\nloops: {1:1}\n");
    auto j = run({"eval-word", "--family", "jdn", "--d", "2", "--n", "2", "--word", "t1 o1 t1",
                  "--format", "json"});
    auto v = nlohmann::json::parse(j.out);
    CHECK(v["loops"] == "{1:1}");
    CHECK(v["normal_form"] == "t1");
  }

  TEST_CASE("normal-form uses the family's normal form", "[cli]") {
    auto r = run({"normal-form", "--family", "brdn", "--d", "4", "--n", "5", "--word",
                  "o2 t2 t1 t3 t2 t4 o1^2 o4"});
    CHECK(r.code == cli::ok);
    CHECK(r.out == "o2 o5^2 s3 s2 t1 t3 s4 s3 s2 s1 o4\n");
    auto j = run({"normal-form", "--family", "jdn", "--d", "4", "--n", "5", "--word",
                  "o2 t2 t1 t3 t2 t4 o1^2 o4"});
    CHECK(j.out == "o2 t2 t1 t3 t2 t4 o1^2 o4\n");
    auto rook = run({"normal-form", "--family", "rprimedn", "--d", "2", "--n", "2", "--word",
                     "r1 o1", "--format", "json"});
    CHECK(rook.code == cli::ok);
    CHECK(nlohmann::json::parse(rook.out)["length"] == 1);
  }

  TEST_CASE("verify runs selected suites", "[cli]") {
    auto r = run({"verify", "--suite", "bridges", "--family", "jdn", "--d", "2", "--format",
                  "csv"});
    CHECK(r.code == cli::ok);
    CHECK(r.out.rfind("suite,family,d,n,identity,status\n", 0) == 0);
    CHECK(r.out.find(",fail\n") == std::string::npos);
    auto a = run({"verify", "--suite", "tl", "--d", "2", "--n", "3", "--triples", "200"});
    auto b = run({"verify", "--suite", "tl", "--d", "2", "--n", "3", "--triples", "200"});
    CHECK(a.code == cli::ok);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["pass"] == true);
    auto timed = run({"verify", "--suite", "tied", "--n", "2", "--timing"});
    CHECK(nlohmann::json::parse(timed.out)["results"][0].contains("ms"));
  }

  TEST_CASE("exit codes", "[cli]") {
    CHECK(run({"--help"}).code == cli::ok);
    CHECK(run({}).code == cli::usage);
    CHECK(run({"frobnicate"}).code == cli::usage);
    CHECK(run({"enumerate", "--family", "nope", "--n", "2"}).code == cli::usage);
    CHECK(run({"enumerate", "--family", "jdn", "--n", "3..1"}).code == cli::usage);
    CHECK(run({"enumerate", "--family", "jdn", "--n", "x"}).code == cli::usage);
    CHECK(run({"enumerate", "--family", "jdn"}).code == cli::usage);
    CHECK(run({"eval-word", "--family", "jdn", "--n", "2", "--word", "s1"}).code == cli::usage);
    CHECK(run({"eval-word", "--family", "jdn", "--n", "2", "--word", "t1 ?"}).code == cli::usage);
    CHECK(run({"normal-form", "--family", "pdn", "--n", "2", "--word", "e1"}).code
          == cli::usage);
    CHECK(run({"verify", "--suite", "everything"}).code == cli::usage);
    CHECK(run({"enumerate", "--family", "jdn", "--n", "3", "--format", "xml"}).code
          == cli::usage);
    auto capped = run({"enumerate", "--family", "jn", "--n", "5", "--cap", "3"});
    CHECK(capped.code == cli::cap_reached);
    CHECK(capped.err.find("cap 3") != std::string::npos);
  }

}  // namespace framoid

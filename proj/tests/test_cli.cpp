#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = liebranch::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("branch subcommand") {
  auto r = run({"branch", "--catalog", "A1-in-A2-xe1", "-i", "[1,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[2]"));
  CHECK(contains(r.out, "dim check: 8 = 8  ok"));

  r = run({"branch", "--catalog", "A1-in-A2-xe1", "-i", "[1,1]", "--method", "all"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "agreement: ok"));
  CHECK(contains(r.out, "residual(closed)"));

  r = run({"branch", "--catalog", "A1-in-A2-xe1", "-i", "[1]"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "rank mismatch: expected 2 labels"));

  r = run({"branch", "--catalog", "who", "-i", "[1,1]"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "unknown catalog embedding"));

  r = run({"branch", "--catalog", "A1-in-A2-xe1", "-i", "[1,1]", "--method", "closed",
           "--level", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "below the level bound"));

  r = run({"branch", "--catalog", "A1-in-A2-xe4", "-i", "[1,0]", "--zeros"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[1]      0"));
  CHECK(contains(r.out, "[0]      0"));
}

TEST_CASE("branch from an embedding file") {
  const std::string path = "cli_test_embedding.json";
  {
    std::ofstream f(path);
    f << R"({"name":"halfsum","g":"A1+A1","p":"A1","P":[[1,1]]})";
  }
  auto r = run({"branch", "--embedding", path, "-i", "[2,2]"});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(contains(r.out, "halfsum"));
  CHECK(contains(r.out, "dim check: 9 = 9  ok"));

  r = run({"branch", "--embedding", "no_such_file.json", "-i", "[1,1]"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "cannot open"));

  r = run({"branch", "--embedding", path, "--catalog", "diag-A1", "-i", "[1,1]"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "not both"));
}

TEST_CASE("weights subcommand") {
  auto r = run({"weights", "--algebra", "A2", "-i", "[1,0]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "dim 3"));
  CHECK(contains(r.out, "[1,0]"));
  CHECK(contains(r.out, "[-1,1]"));
  CHECK(contains(r.out, "[0,-1]"));
}

TEST_CASE("tensor subcommand lists both summands of 2x2") {
  auto r = run({"tensor", "--algebra", "A1", "-i", "[1]", "-j", "[1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[2]"));
  CHECK(contains(r.out, "[0]"));
  CHECK(contains(r.out, "dim check: 4 = 4"));
}

TEST_CASE("verlinde subcommand") {
  auto r = run({"verlinde", "--algebra", "A2", "--level", "5", "-i", "[1,0]", "-j", "[0,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "[1,1]"));
  CHECK(contains(r.out, "[0,0]"));

  r = run({"verlinde", "--algebra", "A2", "--level", "1", "-i", "[2,0]", "-j", "[0,1]"});
  CHECK(r.code == 2);
}

TEST_CASE("smatrix json carries the unitarity residual") {
  auto r = run({"smatrix", "--algebra", "A1", "--level", "3", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.contains("unitarity_residual"));
  CHECK(doc["weights"].size() == 4);
  CHECK(doc["schema_version"] == 1);
}

TEST_CASE("deterministic output across repeated runs") {
  std::vector<std::string> args{"branch", "--catalog", "B2-in-A4", "-i", "[1,0,0,1]",
                                "--method", "all"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json output round-trips byte for byte") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"branch", "--catalog", "A1-in-A2-xe1", "-i", "[2,1]", "--method", "all", "--json"},
           {"smatrix", "--algebra", "A2", "--level", "4", "--json"},
           {"verlinde", "--algebra", "A1", "--level", "6", "-i", "[2]", "-j", "[2]", "--json"},
           {"nimrep-a2", "--level", "8", "-i", "[1,1]", "--json"},
           {"catalog", "--json"}}) {
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("nimrep subcommand") {
  auto r = run({"nimrep", "--catalog", "A1-in-A2-xe1", "-i", "[1,0]", "--window", "0..8"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "9 dominant A1 weights"));

  r = run({"nimrep", "--catalog", "A1-in-A2-xe1", "-i", "[1,0]", "--window", "0..8", "-j",
           "[0,1]"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "verify: ok"));

  r = run({"nimrep", "--catalog", "A1-in-A2-xe1", "-i", "[1,0]", "--window", "3..8"});
  CHECK(r.code == 2);

  r = run({"nimrep", "--catalog", "A1-in-A2-xe1", "-i", "[1,1]", "--window", "0..3", "-j",
           "[1,1]", "--margin", "1"});
  CHECK(r.code == 2);
  CHECK(contains(r.err, "margin"));
}

TEST_CASE("nimrep-a2 subcommand") {
  auto r = run({"nimrep-a2", "--level", "10", "-i", "[1,0]", "--map", "psi"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "match: ok"));

  r = run({"nimrep-a2", "--level", "10", "-i", "[1,0]", "--map", "psiprime"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "match: ok"));

  r = run({"nimrep-a2", "--level", "7", "-i", "[1,0]"});
  CHECK(r.code == 2);
}

TEST_CASE("integral subcommand and the numerical exit code") {
  auto r = run({"integral", "a1-tensor", "1", "1", "2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rounded 1"));

  r = run({"integral", "a1-in-a2", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rounded 2"));

  r = run({"integral", "a1-tensor", "1", "1", "2", "--tol", "0"});
  CHECK(r.code == 4);
  CHECK(contains(r.err, "numerical error"));

  r = run({"integral", "nope", "1", "1", "1"});
  CHECK(r.code == 2);
}

TEST_CASE("catalog subcommand") {
  auto r = run({"catalog"});
  CHECK(r.code == 0);
  for (const char* name : {"A1-in-A2-xe1", "A1-in-A2-xe4", "diag-A1", "diag-A2", "B1-in-A2",
                           "B2-in-A4"})
    CHECK(contains(r.out, name));
  CHECK(contains(r.out, "Bourbaki"));
}

TEST_CASE("parse failures exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"branch"}).code == 2);
  CHECK(run({"branch", "--catalog", "A1-in-A2-xe1", "-i", "[1,1]", "--method", "x"}).code == 2);
}

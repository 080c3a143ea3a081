#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "sslat/io.hpp"

using sslat::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = sslat::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const std::string path = "cli_test_" + name + ".json";
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("build") {
  const auto r = run({"build", "--perm", "2,1"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["outputs"]["diagram"]["size"] == 4);
  CHECK(j["passed"] == true);

  const auto chain = Json::parse(run({"build", "--perm", "1"}).out);
  CHECK(chain["outputs"]["diagram"]["size"] == 2);

  const auto bad = run({"build", "--perm", "2,2"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("DuplicateValue") != std::string::npos);
  CHECK(run({"build"}).code == 2);
}

TEST_CASE("build output feeds extract") {
  const auto path = temp_file("cycle", run({"build", "--perm", "2,3,1"}).out);
  const auto r = run({"extract", "--diagram", path});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["outputs"]["permutation"]["one_line"] == "2,3,1");
  CHECK(j["outputs"]["segments"].dump() == "[[1,3]]");
  CHECK(j["outputs"]["class_size"] == 2);
  std::remove(path.c_str());
}

TEST_CASE("extract a chain and bad input") {
  const auto chain = temp_file("chain", R"({"size":3,"covers":[[0,1],[1,2]],"left_chain":[0,1,2],"right_chain":[0,1,2]})");
  CHECK(Json::parse(run({"extract", "--diagram", chain}).out)["outputs"]["permutation"]["one_line"] == "1,2");
  const auto broken = temp_file("broken", "{\"size\": ");
  CHECK(run({"extract", "--diagram", broken}).code == 2);
  CHECK(run({"extract", "--diagram", "no_such_file.json"}).code == 2);
  std::remove(chain.c_str());
  std::remove(broken.c_str());
}

TEST_CASE("count") {
  const auto three = Json::parse(run({"count", "--n", "3"}).out);
  std::vector<int> counts;
  for (const auto& row : three["outputs"]["counts"]) counts.push_back(row["classes"]);
  CHECK(counts == std::vector<int>{1, 2, 5});
  const auto one = Json::parse(run({"count", "--n", "1"}).out);
  CHECK(one["outputs"]["counts"][0]["classes"] == 1);
  CHECK(run({"count", "--n", "10"}).code == 2);
  CHECK(run({"count", "--n", "6", "--jobs", "3"}).out == run({"count", "--n", "6"}).out);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--n", "4"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["verification"]["checks_run"] == j["verification"]["checks_passed"]);
  CHECK(j["verification"]["checks"].size() >= 10);

  const auto empty = run({"verify", "--n", "0"});
  CHECK(empty.code == 0);

  const auto faulty = run({"verify", "--n", "3", "--inject-fault"});
  CHECK(faulty.code == 1);
  CHECK(Json::parse(faulty.out)["passed"] == false);
}

TEST_CASE("verify is deterministic across worker counts") {
  const auto one = run({"verify", "--n", "4", "--samples", "5", "--seed", "7"});
  const auto four = run({"verify", "--n", "4", "--samples", "5", "--seed", "7", "--jobs", "4"});
  CHECK(one.out == four.out);
}

TEST_CASE("render-grid") {
  const auto r = run({"render-grid", "--perm", "2,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "   1 2\n1  . #\n2  # .\n");
  const auto j = Json::parse(run({"render-grid", "--perm", "2,1", "--format", "json"}).out);
  CHECK(j["outputs"]["source_cells"].dump() == "[[1,2],[2,1]]");
}

TEST_CASE("group-realize") {
  const auto r = run({"group-realize", "--perm", "2,1"});
  CHECK(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["outputs"]["elements"].dump() == "[1,2,3,6]");
  CHECK(j["outputs"]["jordan_holder"].dump() == "[2,1]");
  CHECK(run({"group-realize", "--perm", "2,1", "--primes", "2,2"}).code == 2);
  CHECK(run({"group-realize", "--perm", "2,1", "--primes", "2,9"}).code == 2);
  const auto custom = Json::parse(run({"group-realize", "--perm", "2,3,1", "--primes", "5,3,2"}).out);
  CHECK(custom["outputs"]["h_orders"].dump() == "[1,5,15,30]");
}

TEST_CASE("export-dot") {
  const auto r = run({"export-dot", "--perm", "1,2,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") == 0);
  CHECK(r.out.find("n2 -> n3") != std::string::npos);
  CHECK(run({"export-dot"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"build", "--perm", "2,1", "--format", "xml"}).code == 2);
  CHECK(run({"classify", "--perm", "2,1", "--format", "dot"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("outputs are byte-identical across runs") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"build", "--perm", "3,1,2"}, {"classify", "--perm", "(1 2 3)(5 6 7)"},
        {"group-realize", "--perm", "2,3,1"}, {"render-grid", "--perm", "3,1,2", "--format", "dot"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

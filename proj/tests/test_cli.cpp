#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;
namespace cli = metdim::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.push_back("--format");
  args.push_back("json");
  auto r = run(args, stdin_text);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("decompose") {
  CHECK(run_json({"decompose", "--gen", "complete 5"})["b"] == 10);
  CHECK(run_json({"decompose", "--gen", "path 7"})["b"] == 1);
  auto r = run({"decompose", "-"}, "0 1\n2 3\n");
  CHECK(r.code == cli::kDisconnected);
  CHECK(r.err.find("0,1") != std::string::npos);
  CHECK(run({"decompose", "-"}, "0 0\n").code == cli::kUsage);
}

TEST_CASE("decompose reads files") {
  const std::string path = "cli_test_graph.txt";
  {
    std::ofstream f(path);
    f << "# spider\n0 1\n1 2\n0 3\n3 4\n0 5\n5 6\n";
  }
  auto j = run_json({"decompose", path});
  CHECK(j["b"] == 3);
  CHECK(j["junctions"] == json::array({0}));
  std::remove(path.c_str());
  CHECK(run({"decompose", "no_such_file.txt"}).code == cli::kUsage);
}

TEST_CASE("solve") {
  CHECK(run_json({"solve", "--gen", "cycle 6"})["dimension"] == 2);
  CHECK(run_json({"solve", "--gen", "complete 5"})["dimension"] == 4);
  CHECK(run_json({"solve", "--gen", "spider 3x2"})["dimension"] == 2);
  for (std::string engine : {"brute", "fpt-pragmatic", "fpt-faithful"}) {
    auto j = run_json({"solve", "--gen", "spider 3x2", "--engine", engine});
    CHECK(j["dimension"] == 2);
    CHECK(j["engine"] == engine);
  }
  auto fpt = run_json({"solve", "--gen", "cycle 7", "--engine", "fpt-pragmatic"});
  CHECK(fpt["stats"]["ms"] == 0);
  CHECK(fpt["stats"].contains("profiles"));
  CHECK(fpt["stats"].contains("feasibility_calls"));
}

TEST_CASE("auto engine picks by size") {
  CHECK(run_json({"solve", "--gen", "path 12"})["engine"] == "brute");
  CHECK(run_json({"solve", "--gen", "path 13"})["engine"] == "fpt-pragmatic");
}

TEST_CASE("solve reports exhaustion") {
  auto r = run({"solve", "--gen", "random 200 230", "--engine", "brute", "--budget-ms", "1", "--format", "json"});
  CHECK(r.code == cli::kResource);
  auto j = json::parse(r.out);
  CHECK(j["error"] == "resource");
  CHECK(j["upper_bound"] == 199);
  CHECK(j["lower_bound"] >= 1);
}

TEST_CASE("verify") {
  CHECK(run({"verify", "--gen", "path 5", "--set", "0"}).code == 0);
  auto c4 = run({"verify", "--gen", "cycle 4", "--set", "0"});
  CHECK(c4.code == cli::kNotLocating);
  CHECK(c4.out.find("1 and 3") != std::string::npos);
  auto empty = run({"verify", "--gen", "path 5", "--set", ""});
  CHECK(empty.code == cli::kUsage);
  CHECK(empty.err.find("empty set") != std::string::npos);
}

TEST_CASE("bounds") {
  auto k5 = run_json({"bounds", "--gen", "complete 5"});
  CHECK(k5["b"] == 10);
  CHECK(k5["ell"] == 4);
  CHECK(k5["ell_le_2b"] == true);
  auto p7 = run_json({"bounds", "--gen", "path 7"});
  CHECK(p7["b"] == 1);
  CHECK(p7["ell"] == 2);
  auto s6 = run_json({"bounds", "--gen", "star 6"});
  CHECK(s6["b"] == 6);
  CHECK(s6["ell"] == 6);
  CHECK(run({"bounds", "--gen", "path 30"}).code == cli::kResource);
}

TEST_CASE("gen") {
  auto r = run({"gen", "spider 3x2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n 7", 0) == 0);
  auto j = run_json({"gen", "random 10 14", "--seed", "4"});
  CHECK(j["n"] == 10);
  CHECK(j["edges"].size() == 14);
  CHECK(run_json({"gen", "random 10 14", "--seed", "4"}) == j);
  CHECK(run({"gen", "nonsense 3"}).code == cli::kUsage);
}

TEST_CASE("bench") {
  auto j = run_json({"bench", "cycle 3..10", "--engines", "brute,fpt-pragmatic"});
  CHECK(j["agree"] == true);
  CHECK(j["rows"].size() == 8);
  auto k = run_json({"bench", "complete 3..6"});
  for (const auto& row : k["rows"]) CHECK(row["results"]["brute"]["dimension"] == row["n"].get<int>() - 1);
  auto r = run({"bench", "random 200 230", "--engines", "brute", "--budget-ms", "1"});
  CHECK(r.code == cli::kResource);
}

TEST_CASE("inspect-indistinct") {
  auto j = run_json({"inspect-indistinct", "--gen", "spider 3x2", "--s", "2", "--A", "1", "--B", "2"});
  CHECK(j["s"] == 2);
  REQUIRE(j["segments"].size() == 1);
  CHECK(j["segments"][0]["slope"] == 1);
}

TEST_CASE("json output is byte-identical across runs") {
  for (std::vector<std::string> args : std::vector<std::vector<std::string>>{
           {"solve", "--gen", "random 14 16", "--seed", "9", "--engine", "fpt-pragmatic", "--format", "json"},
           {"decompose", "--gen", "spider 4x3", "--format", "json"},
           {"bench", "cycle 4..6", "--format", "json"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"solve"}).code == cli::kUsage);
  CHECK(run({"solve", "--gen", "path 4", "--engine", "magic"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

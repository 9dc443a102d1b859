#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fj/report.hpp"

using namespace fj;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("build") {
  CHECK(json_of({"build", "--family", "sp", "--m", "3"})["class_size"] == 63);
  CHECK(json_of({"build", "--family", "sym", "--m", "2"})["class_size"] == 1);
  const char* path = "/tmp/fj_cli_bad.grp";
  {
    std::ofstream f(path);
    f << "perm 3\ngen (1,2\nseed (1,2)\n";
  }
  const auto r = run({"build", "--file", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("ParseError") != std::string::npos);
  CHECK(run({"build", "--family", "nope"}).code == 2);
  CHECK(run({"build", "--family", "sp", "--m", "9"}).code == 2);
}

TEST_CASE("edge export") {
  const char* path = "/tmp/fj_cli_edges.txt";
  CHECK(run({"build", "--family", "sym", "--m", "4", "--edges", path}).code == 0);
  std::ifstream f(path);
  std::string header;
  std::getline(f, header);
  CHECK(header == "6 12");
}

TEST_CASE("spectrum") {
  const auto su = json_of({"spectrum", "--family", "su", "--m", "4"});
  CHECK(su["spectrum"] == nlohmann::json::parse("[[32,1],[2,24],[-4,20]]"));
  CHECK(su["oracle"]["match"] == true);
  const auto wr = json_of({"spectrum", "--family", "wr3", "--n", "5"});
  CHECK(wr["spectrum"] == nlohmann::json::parse("[[20,1],[5,4],[-1,20],[-4,5]]"));
  CHECK(json_of({"spectrum", "--family", "frob9"})["spectrum"] == nlohmann::json::parse("[[8,1],[-1,8]]"));
  const char* path = "/tmp/fj_cli_sym4.grp";
  {
    std::ofstream f(path);
    f << "perm 4\ngen (1,2)\ngen (2,3)\ngen (3,4)\nseed (1,2)\n";
  }
  CHECK(run({"spectrum", "--file", path, "--row", "PR2a", "--h", "0", "--m", "4"}).code == 0);
  CHECK(run({"spectrum", "--file", path, "--row", "PR2a", "--h", "0", "--m", "5"}).code == 3);
}

TEST_CASE("jordan") {
  const auto om = json_of({"jordan", "--family", "omega3", "--m", "6", "--eps", "minus", "--eta", "1/2"});
  CHECK(om["jordan"]["verdict"] == true);
  CHECK(om["quotient_dim"] == 36);
  const auto wa = json_of({"jordan", "--family", "wralt4", "--n", "4", "--eta", "1/2"});
  CHECK(wa["jordan"]["verdict"] == false);
  CHECK(wa["jordan"]["counterexample"]["labels"].size() == 4);
  const auto s3 = json_of({"jordan", "--family", "sym", "--m", "3", "--eta", "2"});
  CHECK(s3["jordan"]["verdict"] == true);
  CHECK(s3["quotient_dim"] == 1);
  CHECK(run({"jordan", "--family", "sym", "--m", "3", "--eta", "0.5"}).code == 2);
  CHECK(run({"jordan", "--family", "sym", "--m", "3", "--eta", "1"}).code == 2);
}

TEST_CASE("jordan dump and determinism") {
  const char* path = "/tmp/fj_cli_dump.json";
  const std::vector<std::string> args = {"jordan", "--family", "sym", "--m", "4", "--dump", path, "--format", "json"};
  const auto a = run(args), b = run(args);
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
  ja.erase("timing");
  jb.erase("timing");
  CHECK(ja.dump() == jb.dump());
  std::ifstream f(path);
  const auto dump = nlohmann::json::parse(f);
  CHECK(dump["dim"] == 6);
  CHECK(dump["eta"] == "1/2");
  const auto t1 = run({"jordan", "--family", "sp", "--m", "3", "--threads", "1", "--format", "json"});
  const auto t2 = run({"jordan", "--family", "sp", "--m", "3", "--threads", "3", "--format", "json"});
  auto j1 = nlohmann::json::parse(t1.out), j2 = nlohmann::json::parse(t2.out);
  j1.erase("timing");
  j2.erase("timing");
  CHECK(j1 == j2);
}

TEST_CASE("formats") {
  const auto csv = run({"build", "--family", "sym", "--m", "3", "--format", "csv"});
  CHECK(csv.out.rfind("family,params", 0) == 0);
  const auto text = run({"build", "--family", "sym", "--m", "3"});
  CHECK(text.out.find("class size: 3") != std::string::npos);
  CHECK(run({"build", "--family", "sym", "--m", "3", "--format", "xml"}).code == 1);
  CHECK(run({}).code == 1);
}

TEST_CASE("theorem1 quick") {
  const auto r = run({"theorem1", "--scope", "quick"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Sp6(2)") != std::string::npos);
  const auto j = json_of({"theorem1", "--scope", "quick"});
  for (const auto& row : j) CHECK(row["ok"] == true);
  CHECK(run({"theorem1", "--scope", "huge"}).code == 2);
}

TEST_CASE("albert") {
  const auto r = run({"albert"});
  CHECK(r.code == 0);
  CHECK(r.out.find("|det| = 1/(2^78 * 3^36)") != std::string::npos);
  CHECK(r.out.find("4 primitive axes, eta = 1/2") != std::string::npos);
  CHECK(r.out.find("linearized Jordan identity: PASS") != std::string::npos);
}

TEST_CASE("report JSON round trip") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"jordan", "--family", "wralt4", "--n", "4"},
                                                                {"spectrum", "--family", "sp", "--m", "3"},
                                                                {"jordan", "--family", "sym", "--m", "4", "--eta", "3"}}) {
    const auto j = json_of(args);
    const auto r = RunReport::from_json(j);
    CHECK(r.to_json() == j);
  }
  CHECK_THROWS(RunReport::from_json(nlohmann::json::parse("{}")));
}

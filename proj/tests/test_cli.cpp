#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "demo.hpp"
#include "simpfib/report.hpp"

using namespace simpfib;
using nlohmann::json;

namespace {

std::filesystem::path const kRoot(SIMPFIB_SOURCE_DIR);

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(char const* name) { return (kRoot / "data" / name).string(); }

std::string slurp(std::filesystem::path const& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json without_timings(json j) {
  for (auto& r : j["records"]) r["millis"] = 0;
  return j;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("exit codes") {
  CHECK(run({"verify-ses", "--ses", data("z4.json"), "--max-dim", "3"}).code == kExitPass);
  CHECK(run({"verify-twist", "--group", "symmetric:3"}).code == kExitPass);
  CHECK(run({"verify-twist", "--group", "cyclic:4", "--which", "loop"}).code == kExitPass);
  CHECK(run({"verify-twist", "--group", "cyclic:4", "--inject-fault", "twist"}).code ==
        kExitFail);
  CHECK(run({"verify-twist", "--group", "cyclic:4", "--inject-fault", "face"}).code ==
        kExitFail);

  auto missing = run({"verify-ses", "--ses", data("missing.json")});
  CHECK(missing.code == kExitUsage);
  CHECK_FALSE(missing.err.empty());
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify-ses"}).code == kExitUsage);
  CHECK(run({"verify-twist", "--group", "quaternion:8"}).code == kExitUsage);
  CHECK(run({"verify-twist", "--group", "cyclic:4", "--max-dim", "9"}).code == kExitUsage);
  CHECK(run({"verify-twist", "--group", "cyclic:4", "--inject-fault", "face",
             "--max-dim", "1"})
            .code == kExitUsage);
  CHECK(run({"demo", "--example", "nope"}).code == kExitUsage);
  CHECK(run({"homology", "--group", "cyclic:2", "--space", "twisted"}).code ==
        kExitUsage);
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.code == kExitPass);
  CHECK(r.out.find("verify-ses") != std::string::npos);
}

TEST_CASE("a custom section file") {
  auto path = std::filesystem::temp_directory_path() / "simpfib_bad_section.json";
  std::ofstream(path) << "[2, 1]\n";
  auto r = run({"verify-ses", "--ses", data("z4.json"), "--section", path.string()});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("section.normalized") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("json reports") {
  auto r = run({"verify-ses", "--ses", data("s3_split.json"), "--format", "json"});
  REQUIRE(r.code == kExitPass);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == kReportSchema);
  CHECK(j["suite"] == "verify-ses");
  CHECK(j["status"] == "pass");
  CHECK(j["config"]["ses"] == "s3_split");
  CHECK(j["config"]["phi"] == true);
  for (auto const& rec : j["records"]) {
    CHECK(rec.contains("name"));
    CHECK(rec.contains("dimension"));
    CHECK(rec["status"] == "pass");
  }
  // round trip
  auto report = Report::from_json(j);
  CHECK(report.to_json() == j);
}

TEST_CASE("failures carry counterexamples in json") {
  auto r = run({"verify-twist", "--group", "cyclic:4", "--inject-fault", "twist",
                "--format", "json"});
  auto j = json::parse(r.out);
  CHECK(j["status"] == "fail");
  bool found = false;
  for (auto const& rec : j["records"]) {
    if (rec["status"] == "fail") {
      found = true;
      CHECK(rec["counterexample"].is_string());
    }
  }
  CHECK(found);
}

TEST_CASE("--out writes the report to a file") {
  auto path = std::filesystem::temp_directory_path() / "simpfib_report.json";
  auto r = run({"verify-twist", "--group", "cyclic:2", "--format", "json", "--out",
                path.string()});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  CHECK(json::parse(slurp(path))["status"] == "pass");
  std::filesystem::remove(path);
}

TEST_CASE("homology command") {
  auto text = run({"homology", "--group", "cyclic:4", "--max-dim", "4"});
  CHECK(text.code == kExitPass);
  CHECK(text.out.find("H_3 = Z/4") != std::string::npos);

  auto j = json::parse(run({"homology", "--ses", data("z4.json"), "--space", "twisted",
                            "--max-dim", "3", "--format", "json"})
                           .out);
  REQUIRE(j["config"]["homology"].size() == 3);
  CHECK(j["config"]["homology"][1]["group"] == "Z/4");
  CHECK(j["config"]["homology"][1]["torsion"][0] == "4");
}

TEST_CASE("demo output matches the golden files") {
  CHECK(run({"demo", "--example", "z4", "--dim", "2"}).out ==
        slurp(kRoot / "tests/golden/demo_z4_dim2.txt"));
  CHECK(run({"demo", "--example", "s3", "--dim", "2"}).out ==
        slurp(kRoot / "tests/golden/demo_s3_dim2.txt"));
  CHECK(demo_text("z4", 2) == slurp(kRoot / "tests/golden/demo_z4_dim2.txt"));
}

TEST_CASE("demo in other dimensions") {
  for (int dim = 1; dim <= 4; ++dim) {
    CHECK_NOTHROW(demo_text("z4", dim));
    CHECK_NOTHROW(demo_text("s3", dim));
  }
  CHECK_THROWS_AS(demo_text("z4", 5), std::invalid_argument);
  auto list = run({"demo", "--list"});
  CHECK(list.out.find("z4") != std::string::npos);
  CHECK(list.out.find("s3") != std::string::npos);
}

TEST_CASE("verify-ses json matches the golden report") {
  auto r = run({"verify-ses", "--ses", data("z4.json"), "--max-dim", "2", "--format",
                "json"});
  auto golden = json::parse(slurp(kRoot / "tests/golden/verify_z4_dim2.json"));
  CHECK(without_timings(json::parse(r.out)) == golden);
}

TEST_CASE("results do not depend on the worker count") {
  auto one = run({"verify-ses", "--ses", data("z4.json"), "--format", "json", "--jobs", "1"});
  auto many = run({"verify-ses", "--ses", data("z4.json"), "--format", "json", "--jobs", "4"});
  CHECK(without_timings(json::parse(one.out)) == without_timings(json::parse(many.out)));
}

}

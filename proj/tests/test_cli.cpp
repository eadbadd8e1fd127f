#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cwlab/cli.hpp"
#include "cwlab/high_precision.hpp"
#include "cwlab/rational.hpp"

using namespace cwlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(CWLAB_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("golden outputs") {
    CHECK(run({"summatory", "--a", "2", "--alpha", "0", "--x", "10", "--mode", "both"}).out ==
          golden("summatory_both.csv"));
    CHECK(run({"pairs", "--word", "BA^2", "--seed", "13/84,55/84"}).out == golden("pairs_ba2.csv"));
    CHECK(run({"pairs", "--word", "BA", "--case", "2"}).out == golden("pairs_ba_case2.csv"));
    CHECK(run({"divisor", "--n", "36"}).out == golden("divisor_36.csv"));
    CHECK(run({"bw", "--n", "3", "--x", "16"}).out == golden("bw_16.csv"));
  }

  TEST_CASE("involution from the shell") {
    const Run r = run({"pairs", "--word", "BB", "--seed", "13/84,55/84"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("13/84,55/84,13/84,55/84") != std::string::npos);
  }

  TEST_CASE("exit codes and error prefix") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"summatory", "--a", "1", "--x", "10"},
             {"summatory", "--x", "ten"},
             {"gsum", "--j", "1", "--alpha", "-1", "--x", "10"},
             {"pairs", "--word", "BX"},
             {"fit", "--grid", "10:1:5"},
             {"nosuch"},
             {"summatory", "--x", "10", "--mode", "sideways"},
             {}}) {
      const Run r = run(args);
      CHECK(r.code == kExitInvalidInput);
      CHECK(r.err.rfind("error:", 0) == 0);
    }
    CHECK(run({"summatory", "--x", "200000000", "--mode", "brute"}).code == kExitInvalidInput);
  }

  TEST_CASE("help lists the columns") {
    const Run r = run({"--help"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("term_main") != std::string::npos);
  }

  TEST_CASE("json values round-trip") {
    const Run r = run({"--format", "json", "gsum", "--a", "2", "--alpha", "1", "--j", "2", "--x", "123456789"});
    REQUIRE(r.code == kExitOk);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["command"] == "gsum");
    const std::string v = doc["rows"][0]["value"];
    CHECK(format_hp(parse_hp(v)) == v);

    const Run s = run({"--format", "json", "asympt", "--alpha", "1", "--x", "1e6"});
    REQUIRE(s.code == kExitOk);
    const auto row = nlohmann::ordered_json::parse(s.out)["rows"][0];
    CHECK(Rational::parse(row["theta"].get<std::string>()) == Rational::parse("1341/1648"));
    const std::string value = row["value"];
    CHECK(format_hp(parse_hp(value)) == value);
  }

  TEST_CASE("output file") {
    const auto path = std::filesystem::temp_directory_path() / "cwlab_cli_test.csv";
    std::filesystem::remove(path);
    const Run r = run({"--out", path.string(), "summatory", "--x", "10"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("command,x,a,alpha", 0) == 0);
    std::filesystem::remove(path);
  }

  TEST_CASE("fit on a short grid") {
    const Run r = run({"fit", "--a", "2", "--alpha", "1", "--grid", "10000:2:5"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("slope") != std::string::npos);
  }
}

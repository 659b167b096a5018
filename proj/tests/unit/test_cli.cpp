#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

#include <unistd.h>

#include "cuspbif/exprparse.hpp"
#include "cuspbif/report_io.hpp"
#include "cuspbif_cli/cli.hpp"
#include "families.hpp"

using namespace cuspbif;
using cli::run_cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cuspbif");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string row(const std::string& label, const std::string& value) {
  std::ostringstream s;
  s << "  " << std::left << std::setw(34) << label << value << '\n';
  return s.str();
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("cuspbif_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path) << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("example 1 as JSON") {
    const auto r = invoke({"analyze", "--f1", testing::kExample1.f1, "--f2", testing::kExample1.f2, "--json"});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.err.empty());
    const auto report = report_from_json(r.out);
    CHECK(report.sigma == SigmaCounts{0, 1, 0, 3});
    CHECK(report.cusp_deg_pos_t == -1);
    CHECK(report.cusp_deg_neg_t == -3);
    CHECK(report.f1 == parse_poly(testing::kExample1.f1).to_string());
  }

  TEST_CASE("example 2 as text") {
    const auto r = invoke({"analyze", "--f1", testing::kExample2.f1, "--f2", testing::kExample2.f2});
    REQUIRE(r.code == cli::kExitOk);
    CHECK(r.out.find(row("#S_t+, #S_t-", "0, 1")) != std::string::npos);
    CHECK(r.out.find(row("#S_-t+, #S_-t-", "0, 1")) != std::string::npos);
  }

  TEST_CASE("hypothesis failure exits with 2") {
    const auto r = invoke({"analyze", "--f1", "x1", "--f2", "x2"});
    CHECK(r.code == cli::kExitHypothesis);
    CHECK(r.out.empty());
    CHECK(r.err.find("J(0)") != std::string::npos);
    CHECK(r.err.find("JNotVanishing") != std::string::npos);
  }

  TEST_CASE("usage errors exit with 1") {
    auto r = invoke({"analyze", "--f1", "x1^3+", "--f2", "x1*x2"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("f1") != std::string::npos);
    CHECK(r.err.find("position") != std::string::npos);

    r = invoke({"analyze", "--f1", "x1^3"});
    CHECK(r.code == cli::kExitUsage);
    CHECK(r.err.find("required") != std::string::npos);

    CHECK(invoke({"analyze", "--f1", "x1", "--f2", "x2", "--bogus"}).code == cli::kExitUsage);
    CHECK(invoke({"analyze", "--f1", "x1", "--f2", "x2", "--seed", "many"}).code == cli::kExitUsage);
    CHECK(invoke({"analyze", "--input", "/nonexistent/cuspbif/input.txt"}).code == cli::kExitUsage);
    CHECK(invoke({"analyze", "--f1", "x1*y", "--f2", "x2"}).code == cli::kExitUsage);
  }

  TEST_CASE("help") {
    const auto r = invoke({"--help"});
    CHECK(r.code == cli::kExitOk);
    CHECK(r.out.find("analyze") != std::string::npos);
    const auto sub = invoke({"analyze", "--help"});
    CHECK(sub.code == cli::kExitOk);
    CHECK(sub.out.find("--f1") != std::string::npos);
  }

  TEST_CASE("input file") {
    const TempFile file("# example 1\nf1 = x1^3+x2^2+t*x1\n\nf2 = x1*x2\nseed = 5\n");
    const auto r = invoke({"analyze", "--input", file.path.string(), "--json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto report = report_from_json(r.out);
    CHECK(report.sigma == SigmaCounts{0, 1, 0, 3});
    CHECK(report.seed == 5);

    const auto over = invoke({"analyze", "--input", file.path.string(), "--seed", "8", "--json"});
    REQUIRE(over.code == cli::kExitOk);
    CHECK(report_from_json(over.out).seed == 8);

    const auto swapped = invoke({"analyze", "--input", file.path.string(), "--f1", "x1^3+x2^2-t*x1", "--json"});
    REQUIRE(swapped.code == cli::kExitOk);
    CHECK(report_from_json(swapped.out).sigma == SigmaCounts{0, 3, 0, 1});

    const TempFile bad("f1 = x1\ncolour = red\n");
    const auto b = invoke({"analyze", "--input", bad.path.string()});
    CHECK(b.code == cli::kExitUsage);
    CHECK(b.err.find("line 2") != std::string::npos);
  }

  TEST_CASE("output is reproducible") {
    const std::vector<std::string> args{"analyze", "--f1", testing::kExample1.f1, "--f2", testing::kExample1.f2,
                                        "--json", "--seed", "3"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    CHECK(a.code == cli::kExitOk);
    CHECK(a.out == b.out);
  }

  TEST_CASE("input file parser") {
    const auto f = cli::parse_input_file("  f1 =  x1^2 + t  \n# comment\n\r\nf2=x2\nseed=12\n");
    CHECK(*f.f1 == "x1^2 + t");
    CHECK(*f.f2 == "x2");
    CHECK(*f.seed == 12);
    CHECK_FALSE(cli::parse_input_file("").f1.has_value());
    CHECK_THROWS_AS(cli::parse_input_file("f1 x1\n"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_input_file("seed = -1\n"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_input_file("seed = 1x\n"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_input_file("f3 = x1\n"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_input_file("f1 = x1\nf1 = x2\n"), std::invalid_argument);
  }
}

#include <doctest.h>

#include "cuspbif/errors.hpp"
#include "cuspbif/exprparse.hpp"
#include "cuspbif/report_io.hpp"
#include "families.hpp"
#include "json.hpp"

using namespace cuspbif;

namespace {

BifurcationReport synthetic() {
  BifurcationReport r;
  r.f1 = "x1^3";
  r.f2 = "x2^3";
  r.seed = 77;
  r.J = "9*x1^2*x2^2";
  r.hypotheses.dim_t_f1_f2 = QuotientDim::finite(9);
  r.hypotheses.J_vanishes = true;
  r.d2 = {-3, 7, 2, 5};
  r.deg_d2 = -3;
  r.combination.matrix = {{{1, -2, 0}, {0, 1, 3}, {4, 0, 1}}};
  r.combination.curve_dim = "INFINITE";
  r.branch = {3, 4, 1, -1, 2, 10, 12};
  r.sigma = {1, 2, 3, 4};
  r.symmetry_ok = false;
  return r;
}

ErrorKind kind_of(std::string_view text) {
  try {
    report_from_json(text);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("report_io") {
  TEST_CASE("round trip of a synthetic report") {
    const auto r = synthetic();
    const std::string text = report_to_json(r);
    CHECK(report_from_json(text) == r);
    CHECK(report_from_json(report_to_json(r, -1)) == r);

    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("schema") == kReportSchemaVersion);
    CHECK(j.at("hypotheses").at("dim_t_f1_f2") == 9);
    CHECK(j.at("hypotheses").at("dim_Q") == "INFINITE");
    CHECK(j.at("sigma") == nlohmann::json::array({1, 2, 3, 4}));
    CHECK(j.at("branch").at("dim_H_minus") == 12);
  }

  TEST_CASE("round trip of a computed report") {
    const auto r = run(parse_poly(testing::kExample1.f1), parse_poly(testing::kExample1.f2));
    const auto back = report_from_json(report_to_json(r));
    CHECK(back == r);
    CHECK(report_to_json(back) == report_to_json(r));
  }

  TEST_CASE("malformed input") {
    CHECK(kind_of("") == ErrorKind::InvalidArgument);
    CHECK(kind_of("{") == ErrorKind::InvalidArgument);
    CHECK(kind_of("[]") == ErrorKind::InvalidArgument);
    CHECK(kind_of("{\"schema\": 1}") == ErrorKind::InvalidArgument);

    auto j = nlohmann::json::parse(report_to_json(synthetic()));
    j["schema"] = 2;
    CHECK(kind_of(j.dump()) == ErrorKind::InvalidArgument);
    j["schema"] = 1;
    j["hypotheses"]["dim_Q"] = "many";
    CHECK(kind_of(j.dump()) == ErrorKind::InvalidArgument);
    j["hypotheses"]["dim_Q"] = 3;
    j["b0"] = "four";
    CHECK(kind_of(j.dump()) == ErrorKind::InvalidArgument);
  }

  TEST_CASE("text table") {
    const auto r = synthetic();
    const std::string text = report_to_text(r);
    CHECK(text.find("dim O3/<t, f1, f2>") != std::string::npos);
    CHECK(text.find("INFINITE") != std::string::npos);
    CHECK(text.find("random matrix") != std::string::npos);
    CHECK(text.find("[1 -2 0]") != std::string::npos);
    CHECK(text.find("#S_t+, #S_t-") != std::string::npos);
    CHECK(text.find("t -> -t symmetry check") == std::string::npos);

    auto s = r;
    s.symmetry_detected = true;
    CHECK(report_to_text(s).find("FAILED") != std::string::npos);
  }
}

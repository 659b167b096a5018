#include <doctest.h>

#include <functional>

#include "cuspbif/cusp_pipeline.hpp"
#include "cuspbif/errors.hpp"
#include "cuspbif/exprparse.hpp"
#include "cuspbif/report_io.hpp"
#include "families.hpp"
#include "numeric.hpp"

using namespace cuspbif;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

const Error* catch_error(const std::function<void()>& fn, std::string& message) {
  static thread_local Error last(ErrorKind::Parse, "");
  try {
    fn();
  } catch (const Error& e) {
    last = e;
    message = e.what();
    return &last;
  }
  return nullptr;
}

std::size_t staircase_count(const LocalIdeal& ideal) {
  return testing::count_standard_monomials(ideal.lead_monomials(), 3, 40).value();
}

}  // namespace

TEST_SUITE("cusp_pipeline") {
  TEST_CASE("derived germs of example 1") {
    const auto d = derive(P(testing::kExample1.f1), P(testing::kExample1.f2));
    CHECK(d.J == P("3*x1^3 + t*x1 - 2*x2^2"));
    CHECK(d.F1 == jacobian2(d.f1, d.J, kX1, kX2));
    CHECK(d.F2 == jacobian2(d.f2, d.J, kX1, kX2));
    CHECK(d.d1.size() == 3);
    CHECK(d.d1[0] == P("x1"));
    CHECK(d.d2[0] == d.J);
    CHECK(d.f0[0] == set_t_zero(d.f1));
  }

  TEST_CASE("derive rejects bad families") {
    std::string msg;
    const Error* e = catch_error([] { derive(P("x1"), P("x2")); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::JNotVanishing);
    CHECK(msg.find("J(0)") != std::string::npos);

    e = catch_error([] { derive(P("x1 + 1"), P("x2^2")); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::OriginNotMapped);

    e = catch_error([] { derive(parse_poly(ExprSource{"x1^2", {"x1", "x2"}}), P("x2")); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::InvalidArgument);
  }

  TEST_CASE("example 2: <t, F1, F2> has codimension 24") {
    const auto d = derive(P(testing::kExample2.f1), P(testing::kExample2.f2));
    CHECK(LocalIdeal({P("t"), d.F1, d.F2}).quotient_dim() == QuotientDim::finite(24));
  }

  TEST_CASE("hypotheses of example 1") {
    const auto d = derive(P(testing::kExample1.f1), P(testing::kExample1.f2));
    const auto h = verify_hypotheses(d);
    CHECK(h.ok());
    CHECK(h.dim_t_f1_f2 == QuotientDim::finite(5));
    CHECK(h.dim_t_F1_F2 == QuotientDim::finite(7));
    CHECK(h.dim_t_gradJ == QuotientDim::finite(2));
    CHECK(h.dim_I_prime == QuotientDim::finite(8));
    CHECK(h.dim_d1_ideal == QuotientDim::finite(1));
    CHECK(h.dim_d2_ideal == QuotientDim::finite(3));
    CHECK(h.dim_I_dblprime == QuotientDim::finite(8));
    CHECK(h.dim_Q == QuotientDim::finite(staircase_count(d.Q_ideal)));
  }

  TEST_CASE("hypotheses of example 2") {
    const auto d = derive(P(testing::kExample2.f1), P(testing::kExample2.f2));
    const auto h = verify_hypotheses(d);
    CHECK(h.dim_t_f1_f2 == QuotientDim::finite(8));
    CHECK(h.dim_t_F1_F2 == QuotientDim::finite(24));
    CHECK(h.dim_t_gradJ == QuotientDim::finite(9));
    CHECK(h.dim_I_prime == QuotientDim::finite(33));
    CHECK(h.dim_d1_ideal == QuotientDim::finite(3));
    CHECK(h.dim_d2_ideal == QuotientDim::finite(12));
    CHECK(h.dim_I_dblprime == QuotientDim::finite(45));
    CHECK(h.dim_Q == QuotientDim::finite(staircase_count(d.Q_ideal)));
  }

  TEST_CASE("a germ with non-isolated critical points fails the hypotheses") {
    const auto d = derive(P("x1^3"), P("x2^3"));
    CHECK(d.J == P("9*x1^2*x2^2"));
    const auto h = compute_hypotheses(d);
    CHECK(h.dim_t_f1_f2 == QuotientDim::finite(9));
    CHECK_FALSE(h.dim_t_gradJ.is_finite());
    CHECK_FALSE(h.ok());
    CHECK(h.first_failure() == "dim O3/<t, F1, F2>");
    std::string msg;
    const Error* e = catch_error([&] { verify_hypotheses(d); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::HypothesisFailed);
    CHECK(is_hypothesis_failure(e->kind()));
  }

  TEST_CASE("cusp degree formula") {
    CHECK(cusp_degree(-1, 1, -1, 1) == -1);
    CHECK(cusp_degree(-1, 1, -1, -1) == -3);
    CHECK(cusp_degree(0, 1, 0, 1) == -1);
    CHECK(cusp_degree(0, 1, 0, -1) == -1);
    CHECK(cusp_degree(0, 0, 0, 1) == 0);
    CHECK_THROWS_AS(cusp_degree(0, 0, 0, 0), Error);
  }

  TEST_CASE("cusp counts") {
    CHECK(solve_sigma(4, 2, -1, 1, -1) == SigmaCounts{0, 1, 0, 3});
    CHECK(solve_sigma(2, 2, 0, 1, 0) == SigmaCounts{0, 1, 0, 1});
    CHECK(solve_sigma(0, 0, 0, 0, 0) == SigmaCounts{0, 0, 0, 0});
    std::string msg;
    const Error* e = catch_error([] { solve_sigma(1, 0, 0, 0, 0); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::InconsistentSystem);
    CHECK(catch_error([] { solve_sigma(4, 3, -1, 1, -1); }, msg) != nullptr);
    CHECK(catch_error([] { solve_sigma(2, 6, 0, 0, 0); }, msg) != nullptr);
    // |degree| larger than the number of cusps.
    CHECK(catch_error([] { solve_sigma(2, 2, 3, 0, 0); }, msg) != nullptr);
  }

  TEST_CASE("Euler characteristic extras") {
    CHECK(euler_extras(0, 1, -1, 1) == EulerExtras{1, 2});
    CHECK(euler_extras(1, 1, 0, 1) == EulerExtras{0, 0});
    CHECK(euler_extras(1, 1, 0, -1) == EulerExtras{0, 0});
    CHECK(euler_extras(0, 0, 0, 1) == EulerExtras{1, 2});
    std::string msg;
    const Error* e = catch_error([] { euler_extras(1, 0, 0, 1); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::ParityViolation);
  }

  TEST_CASE("t symmetry detection") {
    CHECK(has_t_symmetry(P(testing::kExample2.f1), P(testing::kExample2.f2)));
    CHECK_FALSE(has_t_symmetry(P(testing::kExample1.f1), P(testing::kExample1.f2)));
    CHECK(has_t_symmetry(P("x1"), P("x2^3+x1^2*x2+t^2*x2")));
    CHECK_FALSE(has_t_symmetry(P("x1"), P("x2^2+t*x1")));
  }

  TEST_CASE("degree at the origin of maps that need not vanish there") {
    CHECK(degree_at_origin({P("1+x1"), P("x1"), P("x2")}) == DegreeSummary{});
    const auto s = degree_at_origin({P("t"), P("x1^2-x2^2"), P("2*x1*x2")});
    CHECK(s.degree == 2);
    CHECK(s.algebra_dim == 4);
  }

  TEST_CASE("example 1 end to end") {
    const auto r = run(P(testing::kExample1.f1), P(testing::kExample1.f2));
    CHECK(r.hypotheses.ok());
    CHECK(r.deg_f0 == -1);
    CHECK(r.deg_d0 == 0);
    CHECK(r.deg_d1 == 1);
    CHECK(r.deg_d2 == -1);
    CHECK(r.cusp_deg_pos_t == -1);
    CHECK(r.cusp_deg_neg_t == -3);
    CHECK(r.combination.identity_choice);
    CHECK(r.branch == BranchCount{2, 4, 2, -2, 4, r.branch.dim_H_plus, r.branch.dim_H_minus});
    CHECK(r.branch_positive.deg_H_plus == 1);
    CHECK(r.branch_positive.deg_H_minus == -1);
    CHECK(r.b0 == 4);
    CHECK(r.b0_prime == 2);
    CHECK(r.sigma == SigmaCounts{0, 1, 0, 3});
    CHECK(r.chi_M_pos_t == 1);
    CHECK(r.L0_count == 2);
    CHECK(r.parity_ok);
    CHECK_FALSE(r.symmetry_detected);
  }

  TEST_CASE("example 2 end to end") {
    const auto r = run(P(testing::kExample2.f1), P(testing::kExample2.f2));
    CHECK(r.deg_f0 == 0);
    CHECK(r.deg_d1 == 1);
    CHECK(r.deg_d2 == 0);
    CHECK(r.cusp_deg_pos_t == -1);
    CHECK(r.cusp_deg_neg_t == -1);
    CHECK(r.branch.xi == 2);
    CHECK(r.branch.k == 4);
    CHECK(r.branch.deg_H_plus == 0);
    CHECK(r.branch.deg_H_minus == -2);
    CHECK(r.b0 == 2);
    CHECK(r.b0_prime == 2);
    CHECK(r.sigma == SigmaCounts{0, 1, 0, 1});
    CHECK(r.parity_ok);
    CHECK(r.symmetry_detected);
    CHECK(r.symmetry_ok);
  }

  TEST_CASE("errors carry the stage name") {
    std::string msg;
    const Error* e = catch_error([] { run(P("x1"), P("x2")); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::JNotVanishing);
    CHECK(msg.rfind("derive: ", 0) == 0);
    e = catch_error([] { run(P("x1^3"), P("x2^3")); }, msg);
    REQUIRE(e != nullptr);
    CHECK(e->kind() == ErrorKind::HypothesisFailed);
    CHECK(msg.rfind("hypotheses: ", 0) == 0);
  }

  TEST_CASE("identical input gives identical reports") {
    const auto a = run(P(testing::kExample1.f1), P(testing::kExample1.f2), {.seed = 9});
    const auto b = run(P(testing::kExample1.f1), P(testing::kExample1.f2), {.seed = 9});
    CHECK(a == b);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(a.seed == 9);
  }
}

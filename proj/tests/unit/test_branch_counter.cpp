#include <doctest.h>

#include <functional>

#include "cuspbif/branch_counter.hpp"
#include "cuspbif/cusp_pipeline.hpp"
#include "cuspbif/errors.hpp"
#include "cuspbif/exprparse.hpp"
#include "families.hpp"

using namespace cuspbif;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

GenericCombination identity_for(const testing::Family& f) {
  const auto d = derive(P(f.f1), P(f.f2));
  return choose_combination(d.J, d.F1, d.F2, 0);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_SUITE("branch_counter") {
  TEST_CASE("perturbation exponent") {
    CHECK(perturbation_exponent(0) == 2);
    CHECK(perturbation_exponent(1) == 2);
    CHECK(perturbation_exponent(2) == 4);
    CHECK(perturbation_exponent(3) == 4);
    CHECK(perturbation_exponent(8) == 10);
  }

  TEST_CASE("identity combination for the examples") {
    for (const auto* f : {&testing::kExample1, &testing::kExample2}) {
      const auto d = derive(P(f->f1), P(f->f2));
      const auto c = choose_combination(d.J, d.F1, d.F2, 0);
      CHECK(c.verified);
      CHECK(c.identity_choice);
      CHECK(c.attempts == 1);
      CHECK(c.g1 == d.F1);
      CHECK(c.g2 == d.F2);
      CHECK(c.g3 == d.J);
      CHECK(c.curve_dim == d.I_dblprime.quotient_dim());
    }
    const auto d1 = derive(P(testing::kExample1.f1), P(testing::kExample1.f2));
    CHECK(curve_criterion_ideal(d1.F1, d1.F2).quotient_dim() == QuotientDim::finite(8));
  }

  TEST_CASE("smooth curve transverse to t = 0 is accepted as is") {
    const auto c = choose_combination(P("x1^2"), P("x1"), P("x2+x1*t"), 3);
    CHECK(c.identity_choice);
    CHECK(c.t_slice_dim == QuotientDim::finite(1));
  }

  TEST_CASE("random combinations") {
    const auto d = derive(P(testing::kExample1.f1), P(testing::kExample1.f2));
    const auto a = choose_combination(d.J, d.F1, d.F2, 5, 32, false);
    const auto b = choose_combination(d.J, d.F1, d.F2, 5, 32, false);
    const auto c = choose_combination(d.J, d.F1, d.F2, 6, 32, false);
    CHECK(a.verified);
    CHECK_FALSE(a.identity_choice);
    CHECK(a.matrix == b.matrix);
    CHECK(a.matrix != c.matrix);
    const Poly* w[3] = {&d.J, &d.F1, &d.F2};
    Poly g1(Ambient::tx());
    for (int j = 0; j < 3; ++j) g1 += *w[j] * Rational(a.matrix[0][j]);
    CHECK(g1 == a.g1);
    for (const auto& row : a.matrix) {
      for (int v : row) CHECK(std::abs(v) <= kMatrixEntryBound);
    }
  }

  TEST_CASE("no combination for a triple without a curve") {
    CHECK(kind_of([] { choose_combination(P("t"), P("2*t"), P("3*t"), 0, 4); }) ==
          ErrorKind::NoGenericCombinationFound);
    CHECK(kind_of([] { choose_combination(P("t+1"), P("x1"), P("x2"), 0); }) == ErrorKind::OriginNotMapped);
  }

  TEST_CASE("xi") {
    CHECK(compute_xi(P("x1"), P("x2"), P("x1")) == 0);
    CHECK(compute_xi(P("x1"), P("x2"), P("t^2")) == 2);
    const auto c1 = identity_for(testing::kExample1);
    CHECK(compute_xi(c1.g1, c1.g2, c1.g3) == 2);
    CHECK(kind_of([&] { compute_xi(c1.g1, c1.g2, c1.g3, 1); }) == ErrorKind::XiSearchExceededBound);
    const auto c2 = identity_for(testing::kExample2);
    CHECK(compute_xi(c2.g1, c2.g2, c2.g3) == 2);
  }

  TEST_CASE("xi after t -> t^2 is twice xi") {
    auto check = [](const GenericCombination& c) {
      const unsigned xi = compute_xi(c.g1, c.g2, c.g3);
      for (int sign : {1, -1}) {
        const Poly s = P("t^2") * Rational(sign);
        const unsigned sub =
            compute_xi(substitute(c.g1, kT, s), substitute(c.g2, kT, s), substitute(c.g3, kT, s), 2 * xi + 2);
        CHECK(sub == 2 * xi);
      }
    };
    check(identity_for(testing::kExample1));
    check(identity_for(testing::kExample2));
    for (const auto& f : testing::crafted_families()) check(identity_for(f));
  }

  TEST_CASE("H germs") {
    const MapGerm hp = build_H(P("x1"), P("x2"), P("t^2"), 4, 1);
    const MapGerm hm = build_H(P("x1"), P("x2"), P("t^2"), 4, -1);
    CHECK(hp[0] == P("2*t + 4*t^3"));
    CHECK(hm[0] == P("2*t - 4*t^3"));
    CHECK(hp[1] == P("x1"));
    CHECK(hp[2] == P("x2"));
    CHECK(h_first_component(P("x1"), P("x2"), P("t"), 2, 1) == P("1 + 2*t"));
  }

  TEST_CASE("example 1 branch count") {
    const auto c = identity_for(testing::kExample1);
    const auto b = count_branches(c.g1, c.g2, c.g3);
    CHECK(b.xi == 2);
    CHECK(b.k == 4);
    CHECK(b.deg_H_plus == 2);
    CHECK(b.deg_H_minus == -2);
    CHECK(b.b0 == 4);
    const auto p = count_branches_positive_t(c.g1, c.g2, c.g3);
    CHECK(p.xi == 4);
    CHECK(p.k == 6);
    CHECK(p.deg_H_plus == 1);
    CHECK(p.deg_H_minus == -1);
    CHECK(p.b0 == 2);
    const auto n = count_branches_negative_t(c.g1, c.g2, c.g3);
    CHECK(n.b0 % 2 == 0);
    CHECK(p.b0 / 2 + n.b0 / 2 == b.b0);
  }

  TEST_CASE("example 2 branch count") {
    const auto c = identity_for(testing::kExample2);
    const auto b = count_branches(c.g1, c.g2, c.g3);
    CHECK(b.xi == 2);
    CHECK(b.k == 4);
    CHECK(b.deg_H_plus == 0);
    CHECK(b.deg_H_minus == -2);
    CHECK(b.b0 == 2);
    const auto p = count_branches_positive_t(c.g1, c.g2, c.g3);
    CHECK(p.b0 == 2);
  }

  TEST_CASE("the t-axis") {
    const auto b = count_branches(P("x1"), P("x2"), P("x1"));
    CHECK(b.xi == 0);
    CHECK(b.k == 2);
    CHECK(b.deg_H_plus == 1);
    CHECK(b.deg_H_minus == -1);
    CHECK(b.b0 == 2);
    CHECK(count_branches_positive_t(P("x1"), P("x2"), P("x1")).b0 == 2);
    CHECK(count_branches_negative_t(P("x1"), P("x2"), P("x1")).b0 == 2);
    // With g3 = t the zero set is the origin alone.
    const auto only_origin = count_branches(P("x1"), P("x2"), P("t"));
    CHECK(only_origin.b0 == 0);
    CHECK(only_origin.dim_H_plus == 0);
  }

  TEST_CASE("perturbation exponent override") {
    const auto c = identity_for(testing::kExample1);
    CHECK(count_branches(c.g1, c.g2, c.g3, {.k = 6}).b0 == 4);
    CHECK(count_branches(c.g1, c.g2, c.g3, {.k = 6}).k == 6);
    CHECK(kind_of([&] { count_branches(c.g1, c.g2, c.g3, {.k = 5}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { count_branches(c.g1, c.g2, c.g3, {.k = 2}); }) == ErrorKind::InvalidArgument);
  }
}

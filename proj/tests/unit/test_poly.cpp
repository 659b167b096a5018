#include <doctest.h>

#include <random>

#include "cuspbif/errors.hpp"
#include "cuspbif/exprparse.hpp"
#include "cuspbif/poly.hpp"

using namespace cuspbif;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly random_poly(std::mt19937_64& rng, unsigned max_deg, std::size_t terms) {
  std::vector<Term> out;
  for (std::size_t i = 0; i < terms; ++i) {
    Monomial m{static_cast<unsigned>(rng() % (max_deg + 1)), static_cast<unsigned>(rng() % (max_deg + 1)),
               static_cast<unsigned>(rng() % (max_deg + 1))};
    out.push_back({m, Rational(static_cast<long>(rng() % 19) - 9, static_cast<long>(rng() % 4) + 1)});
  }
  return Poly::from_terms(Ambient::tx(), std::move(out));
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("partial derivatives") {
    CHECK(partial(P("x1^3+x2^2+t*x1"), kX1) == P("3*x1^2+t"));
    CHECK(partial(P("x1*x2"), kT).is_zero());
    CHECK(partial(P("x1^3+x2^2+t*x1"), kX2) == P("2*x2"));
  }

  TEST_CASE("jacobian2") {
    CHECK(jacobian2(P("x1"), P("x2"), kX1, kX2) == P("1"));
    CHECK(jacobian2(P("x1^3+x2^2+t*x1"), P("x1*x2"), kX1, kX2) == P("3*x1^3+t*x1-2*x2^2"));
    const Poly q = P("t*x1^2 - 5*x2^3 + x1*x2");
    CHECK(jacobian2(q, q, kX1, kX2).is_zero());
    CHECK(jacobian2(q, q, kT, kX2).is_zero());
  }

  TEST_CASE("jacobian3_det") {
    CHECK(jacobian3_det(MapGerm({P("t"), P("x1"), P("x2")})) == P("1"));
    CHECK(jacobian3_det(MapGerm({P("t^2"), P("x1"), P("x2")})) == P("2*t"));
    CHECK(jacobian3_det(MapGerm({P("t+x1"), P("x1"), P("x2")})) == P("1"));
    // Swapping two components flips the sign.
    CHECK(jacobian3_det(MapGerm({P("x1"), P("t^2"), P("x2")})) == P("-2*t"));
  }

  TEST_CASE("jacobian_det in two variables") {
    const Ambient x = Ambient::x();
    const Poly u = parse_poly(ExprSource{"x1^2-x2^2", {"x1", "x2"}});
    const Poly v = parse_poly(ExprSource{"2*x1*x2", {"x1", "x2"}});
    CHECK(u.ambient() == x);
    CHECK(jacobian_det(MapGerm({u, v})) == parse_poly(ExprSource{"4*x1^2+4*x2^2", {"x1", "x2"}}));
  }

  TEST_CASE("substitute_t_squared") {
    CHECK(substitute_t_squared(P("t*x1+x2^2")) == P("t^2*x1+x2^2"));
    CHECK(substitute_t_squared(P("x1*x2")) == P("x1*x2"));
    CHECK(substitute_t_squared(P("t^3")) == P("t^6"));
  }

  TEST_CASE("set_t_zero") {
    const Poly a = set_t_zero(P("x1^3+x2^2+t*x1"));
    CHECK(a.ambient() == Ambient::x());
    CHECK(a == parse_poly(ExprSource{"x1^3+x2^2", {"x1", "x2"}}));
    CHECK(set_t_zero(P("t^2")).is_zero());
    CHECK(set_t_zero(P("x1*x2")) == parse_poly(ExprSource{"x1*x2", {"x1", "x2"}}));
  }

  TEST_CASE("substitute a polynomial") {
    CHECK(substitute(P("t*x1 + t^2"), kT, P("x1+x2")) == P("x1^2+x1*x2+x1^2+2*x1*x2+x2^2"));
    CHECK(substitute(P("x1*x2"), kT, P("x1")) == P("x1*x2"));
    CHECK(substitute(P("t^2*x1"), kT, P("-t^2")) == P("t^4*x1"));
  }

  TEST_CASE("local ordering") {
    CHECK(LocalOrdering::compare(Monomial{0, 0, 0}, Monomial{1, 0, 0}) > 0);
    CHECK(LocalOrdering::compare(Monomial{0, 2, 0}, Monomial{1, 1, 1}) > 0);
    // Equal degree: the smaller exponent of the last variable wins.
    CHECK(LocalOrdering::greater(Monomial{0, 2, 0}, Monomial{0, 1, 1}));
    CHECK(LocalOrdering::greater(Monomial{1, 1, 0}, Monomial{0, 1, 1}));
    CHECK(LocalOrdering::greater(Monomial{1, 0, 0}, Monomial{0, 1, 0}));
    CHECK(LocalOrdering::compare(Monomial{1, 1, 1}, Monomial{1, 1, 1}) == 0);
  }

  TEST_CASE("leading term is the lowest-degree term") {
    const Poly p = P("x1^3 + 7*x2^2 - t*x1");
    CHECK(p.leading_term().mono == Monomial{1, 1, 0});
    CHECK(p.leading_term().coeff == -1);
    CHECK(P("x1^3 + 7*x2^2").leading_term().coeff == 7);
    CHECK(p.order() == 2);
    CHECK(p.total_degree() == 3);
    CHECK(Poly(Ambient::tx()).total_degree() == -1);
  }

  TEST_CASE("canonical form") {
    CHECK(Poly::from_terms(Ambient::tx(), {{Monomial{0, 0, 1}, Rational(-6, 4)}}) == P("-3/2*x2"));
    CHECK(Poly::monomial(Ambient::tx(), Monomial{0, 0, 1}, Rational(4, 2)) == P("2*x2"));
    std::vector<Term> t{{Monomial{0, 1, 0}, 2}, {Monomial{0, 1, 0}, -2}, {Monomial{1, 0, 0}, Rational(1, 2)}};
    const Poly p = Poly::from_terms(Ambient::tx(), t);
    CHECK(p.size() == 1);
    CHECK(p.to_string() == "1/2*t");
    CHECK(P("(x1 + x2)^2") == P("x2^2 + 2*x1*x2 + x1^2"));
    CHECK(P("x1 - x1").is_zero());
  }

  TEST_CASE("ring identities on random polynomials") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      const Poly a = random_poly(rng, 3, 5);
      const Poly b = random_poly(rng, 3, 5);
      const Poly c = random_poly(rng, 2, 4);
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a.pow(3) == a * a * a);
      CHECK(parse_poly(a.to_string()) == a);
      CHECK(partial(a * b, kX1) == partial(a, kX1) * b + a * partial(b, kX1));
    }
  }

  TEST_CASE("monomials") {
    const Monomial a{1, 2, 0};
    const Monomial b{0, 1, 3};
    CHECK(Monomial::lcm(a, b) == Monomial{1, 2, 3});
    CHECK(b.divides(Monomial{0, 2, 3}));
    CHECK_FALSE(a.divides(b));
    CHECK((a * b) / b == a);
    CHECK(Monomial{2, 0, 0}.coprime(Monomial{0, 1, 1}));
    CHECK(a.degree() == 3);
  }

  TEST_CASE("map germs must vanish at the origin") {
    CHECK_THROWS_AS(MapGerm({P("1+x1"), P("x2")}), Error);
    try {
      MapGerm({P("x1"), P("x2-3")});
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OriginNotMapped);
    }
    const MapGerm g({P("t"), P("x1"), P("x2")});
    CHECK(g.is_square());
    CHECK(g.n_in() == 3);
  }

  TEST_CASE("ambients") {
    CHECK(Ambient::tx().has_t());
    CHECK_FALSE(Ambient::x().has_t());
    CHECK(Ambient::tx().index_of("x2") == kX2);
    CHECK_FALSE(Ambient::tx().index_of("y").has_value());
    CHECK(Ambient({"t", "x1", "x2"}) == Ambient::tx());
  }
}

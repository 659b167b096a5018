#include "cuspbif/branch_counter.hpp"

#include <random>

#include "cuspbif/errors.hpp"

namespace cuspbif {

namespace {

Poly t_power(unsigned k) { return Poly::monomial(Ambient::tx(), Monomial{k, 0, 0}); }

void require_tx(const Poly& p, const char* what) {
  if (!(p.ambient() == Ambient::tx())) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " must live in (t, x1, x2)");
  }
  if (p.constant_term() != 0) {
    throw Error(ErrorKind::OriginNotMapped, std::string(what) + " does not vanish at the origin");
  }
}

long long det3(const IntMatrix3& a) {
  auto m = [&](int i, int j) { return static_cast<long long>(a[i][j]); };
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

// Plain modular reduction keeps the draws identical across standard libraries,
// unlike std::uniform_int_distribution.
IntMatrix3 random_matrix(std::mt19937_64& rng) {
  constexpr std::uint64_t span = 2 * kMatrixEntryBound + 1;
  IntMatrix3 a{};
  do {
    for (auto& row : a) {
      for (auto& v : row) v = static_cast<int>(rng() % span) - kMatrixEntryBound;
    }
  } while (det3(a) == 0);
  return a;
}

bool try_combination(GenericCombination& c, const Poly& w1, const Poly& w2, const Poly& w3) {
  const Poly* w[3] = {&w1, &w2, &w3};
  Poly g[3] = {Poly(Ambient::tx()), Poly(Ambient::tx()), Poly(Ambient::tx())};
  for (int s = 0; s < 3; ++s) {
    for (int j = 0; j < 3; ++j) {
      if (c.matrix[s][j] != 0) g[s] += *w[j] * Rational(c.matrix[s][j]);
    }
  }
  c.g1 = g[0];
  c.g2 = g[1];
  c.g3 = g[2];
  c.curve_dim = curve_criterion_ideal(c.g1, c.g2).quotient_dim();
  if (!c.curve_dim.is_finite()) return false;
  c.t_slice_dim = LocalIdeal({Poly::variable(Ambient::tx(), kT), c.g1, c.g2}).quotient_dim();
  return c.t_slice_dim.is_finite();
}

// Degree of H at the origin, or 0 when H does not vanish there.
std::pair<int, std::size_t> h_degree(const Poly& g1, const Poly& g2, const Poly& g3, unsigned k, int sign) {
  Poly h = h_first_component(g1, g2, g3, k, sign);
  if (h.constant_term() != 0) return {0, 0};
  DegreeCertificate cert = local_degree(MapGerm({h, g1, g2}));
  return {cert.degree, cert.algebra_dim};
}

BranchCount count_with_xi(const Poly& g1, const Poly& g2, const Poly& g3, unsigned xi,
                          std::optional<unsigned> k_override) {
  BranchCount out;
  out.xi = xi;
  out.k = perturbation_exponent(xi);
  if (k_override) {
    if (*k_override % 2 != 0 || *k_override <= xi) {
      throw Error(ErrorKind::InvalidArgument, "perturbation exponent k=" + std::to_string(*k_override) +
                                                  " must be even and greater than xi=" + std::to_string(xi));
    }
    out.k = *k_override;
  }
  std::tie(out.deg_H_plus, out.dim_H_plus) = h_degree(g1, g2, g3, out.k, +1);
  std::tie(out.deg_H_minus, out.dim_H_minus) = h_degree(g1, g2, g3, out.k, -1);
  out.b0 = out.deg_H_plus - out.deg_H_minus;
  if (out.b0 < 0) {
    throw Error(ErrorKind::NegativeBranchCount, "deg H+ - deg H- = " + std::to_string(out.b0) + " is negative");
  }
  return out;
}

// With t = +-u^2, O_(u,x) = O_(t,x) + u O_(t,x) and the ideal generated by the
// substituted g splits the same way, so u^m h lies in it iff t^floor(m/2) h lies
// in the original ideal. Hence xi' = 2 xi and J2' never has to be computed.
BranchCount count_substituted(const Poly& g1, const Poly& g2, const Poly& g3, const BranchOptions& options,
                              int sign) {
  unsigned xi = compute_xi(g1, g2, g3, options.xi_cap);
  Poly t = Poly::variable(Ambient::tx(), kT);
  Poly s = t * t * Rational(sign);
  Poly h1 = substitute(g1, kT, s);
  Poly h2 = substitute(g2, kT, s);
  Poly h3 = substitute(g3, kT, s);
  BranchCount out = count_with_xi(h1, h2, h3, 2 * xi, options.k);
  if (out.b0 % 2 != 0) {
    throw Error(ErrorKind::OddBPrime, "branch count after t -> " + std::string(sign > 0 ? "" : "-") +
                                          "t^2 is odd (" + std::to_string(out.b0) + ")");
  }
  return out;
}

}  // namespace

LocalIdeal curve_criterion_ideal(const Poly& g1, const Poly& g2) {
  return LocalIdeal({g1, g2, jacobian2(g1, g2, kT, kX1), jacobian2(g1, g2, kT, kX2), jacobian2(g1, g2, kX1, kX2)});
}

GenericCombination choose_combination(const Poly& w1, const Poly& w2, const Poly& w3, std::uint64_t seed,
                                      unsigned max_attempts, bool allow_identity) {
  require_tx(w1, "w1");
  require_tx(w2, "w2");
  require_tx(w3, "w3");
  if (max_attempts == 0) throw Error(ErrorKind::InvalidArgument, "max_attempts must be positive");

  GenericCombination c;
  if (allow_identity) {
    c.matrix = {{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
    c.attempts = 1;
    if (try_combination(c, w1, w2, w3)) {
      c.verified = true;
      c.identity_choice = true;
      return c;
    }
  }
  std::mt19937_64 rng(seed);
  while (c.attempts < max_attempts) {
    ++c.attempts;
    c.matrix = random_matrix(rng);
    if (try_combination(c, w1, w2, w3)) {
      c.verified = true;
      return c;
    }
  }
  throw Error(ErrorKind::NoGenericCombinationFound,
              "no combination with an isolated curve singularity and finite <t, g1, g2> after " +
                  std::to_string(max_attempts) + " attempts");
}

unsigned compute_xi(const Poly& g1, const Poly& g2, const Poly& g3, unsigned cap) {
  require_tx(g1, "g1");
  require_tx(g2, "g2");
  require_tx(g3, "g3");
  LocalIdeal ideal({g1, g2, g3 * g3});
  Poly probe = g3;
  Poly t = Poly::variable(Ambient::tx(), kT);
  for (unsigned s = 0; s <= cap; ++s) {
    if (ideal.contains(probe)) return s;
    probe = probe * t;
  }
  throw Error(ErrorKind::XiSearchExceededBound,
              "t^s * g3 not in <g1, g2, g3^2> for any s <= " + std::to_string(cap));
}

unsigned perturbation_exponent(unsigned xi) { return xi % 2 == 0 ? xi + 2 : xi + 1; }

Poly h_first_component(const Poly& g1, const Poly& g2, const Poly& g3, unsigned k, int sign) {
  Poly shifted = g3 + t_power(k) * Rational(sign);
  return jacobian3_det(MapGerm({shifted, g1, g2}));
}

MapGerm build_H(const Poly& g1, const Poly& g2, const Poly& g3, unsigned k, int sign) {
  return MapGerm({h_first_component(g1, g2, g3, k, sign), g1, g2});
}

BranchCount count_branches(const Poly& g1, const Poly& g2, const Poly& g3, const BranchOptions& options) {
  return count_with_xi(g1, g2, g3, compute_xi(g1, g2, g3, options.xi_cap), options.k);
}

BranchCount count_branches_positive_t(const Poly& g1, const Poly& g2, const Poly& g3,
                                      const BranchOptions& options) {
  return count_substituted(g1, g2, g3, options, +1);
}

BranchCount count_branches_negative_t(const Poly& g1, const Poly& g2, const Poly& g3,
                                      const BranchOptions& options) {
  return count_substituted(g1, g2, g3, options, -1);
}

}  // namespace cuspbif

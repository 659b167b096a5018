#include "cuspbif/cusp_pipeline.hpp"

#include <optional>
#include <utility>

#include "cuspbif/errors.hpp"

namespace cuspbif {

namespace {

template <class F>
auto stage(const char* name, F&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

QuotientDim dim_of(const std::vector<Poly>& gens) {
  for (const Poly& g : gens) {
    if (g.constant_term() != 0) return QuotientDim::finite(0);
  }
  return LocalIdeal(gens).quotient_dim();
}

// Degree parity shared by all terms: 0 even, 1 odd, nullopt mixed, -1 zero.
std::optional<int> degree_parity(const Poly& p) {
  if (p.is_zero()) return -1;
  int parity = static_cast<int>(p.leading_term().mono.degree() % 2);
  for (const Term& term : p.terms()) {
    if (static_cast<int>(term.mono.degree() % 2) != parity) return std::nullopt;
  }
  return parity;
}

bool parity_holds(int count, const QuotientDim& dim_q) {
  if (!dim_q.is_finite() || count < 0) return false;
  auto q = static_cast<long long>(dim_q.value());
  return count <= q && (q - count) % 2 == 0;
}

CombinationSummary summarize(const GenericCombination& c) {
  CombinationSummary s;
  s.matrix = c.matrix;
  s.identity_choice = c.identity_choice;
  s.attempts = c.attempts;
  s.curve_dim = c.curve_dim.to_string();
  s.t_slice_dim = c.t_slice_dim.to_string();
  s.g1 = c.g1.to_string();
  s.g2 = c.g2.to_string();
  s.g3 = c.g3.to_string();
  return s;
}

}  // namespace

DerivedGerms derive(const Poly& f1, const Poly& f2) {
  const Ambient tx = Ambient::tx();
  if (!(f1.ambient() == tx) || !(f2.ambient() == tx)) {
    throw Error(ErrorKind::InvalidArgument, "f1 and f2 must live in (t, x1, x2)");
  }
  if (f1.constant_term() != 0 || f2.constant_term() != 0) {
    throw Error(ErrorKind::OriginNotMapped, "f(0, 0) != 0: the family does not map the origin to the origin");
  }
  Poly J = jacobian2(f1, f2, kX1, kX2);
  if (J.constant_term() != 0) {
    throw Error(ErrorKind::JNotVanishing,
                "J(0) = " + to_string(J.constant_term()) + " != 0: f_0 is a local diffeomorphism, no cusps bifurcate");
  }
  Poly F1 = jacobian2(f1, J, kX1, kX2);
  Poly F2 = jacobian2(f2, J, kX1, kX2);
  Poly Jt = partial(J, kT);
  Poly Jx1 = partial(J, kX1);
  Poly Jx2 = partial(J, kX2);
  Poly t = Poly::variable(tx, kT);

  return DerivedGerms{
      .f1 = f1,
      .f2 = f2,
      .J = J,
      .F1 = F1,
      .F2 = F2,
      .f0 = MapGerm({set_t_zero(f1), set_t_zero(f2)}),
      .d0 = {set_t_zero(Jx1), set_t_zero(Jx2)},
      .d1 = {Jt, Jx1, Jx2},
      .d2 = {J, Jx1, Jx2},
      .I_prime = LocalIdeal({J, F1, F2, jacobian2(F1, J, kX1, kX2), jacobian2(F2, J, kX1, kX2)}),
      .I_dblprime = curve_criterion_ideal(F1, F2),
      .Q_ideal = LocalIdeal({t, J, F1, F2}),
  };
}

std::string HypothesisReport::first_failure() const {
  const std::pair<const char*, const QuotientDim*> required[] = {
      {"dim O3/<t, f1, f2>", &dim_t_f1_f2},
      {"dim O3/<t, F1, F2>", &dim_t_F1_F2},
      {"dim O3/<t, dJ/dx1, dJ/dx2>", &dim_t_gradJ},
      {"dim O3/I' (I' = <J, F1, F2, d(F1,J)/d(x1,x2), d(F2,J)/d(x1,x2)>)", &dim_I_prime},
      {"dim O3/<dJ/dt, dJ/dx1, dJ/dx2> (isolated zero of d1)", &dim_d1_ideal},
      {"dim O3/<J, dJ/dx1, dJ/dx2> (isolated zero of d2)", &dim_d2_ideal},
      {"dim O3/<t, J, F1, F2>", &dim_Q},
  };
  for (const auto& [name, dim] : required) {
    if (!dim->is_finite()) return name;
  }
  return {};
}

HypothesisReport compute_hypotheses(const DerivedGerms& d) {
  Poly t = Poly::variable(Ambient::tx(), kT);
  HypothesisReport r;
  r.J_vanishes = d.J.constant_term() == 0;
  r.dim_t_f1_f2 = dim_of({t, d.f1, d.f2});
  r.dim_t_F1_F2 = dim_of({t, d.F1, d.F2});
  r.dim_t_gradJ = dim_of({t, d.d1[1], d.d1[2]});
  r.dim_I_prime = d.I_prime.quotient_dim();
  r.dim_d1_ideal = dim_of(d.d1);
  r.dim_d2_ideal = dim_of(d.d2);
  r.dim_I_dblprime = d.I_dblprime.quotient_dim();
  r.dim_Q = d.Q_ideal.quotient_dim();
  return r;
}

HypothesisReport verify_hypotheses(const DerivedGerms& d) {
  HypothesisReport r = compute_hypotheses(d);
  if (!r.J_vanishes) throw Error(ErrorKind::JNotVanishing, "J(0) != 0");
  if (std::string failed = r.first_failure(); !failed.empty()) {
    throw Error(ErrorKind::HypothesisFailed, failed + " is infinite: the origin is not an isolated zero");
  }
  return r;
}

int cusp_degree(int deg_f0, int deg_d1, int deg_d2, int t_sign) {
  if (t_sign != 1 && t_sign != -1) throw Error(ErrorKind::InvalidArgument, "t_sign must be +1 or -1");
  return deg_f0 - deg_d1 - t_sign * deg_d2;
}

SigmaCounts solve_sigma(int b0, int b0_prime, int deg_f0, int deg_d1, int deg_d2) {
  if (b0_prime % 2 != 0) {
    throw Error(ErrorKind::InconsistentSystem, "b0' = " + std::to_string(b0_prime) + " is odd");
  }
  const int pos_total = b0_prime / 2;
  if (pos_total < 0 || pos_total > b0) {
    throw Error(ErrorKind::InconsistentSystem, "b0'/2 = " + std::to_string(pos_total) + " is not in [0, b0 = " +
                                                   std::to_string(b0) + "]");
  }
  const int neg_total = b0 - pos_total;
  const int pos_diff = cusp_degree(deg_f0, deg_d1, deg_d2, +1);
  const int neg_diff = cusp_degree(deg_f0, deg_d1, deg_d2, -1);

  auto split = [](int total, int diff, const char* which) {
    if ((total + diff) % 2 != 0 || total + diff < 0 || total - diff < 0) {
      throw Error(ErrorKind::InconsistentSystem, std::string("no non-negative integer solution for ") + which +
                                                     ": total " + std::to_string(total) + ", degree " +
                                                     std::to_string(diff));
    }
    return std::pair{(total + diff) / 2, (total - diff) / 2};
  };
  auto [tp, tm] = split(pos_total, pos_diff, "t > 0");
  auto [np, nm] = split(neg_total, neg_diff, "t < 0");
  return {tp, tm, np, nm};
}

EulerExtras euler_extras(int deg_d0, int deg_d1, int deg_d2, int t_sign) {
  if (t_sign != 1 && t_sign != -1) throw Error(ErrorKind::InvalidArgument, "t_sign must be +1 or -1");
  const int s = deg_d0 + deg_d1 + t_sign * deg_d2;
  if (s % 2 != 0) {
    throw Error(ErrorKind::ParityViolation,
                "deg d0 + deg d1 + sign(t) deg d2 = " + std::to_string(s) + " is odd");
  }
  return {.chi_M_minus = 1 - s / 2, .L0_count = 2 * (1 - deg_d0)};
}

bool has_t_symmetry(const Poly& f1, const Poly& f2) {
  auto p1 = degree_parity(f1);
  auto p2 = degree_parity(f2);
  if (!p1 || !p2) return false;
  return *p1 == -1 || *p2 == -1 || *p1 == *p2;
}

DegreeSummary degree_at_origin(const std::vector<Poly>& components) {
  for (const Poly& c : components) {
    if (c.constant_term() != 0) return {};
  }
  DegreeCertificate cert = local_degree(MapGerm(components));
  return {cert.degree, cert.algebra_dim, cert.positives, cert.negatives};
}

BifurcationReport run(const Poly& f1, const Poly& f2, const RunOptions& options) {
  BifurcationReport r;
  r.f1 = f1.to_string();
  r.f2 = f2.to_string();
  r.seed = options.seed;

  DerivedGerms d = stage("derive", [&] { return derive(f1, f2); });
  r.J = d.J.to_string();
  r.F1 = d.F1.to_string();
  r.F2 = d.F2.to_string();

  r.hypotheses = stage("hypotheses", [&] { return verify_hypotheses(d); });

  stage("degrees", [&] {
    r.f0 = degree_at_origin(d.f0.components());
    r.d0 = degree_at_origin(d.d0);
    r.d1 = degree_at_origin(d.d1);
    r.d2 = degree_at_origin(d.d2);
  });
  r.deg_f0 = r.f0.degree;
  r.deg_d0 = r.d0.degree;
  r.deg_d1 = r.d1.degree;
  r.deg_d2 = r.d2.degree;
  r.cusp_deg_pos_t = cusp_degree(r.deg_f0, r.deg_d1, r.deg_d2, +1);
  r.cusp_deg_neg_t = cusp_degree(r.deg_f0, r.deg_d1, r.deg_d2, -1);

  GenericCombination c = stage("combination", [&] {
    return choose_combination(d.J, d.F1, d.F2, options.seed, options.matrix_attempts);
  });
  r.combination = summarize(c);

  BranchOptions bo{.xi_cap = options.xi_cap, .k = std::nullopt};
  r.branch = stage("branches", [&] { return count_branches(c.g1, c.g2, c.g3, bo); });
  r.branch_positive = stage("branches t>0", [&] { return count_branches_positive_t(c.g1, c.g2, c.g3, bo); });
  r.b0 = r.branch.b0;
  r.b0_prime = r.branch_positive.b0;

  r.sigma = stage("cusp counts", [&] { return solve_sigma(r.b0, r.b0_prime, r.deg_f0, r.deg_d1, r.deg_d2); });

  stage("euler", [&] {
    EulerExtras pos = euler_extras(r.deg_d0, r.deg_d1, r.deg_d2, +1);
    EulerExtras neg = euler_extras(r.deg_d0, r.deg_d1, r.deg_d2, -1);
    r.chi_M_pos_t = pos.chi_M_minus;
    r.chi_M_neg_t = neg.chi_M_minus;
    r.L0_count = pos.L0_count;
  });
  r.fold_boundary_crit_count = r.L0_count;

  r.parity_ok = parity_holds(r.sigma[0] + r.sigma[1], r.hypotheses.dim_Q) &&
                parity_holds(r.sigma[2] + r.sigma[3], r.hypotheses.dim_Q);
  r.symmetry_detected = has_t_symmetry(f1, f2);
  r.symmetry_ok = !r.symmetry_detected || (r.sigma[0] == r.sigma[2] && r.sigma[1] == r.sigma[3]);
  return r;
}

}  // namespace cuspbif

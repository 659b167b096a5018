#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cuspbif/branch_counter.hpp"
#include "cuspbif/elk_degree.hpp"
#include "cuspbif/poly.hpp"
#include "cuspbif/standard_basis.hpp"

namespace cuspbif {

/// Germs attached to a one-parameter family f(t, x1, x2) = (f1, f2).
struct DerivedGerms {
  Poly f1, f2;
  /// d(f1, f2)/d(x1, x2).
  Poly J;
  /// F_i = d(f_i, J)/d(x1, x2).
  Poly F1, F2;
  /// f at t = 0, in (x1, x2).
  MapGerm f0;
  // d0, d1, d2 are kept as component lists since they need not vanish at the
  // origin; such a map has local degree 0 there.
  /// Gradient of J(0, x) in x, in (x1, x2).
  std::vector<Poly> d0;
  /// (dJ/dt, dJ/dx1, dJ/dx2).
  std::vector<Poly> d1;
  /// (J, dJ/dx1, dJ/dx2).
  std::vector<Poly> d2;
  /// <J, F1, F2, d(F1, J)/d(x1, x2), d(F2, J)/d(x1, x2)>.
  LocalIdeal I_prime;
  /// <F1, F2> and the 2x2 minors of d(F1, F2)/d(t, x1, x2).
  LocalIdeal I_dblprime;
  /// <t, J, F1, F2>.
  LocalIdeal Q_ideal;
};

/// Throws OriginNotMapped when f1 or f2 has a constant term and JNotVanishing
/// when J(0) != 0.
DerivedGerms derive(const Poly& f1, const Poly& f2);

struct HypothesisReport {
  QuotientDim dim_t_f1_f2 = QuotientDim::infinite();
  QuotientDim dim_t_F1_F2 = QuotientDim::infinite();
  QuotientDim dim_t_gradJ = QuotientDim::infinite();
  QuotientDim dim_I_prime = QuotientDim::infinite();
  QuotientDim dim_d1_ideal = QuotientDim::infinite();
  QuotientDim dim_d2_ideal = QuotientDim::infinite();
  /// Informational: decides whether (F1, F2, J) can be used as the branch
  /// counting triple without a random change of coordinates.
  QuotientDim dim_I_dblprime = QuotientDim::infinite();
  QuotientDim dim_Q = QuotientDim::infinite();
  bool J_vanishes = false;

  /// Name of the first required dimension that is infinite, or empty.
  std::string first_failure() const;
  bool ok() const { return J_vanishes && first_failure().empty(); }

  friend bool operator==(const HypothesisReport&, const HypothesisReport&) = default;
};

/// Computes every dimension without throwing.
HypothesisReport compute_hypotheses(const DerivedGerms& d);

/// compute_hypotheses, then throws HypothesisFailed naming the first failing
/// dimension.
HypothesisReport verify_hypotheses(const DerivedGerms& d);

/// deg f0 - deg d1 - t_sign * deg d2.
int cusp_degree(int deg_f0, int deg_d1, int deg_d2, int t_sign);

/// Cusp counts for small t > 0: {#S_t^+, #S_t^-, #S_-t^+, #S_-t^-}, where S_t is
/// the cusp set of f_t and the sign is the local degree.
using SigmaCounts = std::array<int, 4>;

/// Throws InconsistentSystem unless every count is a non-negative integer.
SigmaCounts solve_sigma(int b0, int b0_prime, int deg_f0, int deg_d1, int deg_d2);

struct EulerExtras {
  /// Euler characteristic of {x : J(t, x) <= 0} near the origin.
  int chi_M_minus = 0;
  /// Number of points in the zero set of J(t, .) on a small circle.
  int L0_count = 0;

  friend bool operator==(const EulerExtras&, const EulerExtras&) = default;
};

/// Throws ParityViolation when deg d0 + deg d1 + t_sign * deg d2 is odd.
EulerExtras euler_extras(int deg_d0, int deg_d1, int deg_d2, int t_sign);

/// True when f(-t, -x) = f(t, x) or f(-t, -x) = -f(t, x) componentwise with a
/// common sign, in which case f_{-t} and f_t are conjugate by orientation
/// preserving maps and the cusp counts for both signs of t agree.
bool has_t_symmetry(const Poly& f1, const Poly& f2);

struct CombinationSummary {
  IntMatrix3 matrix{};
  bool identity_choice = false;
  unsigned attempts = 0;
  std::string curve_dim;
  std::string t_slice_dim;
  std::string g1, g2, g3;

  friend bool operator==(const CombinationSummary&, const CombinationSummary&) = default;
};

struct DegreeSummary {
  int degree = 0;
  std::size_t algebra_dim = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;

  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

/// Local degree at the origin of the map with these components; 0 with an
/// empty algebra when some component does not vanish there.
DegreeSummary degree_at_origin(const std::vector<Poly>& components);

struct BifurcationReport {
  std::string f1, f2;
  std::uint64_t seed = 0;
  std::string J, F1, F2;

  HypothesisReport hypotheses;
  DegreeSummary f0, d0, d1, d2;
  int deg_f0 = 0, deg_d0 = 0, deg_d1 = 0, deg_d2 = 0;
  int cusp_deg_pos_t = 0, cusp_deg_neg_t = 0;

  CombinationSummary combination;
  BranchCount branch;
  BranchCount branch_positive;
  int b0 = 0;
  int b0_prime = 0;

  SigmaCounts sigma{};
  int chi_M_pos_t = 0, chi_M_neg_t = 0;
  int L0_count = 0;
  int fold_boundary_crit_count = 0;

  bool parity_ok = false;
  bool symmetry_detected = false;
  /// Meaningful only when symmetry_detected.
  bool symmetry_ok = true;

  friend bool operator==(const BifurcationReport&, const BifurcationReport&) = default;
};

struct RunOptions {
  std::uint64_t seed = 0;
  unsigned xi_cap = kDefaultXiCap;
  unsigned matrix_attempts = kDefaultMatrixAttempts;
};

/// The whole analysis. Errors from each stage are rethrown with the same kind
/// and the stage name prefixed to the message.
BifurcationReport run(const Poly& f1, const Poly& f2, const RunOptions& options = {});

}  // namespace cuspbif

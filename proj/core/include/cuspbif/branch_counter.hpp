#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cuspbif/elk_degree.hpp"
#include "cuspbif/poly.hpp"
#include "cuspbif/standard_basis.hpp"

namespace cuspbif {

inline constexpr unsigned kDefaultXiCap = 64;
inline constexpr unsigned kDefaultMatrixAttempts = 32;
/// Entries of random combination matrices are drawn from [-10, 10].
inline constexpr int kMatrixEntryBound = 10;

using IntMatrix3 = std::array<std::array<int, 3>, 3>;

/// A combination g_s = sum_j a_sj w_j of the three curve equations such that
/// V(g1, g2) is a curve with an algebraically isolated singularity and
/// O_3 / <t, g1, g2> is finite-dimensional.
struct GenericCombination {
  IntMatrix3 matrix{};
  Poly g1{Ambient::tx()};
  Poly g2{Ambient::tx()};
  Poly g3{Ambient::tx()};
  bool verified = false;
  /// True when the permutation g = (w2, w3, w1) was accepted.
  bool identity_choice = false;
  /// Number of matrices tried, including the identity choice.
  unsigned attempts = 0;
  /// dim O_3 / (<g1, g2> + 2x2 minors of d(g1, g2)/d(t, x1, x2)).
  QuotientDim curve_dim = QuotientDim::infinite();
  /// dim O_3 / <t, g1, g2>.
  QuotientDim t_slice_dim = QuotientDim::infinite();
};

/// The curve criterion ideal of V(g1, g2): g1, g2 and the three 2x2 minors of
/// their derivative matrix with respect to (t, x1), (t, x2) and (x1, x2).
LocalIdeal curve_criterion_ideal(const Poly& g1, const Poly& g2);

/// Tries (g1, g2, g3) = (w2, w3, w1) first (unless `allow_identity` is
/// false), then random nonsingular integer matrices from a generator seeded
/// with `seed`. Throws NoGenericCombinationFound after `max_attempts` matrices.
GenericCombination choose_combination(const Poly& w1, const Poly& w2, const Poly& w3, std::uint64_t seed,
                                      unsigned max_attempts = kDefaultMatrixAttempts, bool allow_identity = true);

/// Smallest s with t^s * g3 in <g1, g2, g3^2>, searching s = 0..cap.
/// Throws XiSearchExceededBound past the cap.
unsigned compute_xi(const Poly& g1, const Poly& g2, const Poly& g3, unsigned cap = kDefaultXiCap);

/// Smallest even integer strictly greater than xi.
unsigned perturbation_exponent(unsigned xi);

/// First component of H: the Jacobian determinant of (g3 + sign * t^k, g1, g2)
/// with respect to (t, x1, x2).
Poly h_first_component(const Poly& g1, const Poly& g2, const Poly& g3, unsigned k, int sign);

/// H = (h_first_component, g1, g2). Throws OriginNotMapped when the first
/// component does not vanish at the origin.
MapGerm build_H(const Poly& g1, const Poly& g2, const Poly& g3, unsigned k, int sign);

struct BranchCount {
  unsigned xi = 0;
  unsigned k = 0;
  int deg_H_plus = 0;
  int deg_H_minus = 0;
  /// deg_H_plus - deg_H_minus.
  int b0 = 0;
  /// Local algebra dimensions of H+ and H- (0 when H does not vanish at 0).
  std::size_t dim_H_plus = 0;
  std::size_t dim_H_minus = 0;

  friend bool operator==(const BranchCount&, const BranchCount&) = default;
};

struct BranchOptions {
  unsigned xi_cap = kDefaultXiCap;
  /// Overrides the perturbation exponent; must be even and > xi.
  std::optional<unsigned> k;
};

/// Number of half-branches of V(g1, g2, g3) at the origin, as deg H+ - deg H-.
BranchCount count_branches(const Poly& g1, const Poly& g2, const Poly& g3, const BranchOptions& options = {});

/// Branch count of the system after t -> t^2. Half of b0 of the result is the
/// number of half-branches of V(g1, g2, g3) with t > 0. xi of the substituted
/// system is exactly 2 * xi of the original. Throws OddBPrime when the count
/// is odd.
BranchCount count_branches_positive_t(const Poly& g1, const Poly& g2, const Poly& g3,
                                      const BranchOptions& options = {});

/// Same as count_branches_positive_t with t -> -t^2: half of its b0 counts
/// the half-branches with t < 0.
BranchCount count_branches_negative_t(const Poly& g1, const Poly& g2, const Poly& g3,
                                      const BranchOptions& options = {});

}  // namespace cuspbif

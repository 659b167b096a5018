#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cuspbif/poly.hpp"
#include "cuspbif/rational.hpp"
#include "cuspbif/standard_basis.hpp"

namespace cuspbif {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Inertia {
  std::size_t positives = 0;
  std::size_t negatives = 0;
  std::size_t zeros = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Inertia of a symmetric rational matrix by exact congruence
/// diagonalization: symmetric pivoting on nonzero diagonal entries, and a 2x2
/// hyperbolic block step when every remaining diagonal entry vanishes.
Inertia signature(RationalMatrix m);

/// The finite-dimensional local algebra O_n / <g_1, ..., g_n> of a square germ.
class LocalAlgebra {
 public:
  /// Throws NotAlgebraicallyIsolated when the quotient is infinite-dimensional.
  static LocalAlgebra build(const MapGerm& germ);

  const MapGerm& germ() const noexcept { return germ_; }
  const LocalIdeal& ideal() const noexcept { return ideal_; }
  const Cobasis& cobasis() const { return ideal_.cobasis(); }
  std::size_t dim() const { return cobasis().size(); }

  /// Coordinates of the class of p.
  std::vector<Rational> coordinates(const Poly& p) const;
  /// Coordinates of the class of the product of cobasis monomials i and j.
  std::vector<Rational> product(std::size_t i, std::size_t j) const;

 private:
  LocalAlgebra(MapGerm germ, LocalIdeal ideal) : germ_(std::move(germ)), ideal_(std::move(ideal)) {}

  MapGerm germ_;
  LocalIdeal ideal_;
};

inline LocalAlgebra build_algebra(const MapGerm& germ) { return LocalAlgebra::build(germ); }

/// A local topological degree together with the data that certifies it.
struct DegreeCertificate {
  int degree = 0;
  std::size_t algebra_dim = 0;
  /// Class of the Jacobian determinant in the cobasis.
  std::vector<Rational> jacobian_class;
  /// The linear functional phi, as coefficients on the cobasis.
  std::vector<Rational> functional;
  /// Cobasis index whose signed dual functional is phi.
  std::size_t functional_index = 0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
};

/// Local degree of a square germ with algebraically isolated zero, computed as
/// the signature of (a, b) -> phi(a * b) on the local algebra, where phi is
/// positive on the class of the Jacobian determinant.
///
/// By default phi is the signed dual functional of the last (smallest) cobasis
/// monomial with a nonzero coefficient in the Jacobian class;
/// `functional_index` selects another admissible monomial.
DegreeCertificate local_degree(const LocalAlgebra& algebra, std::optional<std::size_t> functional_index = {});

DegreeCertificate local_degree(const MapGerm& germ);

/// Cobasis indices usable as functional_index (nonzero Jacobian coefficient).
std::vector<std::size_t> admissible_functionals(const LocalAlgebra& algebra);

}  // namespace cuspbif

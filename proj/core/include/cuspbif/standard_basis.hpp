#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cuspbif/poly.hpp"

namespace cuspbif {

/// Dimension of a quotient O_n / I over the reals; either a count or infinite.
class QuotientDim {
 public:
  static QuotientDim finite(std::size_t n) { return QuotientDim(n); }
  static QuotientDim infinite() { return QuotientDim(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Requires is_finite().
  std::size_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "INFINITE"; }

  friend bool operator==(const QuotientDim& a, const QuotientDim& b) = default;

 private:
  QuotientDim() = default;
  explicit QuotientDim(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

/// Monomials outside a leading ideal, sorted descending in the local ordering
/// (so 1 comes first when present).
struct Cobasis {
  std::vector<Monomial> monomials;

  std::size_t size() const noexcept { return monomials.size(); }
  /// Position of m, or nullopt when m is not a standard monomial.
  std::optional<std::size_t> index_of(const Monomial& m) const;
};

/// Staircase of the monomial ideal generated by `generators` in `nvars`
/// variables. Returns nullopt when the staircase is infinite.
std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& generators, std::size_t nvars);

/// Sparse coordinate vector over a cobasis: (index, coefficient), indices ascending.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// An ideal of the local ring at the origin given by polynomial generators.
///
/// Membership is decided in the polynomial ring localized at the origin, which
/// agrees with membership in the ring of convergent (or formal) germs for
/// polynomial data because that extension is faithfully flat.
///
/// The standard basis is computed once, on first use, and cached; copies share
/// the cache and all queries are safe to call from several threads. It is first
/// sought modulo m^D for D = 12, 24, 48, which is exact once m^(D-1) lies in
/// the ideal. Otherwise Buchberger's algorithm runs on the homogenized
/// generators and the result is dehomogenized (Lazard's method).
class LocalIdeal {
 public:
  explicit LocalIdeal(std::vector<Poly> generators);
  LocalIdeal(Ambient ambient, std::vector<Poly> generators);

  const Ambient& ambient() const noexcept;
  const std::vector<Poly>& generators() const noexcept;

  /// Minimal standard basis under the local ordering, primitive integer
  /// coefficients with positive leading coefficient.
  const std::vector<Poly>& standard_basis() const;
  /// Leading monomials of standard_basis(), i.e. minimal generators of the
  /// leading ideal.
  std::vector<Monomial> lead_monomials() const;

  QuotientDim quotient_dim() const;
  bool has_finite_codimension() const { return quotient_dim().is_finite(); }
  /// Throws DimensionInfinite when the quotient is infinite-dimensional.
  const Cobasis& cobasis() const;
  /// Smallest N such that every monomial of degree >= N lies in the leading
  /// ideal; nullopt when the quotient is infinite-dimensional.
  std::optional<unsigned> corner_degree() const;

  /// Normal form of p. For an ideal of finite codimension this is the unique
  /// representative supported on the cobasis, and it is linear in p. Otherwise
  /// it is zero for members, and for non-members the remainder of p modulo
  /// I + m^D for the least D in 24, 48, 72, ... with p outside I + m^D. In
  /// both cases it is zero exactly when p lies in the ideal.
  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const;

  /// Coordinates of the normal form in the cobasis (finite codimension only).
  SparseVector coordinates(const Poly& p) const;
  /// Coordinates of a single monomial (finite codimension only).
  const SparseVector& monomial_coordinates(const Monomial& m) const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

// Free-function forms of the main queries.
inline const std::vector<Poly>& std_basis(const LocalIdeal& ideal) { return ideal.standard_basis(); }
inline Poly normal_form(const Poly& p, const LocalIdeal& ideal) { return ideal.normal_form(p); }
inline QuotientDim quotient_dim(const LocalIdeal& ideal) { return ideal.quotient_dim(); }
inline const Cobasis& cobasis(const LocalIdeal& ideal) { return ideal.cobasis(); }

}  // namespace cuspbif

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cuspbif/rational.hpp"

namespace cuspbif {

inline constexpr std::size_t kMaxVars = 3;

/// Ordered tuple of variable names a polynomial lives in. The germ families
/// use (t, x1, x2); germs derived at t = 0 use (x1, x2). Other tuples of one to
/// three distinct names are accepted for tests and ad-hoc ideals.
class Ambient {
 public:
  explicit Ambient(std::vector<std::string> names);

  static Ambient tx();
  static Ambient x();

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// The parameter t, when present, is always variable 0.
  bool has_t() const noexcept { return !names_->empty() && (*names_)[0] == "t"; }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Variable indices in the (t, x1, x2) ambient.
inline constexpr std::size_t kT = 0;
inline constexpr std::size_t kX1 = 1;
inline constexpr std::size_t kX2 = 2;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);

  std::size_t size() const noexcept { return n_; }
  unsigned operator[](std::size_t i) const noexcept { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const noexcept;
  bool is_one() const noexcept { return degree() == 0; }

  bool divides(const Monomial& other) const noexcept;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// The local degree-reverse-lexicographic ordering: a monomial of smaller total
/// degree is larger, ties are broken reverse-lexicographically (smaller
/// exponent of the last variable wins). 1 is the largest monomial.
struct LocalOrdering {
  static int compare(const Monomial& a, const Monomial& b) noexcept;
  static bool greater(const Monomial& a, const Monomial& b) noexcept { return compare(a, b) > 0; }
};

/// Strict weak order putting larger monomials first.
struct DescendingLocal {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return LocalOrdering::compare(a, b) > 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// stored without zeros, sorted descending in the local ordering, so the first
/// term is the leading term and serialization is canonical.
class Poly {
 public:
  explicit Poly(Ambient ambient) : ambient_(std::move(ambient)) {}

  static Poly constant(Ambient ambient, const Rational& c);
  static Poly variable(Ambient ambient, std::size_t index);
  static Poly monomial(Ambient ambient, const Monomial& m, const Rational& c = 1);
  /// Combines like terms, drops zeros and sorts.
  static Poly from_terms(Ambient ambient, std::vector<Term> terms);

  const Ambient& ambient() const noexcept { return ambient_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const noexcept;
  /// Smallest total degree of a term (the order at the origin); -1 for zero.
  int order() const noexcept;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  Poly operator-() const;

  Poly pow(unsigned e) const;
  Poly mul_monomial(const Monomial& m, const Rational& c) const;

  /// Parseable text, e.g. "t*x1 + 3*x1^3 - 2*x2^2".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  Poly(Ambient ambient, std::vector<Term> sorted) : ambient_(std::move(ambient)), terms_(std::move(sorted)) {}
  Poly add_scaled(const Poly& other, const Rational& c) const;

  Ambient ambient_;
  std::vector<Term> terms_;
};

/// A map germ (R^n, 0) -> (R^m, 0) given by polynomial components that share
/// one ambient and have no constant term.
class MapGerm {
 public:
  explicit MapGerm(std::vector<Poly> components);

  const Ambient& ambient() const noexcept { return components_.front().ambient(); }
  std::size_t n_in() const noexcept { return ambient().size(); }
  std::size_t n_out() const noexcept { return components_.size(); }
  bool is_square() const noexcept { return n_in() == n_out(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

 private:
  std::vector<Poly> components_;
};

Poly partial(const Poly& p, std::size_t var);

/// dp/dv1 * dq/dv2 - dp/dv2 * dq/dv1.
Poly jacobian2(const Poly& p, const Poly& q, std::size_t v1, std::size_t v2);

/// Determinant of the derivative matrix of a square germ (n = 1, 2 or 3).
Poly jacobian_det(const MapGerm& g);

/// jacobian_det for a germ in (t, x1, x2) with three components.
Poly jacobian3_det(const MapGerm& g);

/// p(t^2, x1, x2).
Poly substitute_t_squared(const Poly& p);

/// p(0, x1, x2), expressed in the (x1, x2) ambient.
Poly set_t_zero(const Poly& p);

/// Replaces variable `var` of p by the polynomial q (same ambient).
Poly substitute(const Poly& p, std::size_t var, const Poly& q);

}  // namespace cuspbif

#pragma once

#include <gmpxx.h>

#include <string>

namespace cuspbif {

/// Exact rational number. Arithmetic results are in lowest terms, but the
/// two-argument constructor is not; polynomial operations canonicalize their
/// inputs.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace cuspbif

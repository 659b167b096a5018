#include "cuspbif/elk_degree.hpp"

#include "cuspbif/errors.hpp"

namespace cuspbif {
namespace {

std::vector<Rational> densify(const SparseVector& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

}  // namespace

LocalAlgebra LocalAlgebra::build(const MapGerm& germ) {
  if (!germ.is_square()) throw Error(ErrorKind::InvalidArgument, "local algebra needs a square germ");
  LocalIdeal ideal(germ.components());
  if (!ideal.quotient_dim().is_finite()) {
    throw Error(ErrorKind::NotAlgebraicallyIsolated,
                "the zero of the germ is not algebraically isolated (infinite local algebra)");
  }
  return LocalAlgebra(germ, std::move(ideal));
}

std::vector<Rational> LocalAlgebra::coordinates(const Poly& p) const {
  return densify(ideal_.coordinates(p), dim());
}

std::vector<Rational> LocalAlgebra::product(std::size_t i, std::size_t j) const {
  const auto& mons = cobasis().monomials;
  return densify(ideal_.monomial_coordinates(mons.at(i) * mons.at(j)), dim());
}

std::vector<std::size_t> admissible_functionals(const LocalAlgebra& algebra) {
  const auto jac = algebra.coordinates(jacobian_det(algebra.germ()));
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < jac.size(); ++i) {
    if (jac[i] != 0) out.push_back(i);
  }
  return out;
}

DegreeCertificate local_degree(const LocalAlgebra& algebra, std::optional<std::size_t> functional_index) {
  const std::size_t n = algebra.dim();
  DegreeCertificate cert;
  cert.algebra_dim = n;
  cert.jacobian_class = algebra.coordinates(jacobian_det(algebra.germ()));

  std::size_t k = n;
  if (functional_index) {
    if (*functional_index >= n || cert.jacobian_class[*functional_index] == 0) {
      throw Error(ErrorKind::InvalidArgument, "functional index carries no Jacobian coefficient");
    }
    k = *functional_index;
  } else {
    for (std::size_t i = n; i-- > 0;) {
      if (cert.jacobian_class[i] != 0) {
        k = i;
        break;
      }
    }
  }
  if (k == n) {
    throw Error(ErrorKind::DegenerateJacobianClass,
                "the Jacobian determinant vanishes in the local algebra (dimension " + std::to_string(n) + ")");
  }
  const Rational phi_sign = cert.jacobian_class[k] > 0 ? 1 : -1;
  cert.functional_index = k;
  cert.functional.assign(n, 0);
  cert.functional[k] = phi_sign;

  const auto& mons = algebra.cobasis().monomials;
  RationalMatrix form(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational value = 0;
      for (const auto& [idx, c] : algebra.ideal().monomial_coordinates(mons[i] * mons[j])) {
        if (idx == k) value = phi_sign * c;
      }
      form[i][j] = value;
      form[j][i] = value;
    }
  }
  const Inertia inertia = signature(std::move(form));
  if (inertia.zeros != 0) {
    throw Error(ErrorKind::DegenerateJacobianClass,
                "the residue form is degenerate (" + std::to_string(inertia.zeros) + " zero directions)");
  }
  cert.positives = inertia.positives;
  cert.negatives = inertia.negatives;
  cert.degree = static_cast<int>(inertia.positives) - static_cast<int>(inertia.negatives);
  return cert;
}

DegreeCertificate local_degree(const MapGerm& germ) { return local_degree(LocalAlgebra::build(germ)); }

}  // namespace cuspbif

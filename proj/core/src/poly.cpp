#include "cuspbif/poly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "cuspbif/errors.hpp"

namespace cuspbif {

// ---------------------------------------------------------------- Ambient

Ambient::Ambient(std::vector<std::string> names) {
  if (names.empty() || names.size() > kMaxVars) {
    throw Error(ErrorKind::InvalidArgument, "ambient must have between 1 and 3 variables");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) {
    throw Error(ErrorKind::InvalidArgument, "ambient variable names must be distinct");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

Ambient Ambient::tx() {
  static const Ambient a(std::vector<std::string>{"t", "x1", "x2"});
  return a;
}

Ambient Ambient::x() {
  static const Ambient a(std::vector<std::string>{"x1", "x2"});
  return a;
}

std::optional<std::size_t> Ambient::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i) {
    if ((*names_)[i] == name) return i;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw Error(ErrorKind::InvalidArgument, "too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorKind::InvalidArgument, "exponent overflow");
  }
  e_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (std::size_t i = 0; i < n_; ++i) d += e_[i];
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > other.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.set(i, unsigned{e_[i]} + other.e_[i]);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - other.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] != 0 && other.e_[i] != 0) return false;
  }
  return true;
}

int LocalOrdering::compare(const Monomial& a, const Monomial& b) noexcept {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) h = h * 1000003u + m[i];
  return h;
}

// ---------------------------------------------------------------- Poly

namespace {

void require_same_ambient(const Poly& a, const Poly& b) {
  if (!(a.ambient() == b.ambient())) {
    throw Error(ErrorKind::InvalidArgument, "polynomials live in different ambients");
  }
}

}  // namespace

Poly Poly::constant(Ambient ambient, const Rational& c) {
  Monomial one(ambient.size());
  return monomial(std::move(ambient), one, c);
}

Poly Poly::variable(Ambient ambient, std::size_t index) {
  if (index >= ambient.size()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  Monomial m(ambient.size());
  m.set(index, 1);
  return monomial(std::move(ambient), m, 1);
}

Poly Poly::monomial(Ambient ambient, const Monomial& m, const Rational& c) {
  Poly p(std::move(ambient));
  if (m.size() != p.ambient_.size()) throw Error(ErrorKind::InvalidArgument, "monomial arity mismatch");
  if (c != 0) {
    p.terms_.push_back({m, c});
    p.terms_.back().coeff.canonicalize();
  }
  return p;
}

Poly Poly::from_terms(Ambient ambient, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.mono.size() != ambient.size()) throw Error(ErrorKind::InvalidArgument, "monomial arity mismatch");
    t.coeff.canonicalize();
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return LocalOrdering::compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Poly(std::move(ambient), std::move(out));
}

Rational Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().mono.is_one()) return terms_.front().coeff;
  return 0;
}

int Poly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.back().mono.degree());
}

int Poly::order() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

Poly Poly::add_scaled(const Poly& other, const Rational& scalar) const {
  require_same_ambient(*this, other);
  const Rational c = canonical(scalar);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    int cmp;
    if (i == terms_.end()) {
      cmp = -1;
    } else if (j == other.terms_.end()) {
      cmp = 1;
    } else {
      cmp = LocalOrdering::compare(i->mono, j->mono);
    }
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back({j->mono, c * j->coeff});
      ++j;
    } else {
      Rational s = i->coeff + c * j->coeff;
      if (s != 0) out.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return Poly(ambient_, std::move(out));
}

Poly& Poly::operator+=(const Poly& other) { return *this = add_scaled(other, 1); }

Poly& Poly::operator-=(const Poly& other) { return *this = add_scaled(other, -1); }

Poly& Poly::operator*=(const Rational& scalar) {
  const Rational c = canonical(scalar);
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ambient(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return Poly::from_terms(a.ambient_, std::move(prod));
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& scalar) const {
  const Rational c = canonical(scalar);
  if (c == 0) return Poly(ambient_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono * m, t.coeff * c});
  return Poly(ambient_, std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ambient_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    const bool unit = (c == 1);
    if (!unit || t.mono.is_one()) {
      os << c.get_str();
    }
    bool need_star = !unit;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (need_star) os << "*";
      os << ambient_.name(v);
      if (t.mono[v] > 1) os << "^" << t.mono[v];
      need_star = true;
    }
  }
  return os.str();
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ambient_ == b.ambient_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

// ---------------------------------------------------------------- MapGerm

MapGerm::MapGerm(std::vector<Poly> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorKind::InvalidArgument, "map germ needs at least one component");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    require_same_ambient(components_.front(), components_[i]);
    if (components_[i].constant_term() != 0) {
      throw Error(ErrorKind::OriginNotMapped,
                  "component " + std::to_string(i + 1) + " does not vanish at the origin: " +
                      components_[i].to_string());
    }
  }
}

// ---------------------------------------------------------------- calculus

Poly partial(const Poly& p, std::size_t var) {
  if (var >= p.ambient().size()) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly::from_terms(p.ambient(), std::move(out));
}

Poly jacobian2(const Poly& p, const Poly& q, std::size_t v1, std::size_t v2) {
  if (v1 == v2) throw Error(ErrorKind::InvalidArgument, "jacobian2 needs two distinct variables");
  return partial(p, v1) * partial(q, v2) - partial(p, v2) * partial(q, v1);
}

Poly jacobian_det(const MapGerm& g) {
  if (!g.is_square()) throw Error(ErrorKind::InvalidArgument, "jacobian determinant needs a square germ");
  const std::size_t n = g.n_in();
  std::vector<std::vector<Poly>> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i].push_back(partial(g[i], j));
  }
  switch (n) {
    case 1:
      return d[0][0];
    case 2:
      return d[0][0] * d[1][1] - d[0][1] * d[1][0];
    default:
      return d[0][0] * (d[1][1] * d[2][2] - d[1][2] * d[2][1]) -
             d[0][1] * (d[1][0] * d[2][2] - d[1][2] * d[2][0]) +
             d[0][2] * (d[1][0] * d[2][1] - d[1][1] * d[2][0]);
  }
}

Poly jacobian3_det(const MapGerm& g) {
  if (!g.ambient().has_t() || g.n_in() != 3 || g.n_out() != 3) {
    throw Error(ErrorKind::InvalidArgument, "jacobian3_det needs a 3-component germ in (t, x1, x2)");
  }
  return jacobian_det(g);
}

Poly substitute_t_squared(const Poly& p) {
  if (!p.ambient().has_t()) throw Error(ErrorKind::InvalidArgument, "substitute_t_squared needs the t variable");
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    m.set(kT, 2 * m[kT]);
    out.push_back({m, t.coeff});
  }
  return Poly::from_terms(p.ambient(), std::move(out));
}

Poly set_t_zero(const Poly& p) {
  if (!p.ambient().has_t() || p.ambient().size() != 3) {
    throw Error(ErrorKind::InvalidArgument, "set_t_zero needs the (t, x1, x2) ambient");
  }
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono[kT] != 0) continue;
    out.push_back({Monomial{t.mono[kX1], t.mono[kX2]}, t.coeff});
  }
  return Poly::from_terms(Ambient::x(), std::move(out));
}

Poly substitute(const Poly& p, std::size_t var, const Poly& q) {
  require_same_ambient(p, q);
  // powers[e] = q^e, grown on demand.
  std::vector<Poly> powers{Poly::constant(p.ambient(), 1)};
  Poly result(p.ambient());
  for (const auto& t : p.terms()) {
    const unsigned e = t.mono[var];
    while (powers.size() <= e) powers.push_back(powers.back() * q);
    Monomial rest = t.mono;
    rest.set(var, 0);
    result += powers[e].mul_monomial(rest, t.coeff);
  }
  return result;
}

}  // namespace cuspbif

#include "cuspbif/standard_basis.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "cuspbif/errors.hpp"

namespace cuspbif {
namespace {

// Polynomials with primitive integer coefficients, terms sorted descending in
// the local ordering. Because that ordering compares total degree first, the
// terms are also sorted by ascending degree: the first term carries the lowest
// degree and the last term the highest.
struct ITerm {
  Monomial mono;
  Integer coeff;
};
using IPoly = std::vector<ITerm>;

constexpr unsigned kNoCorner = std::numeric_limits<unsigned>::max();
constexpr unsigned kTruncationAttempts[] = {12, 24, 48};
// Truncation degree of the basis kept to refute membership quickly when the
// quotient is infinite-dimensional.
constexpr unsigned kScreenTruncation = 24;

void truncate(IPoly& p, unsigned corner) {
  if (corner == kNoCorner) return;
  while (!p.empty() && p.back().mono.degree() >= corner) p.pop_back();
}

// Basis elements keep their leading term: a leading monomial of degree >= the
// corner is itself an element of the ideal.
void truncate_tail(IPoly& p, unsigned corner) {
  if (corner == kNoCorner) return;
  while (p.size() > 1 && p.back().mono.degree() >= corner) p.pop_back();
}

void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (p.front().coeff < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }
}

IPoly to_ipoly(const Poly& p) {
  Integer den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  IPoly out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Integer c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.mono, std::move(c)});
  }
  make_primitive(out);
  return out;
}

Poly to_poly(const Ambient& ambient, const IPoly& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.mono, Rational(t.coeff)});
  return Poly::from_terms(ambient, std::move(terms));
}

// cx * qx * x[1:] + cy * qy * y[1:], dropping terms of degree >= corner. The
// leading terms of the two scaled operands are assumed to cancel.
IPoly combine_tails(const IPoly& x, const Monomial& qx, const Integer& cx, const IPoly& y, const Monomial& qy,
                    const Integer& cy, unsigned corner) {
  IPoly out;
  out.reserve(x.size() + y.size());
  std::size_t i = 1;
  std::size_t j = 1;
  const bool x_one = qx.is_one();
  const bool y_one = qy.is_one();
  Monomial mx, my;
  while (i < x.size() || j < y.size()) {
    if (i < x.size()) mx = x_one ? x[i].mono : x[i].mono * qx;
    if (j < y.size()) my = y_one ? y[j].mono : y[j].mono * qy;
    int cmp;
    if (i >= x.size()) {
      cmp = -1;
    } else if (j >= y.size()) {
      cmp = 1;
    } else {
      cmp = LocalOrdering::compare(mx, my);
    }
    const Monomial& m = cmp >= 0 ? mx : my;
    if (m.degree() >= corner) break;  // every later term has at least this degree
    Integer c;
    if (cmp > 0) {
      c = cx * x[i++].coeff;
    } else if (cmp < 0) {
      c = cy * y[j++].coeff;
    } else {
      c = cx * x[i++].coeff + cy * y[j++].coeff;
    }
    if (c != 0) out.push_back({m, std::move(c)});
  }
  return out;
}

// Cancels the leading term of h against g (LM(g) divides LM(h)).
IPoly reduce_by(const IPoly& h, const IPoly& g, unsigned corner) {
  const Monomial q = h.front().mono / g.front().mono;
  Integer d;
  mpz_gcd(d.get_mpz_t(), h.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
  const Integer ch = g.front().coeff / d;
  const Integer cg = -(h.front().coeff / d);
  IPoly r = combine_tails(h, Monomial(h.front().mono.size()), ch, g, q, cg, corner);
  make_primitive(r);
  return r;
}

IPoly spoly(const IPoly& f, const IPoly& g, unsigned corner) {
  const Monomial l = Monomial::lcm(f.front().mono, g.front().mono);
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
  const Integer cf = g.front().coeff / d;
  const Integer cg = -(f.front().coeff / d);
  IPoly r = combine_tails(f, l / f.front().mono, cf, g, l / g.front().mono, cg, corner);
  make_primitive(r);
  return r;
}

// Lead reduction modulo a basis containing m^corner. The monomials of degree
// below the corner form a finite set, so any divisor makes progress.
IPoly truncated_normal_form(IPoly h, const std::vector<IPoly>& basis, unsigned corner) {
  truncate(h, corner);
  make_primitive(h);
  while (!h.empty()) {
    const Monomial& lm = h.front().mono;
    const IPoly* best = nullptr;
    for (const auto& g : basis) {
      if (g.front().mono.divides(lm) && (best == nullptr || g.size() < best->size())) best = &g;
    }
    if (best == nullptr) break;
    h = reduce_by(h, *best, corner);
  }
  return h;
}

bool in_monomial_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// Degree-bounded enumeration of all monomials in `nvars` variables with
// exponent of variable i below bound[i].
template <typename F>
void for_each_in_box(const std::vector<unsigned>& bound, F&& f) {
  const std::size_t n = bound.size();
  for (unsigned b : bound) {
    if (b == 0) return;
  }
  Monomial m(n);
  std::vector<unsigned> e(n, 0);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
    f(m);
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) return;
  }
}

// Exponent of the smallest pure power of each variable in the monomial ideal;
// nullopt when some variable has none.
std::optional<std::vector<unsigned>> pure_power_bounds(const std::vector<Monomial>& gens, std::size_t nvars) {
  std::vector<unsigned> bound(nvars, std::numeric_limits<unsigned>::max());
  for (const auto& g : gens) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (g[i] != 0) {
        ++support;
        var = i;
      }
    }
    if (support == 0) return std::vector<unsigned>(nvars, 0);
    if (support == 1) bound[var] = std::min(bound[var], g[var]);
  }
  for (unsigned b : bound) {
    if (b == std::numeric_limits<unsigned>::max()) return std::nullopt;
  }
  return bound;
}

std::vector<Monomial> monomials_below_degree(std::size_t nvars, unsigned corner) {
  std::vector<Monomial> out;
  for_each_in_box(std::vector<unsigned>(nvars, corner), [&](const Monomial& m) {
    if (m.degree() < corner) out.push_back(m);
  });
  return out;
}

// Calls f on every monomial of total degree d in nvars (1 to 3) variables.
template <typename F>
void for_each_of_degree(std::size_t nvars, unsigned d, F&& f) {
  Monomial m(nvars);
  if (nvars == 1) {
    m.set(0, d);
    f(m);
    return;
  }
  for (unsigned a = 0; a <= d; ++a) {
    if (nvars == 2) {
      m.set(0, a);
      m.set(1, d - a);
      f(m);
      continue;
    }
    for (unsigned b = 0; a + b <= d; ++b) {
      m.set(0, a);
      m.set(1, b);
      m.set(2, d - a - b);
      f(m);
    }
  }
}

// One more than the largest degree below `limit` of a monomial outside the
// monomial ideal; 0 when there is none.
unsigned corner_below(const std::vector<Monomial>& gens, std::size_t nvars, unsigned limit) {
  for (unsigned d = limit; d-- > 0;) {
    bool found = false;
    for_each_of_degree(nvars, d, [&](const Monomial& m) {
      if (!found && !in_monomial_ideal(m, gens)) found = true;
    });
    if (found) return d + 1;
  }
  return 0;
}

}  // namespace

std::optional<std::size_t> Cobasis::index_of(const Monomial& m) const {
  auto it = std::lower_bound(monomials.begin(), monomials.end(), m, DescendingLocal{});
  if (it != monomials.end() && *it == m) return static_cast<std::size_t>(it - monomials.begin());
  return std::nullopt;
}

std::optional<std::vector<Monomial>> staircase(const std::vector<Monomial>& generators, std::size_t nvars) {
  const auto bound = pure_power_bounds(generators, nvars);
  if (!bound) return std::nullopt;
  std::vector<Monomial> out;
  for_each_in_box(*bound, [&](const Monomial& m) {
    if (!in_monomial_ideal(m, generators)) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), DescendingLocal{});
  return out;
}

// ---------------------------------------------------------------- LocalIdeal

struct LocalIdeal::State {
  State(Ambient a, std::vector<Poly> g) : ambient(std::move(a)), generators(std::move(g)) {}

  Ambient ambient;
  std::vector<Poly> generators;

  std::once_flag basis_once;
  std::vector<IPoly> ibasis;  // minimal standard basis, internal form
  std::vector<Poly> basis;
  std::vector<Monomial> leads;
  // Bases of I + m^D, keyed by D (infinite codimension only).
  struct Screen {
    std::vector<IPoly> basis;
    unsigned corner;
  };
  std::mutex screen_mutex;
  std::map<unsigned, std::shared_ptr<const Screen>> screens;
  QuotientDim dim = QuotientDim::infinite();
  Cobasis cob;
  unsigned corner = kNoCorner;

  std::once_flag table_once;
  std::unordered_map<Monomial, SparseVector, MonomialHash> table;

  void compute_basis();
  void compute_table();
  std::shared_ptr<const Screen> screen(unsigned d);
  // Remainder of p modulo I + m^d; zero iff p lies there.
  IPoly screened_remainder(const IPoly& p, unsigned d) {
    const auto sc = screen(d);
    return truncated_normal_form(p, sc->basis, sc->corner);
  }
};

namespace {

// A queue entry: an input generator or a critical pair. Entries are processed
// by ascending sugar (the largest degree of a term of the polynomial to
// reduce), then by lead degree.
struct Item {
  enum class Kind { Generator, Pair };
  Kind kind = Kind::Generator;
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial lcm;
  IPoly poly;
  unsigned sugar = 0;
  unsigned degree = 0;
  std::size_t seq = 0;
};

bool item_before(const Item& a, const Item& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.degree != b.degree) return a.degree < b.degree;
  return a.seq < b.seq;
}

unsigned max_degree(const IPoly& p) { return p.back().mono.degree(); }

class TruncatedEngine {
 public:
  /// Computes a standard basis of I + m^D, discarding every term of degree
  /// >= D. Terms of degree >= the corner vanish, so plain lead reduction
  /// terminates.
  TruncatedEngine(std::size_t nvars, const std::vector<IPoly>& generators, unsigned truncation)
      : nvars_(nvars), corner_(truncation) {
    for (const auto& g : generators) {
      if (g.empty()) continue;
      Item it;
      it.kind = Item::Kind::Generator;
      it.poly = g;
      it.sugar = max_degree(g);
      it.degree = g.front().mono.degree();
      it.seq = seq_++;
      queue_.push_back(std::move(it));
    }
  }

  void run() {
    while (!queue_.empty()) {
      auto it = std::min_element(queue_.begin(), queue_.end(), item_before);
      Item item = std::move(*it);
      queue_.erase(it);
      IPoly h;
      if (item.kind == Item::Kind::Pair) {
        h = spoly(basis_[item.i], basis_[item.j], corner_);
      } else {
        h = std::move(item.poly);
        truncate(h, corner_);
        make_primitive(h);
      }
      reduce(std::move(h));
    }
  }

  unsigned corner() const { return corner_; }

  // Minimal basis: drop elements whose leading monomial is a multiple of
  // another's (keeping the first of equal leads).
  std::vector<IPoly> minimal_basis() const {
    std::vector<IPoly> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& li = basis_[i].front().mono;
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const Monomial& lj = basis_[j].front().mono;
        if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
      }
      if (!redundant) out.push_back(basis_[i]);
    }
    std::stable_sort(out.begin(), out.end(), [](const IPoly& a, const IPoly& b) {
      return LocalOrdering::compare(a.front().mono, b.front().mono) > 0;
    });
    return out;
  }

 private:
  void reduce(IPoly h) {
    while (!h.empty()) {
      const Monomial& lm = h.front().mono;
      const IPoly* best = nullptr;
      for (const auto& g : basis_) {
        if (g.front().mono.divides(lm) && (best == nullptr || g.size() < best->size())) best = &g;
      }
      if (best == nullptr) {
        add(std::move(h));
        return;
      }
      h = reduce_by(h, *best, corner_);
    }
  }

  void add(IPoly h) {
    const std::size_t k = basis_.size();
    const Monomial lh = h.front().mono;

    // Gebauer-Moeller: chain criterion on the queued pairs.
    std::erase_if(queue_, [&](const Item& p) {
      if (p.kind != Item::Kind::Pair || !lh.divides(p.lcm)) return false;
      const Monomial& li = basis_[p.i].front().mono;
      const Monomial& lj = basis_[p.j].front().mono;
      return !(Monomial::lcm(li, lh) == p.lcm) && !(Monomial::lcm(lj, lh) == p.lcm);
    });

    struct Fresh {
      std::size_t i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Fresh> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      const Monomial& li = basis_[i].front().mono;
      fresh.push_back({i, Monomial::lcm(li, lh), li.coprime(lh)});
    }
    // Criterion M: a fresh pair whose lcm is a proper multiple of another's.
    for (auto& a : fresh) {
      for (const auto& b : fresh) {
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    // Criterion F and the product criterion: among equal lcms keep at most one,
    // and none when any of them has coprime leading monomials.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!fresh[a].keep) continue;
      bool any_coprime = fresh[a].coprime;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (fresh[b].keep && fresh[b].lcm == fresh[a].lcm) {
          any_coprime = any_coprime || fresh[b].coprime;
          fresh[b].keep = false;
        }
      }
      if (any_coprime) fresh[a].keep = false;
    }

    basis_.push_back(std::move(h));
    for (const auto& f : fresh) {
      if (!f.keep) continue;
      Item it;
      it.kind = Item::Kind::Pair;
      it.i = f.i;
      it.j = k;
      it.lcm = f.lcm;
      const unsigned di = f.lcm.degree() - basis_[f.i].front().mono.degree() + max_degree(basis_[f.i]);
      const unsigned dk = f.lcm.degree() - lh.degree() + max_degree(basis_[k]);
      it.sugar = std::max(di, dk);
      it.degree = f.lcm.degree();
      it.seq = seq_++;
      queue_.push_back(std::move(it));
    }
    update_corner();
  }

  // Once the leading ideal contains every monomial of some degree N, the whole
  // power of the maximal ideal m^N lies in the ideal, so terms of degree >= N
  // can be discarded everywhere.
  void update_corner() {
    std::vector<Monomial> leads;
    leads.reserve(basis_.size());
    for (const auto& g : basis_) leads.push_back(g.front().mono);
    const unsigned corner = corner_below(leads, nvars_, corner_);
    if (corner >= corner_) return;
    corner_ = corner;
    for (auto& g : basis_) {
      truncate_tail(g, corner_);
      make_primitive(g);
    }
    std::erase_if(queue_, [&](const Item& p) { return p.degree >= corner_; });
    for (auto& p : queue_) p.sugar = std::min(p.sugar, corner_);
  }

  std::size_t nvars_;
  std::vector<IPoly> basis_;
  std::vector<Item> queue_;
  std::size_t seq_ = 0;
  unsigned corner_;
};

// Buchberger's algorithm on the homogenizations of the generators for the
// global order "degree, then higher power of the homogenizing variable h,
// then the local order on x". Dehomogenizing the result gives a standard basis
// of the local ideal. Polynomials are kept dehomogenized together with their
// homogeneous degree; the h-exponent of a term is that degree minus its own.
class LazardEngine {
 public:
  explicit LazardEngine(const std::vector<IPoly>& generators) {
    for (const auto& g : generators) {
      if (g.empty()) continue;
      IPoly p = g;
      make_primitive(p);
      pending_.push_back({max_degree(p), std::move(p)});
    }
  }

  void run() {
    while (!pending_.empty() || !pairs_.empty()) {
      // Lowest homogeneous degree first; generators before pairs on ties.
      auto gen = std::min_element(pending_.begin(), pending_.end(),
                                  [](const Element& a, const Element& b) { return a.degree < b.degree; });
      auto pair = std::min_element(pairs_.begin(), pairs_.end(),
                                   [](const Pair& a, const Pair& b) { return a.degree < b.degree; });
      if (gen != pending_.end() && (pair == pairs_.end() || gen->degree <= pair->degree)) {
        Element e = std::move(*gen);
        pending_.erase(gen);
        reduce(std::move(e));
      } else {
        const Pair pr = *pair;
        pairs_.erase(pair);
        reduce({pr.degree, spoly(basis_[pr.i].poly, basis_[pr.j].poly, kNoCorner)});
      }
    }
  }

  std::vector<IPoly> minimal_basis() const {
    std::vector<IPoly> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Monomial& li = basis_[i].poly.front().mono;
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const Monomial& lj = basis_[j].poly.front().mono;
        if (lj.divides(li) && (!(lj == li) || j < i)) redundant = true;
      }
      if (!redundant) out.push_back(basis_[i].poly);
    }
    std::stable_sort(out.begin(), out.end(), [](const IPoly& a, const IPoly& b) {
      return LocalOrdering::compare(a.front().mono, b.front().mono) > 0;
    });
    return out;
  }

 private:
  struct Element {
    unsigned degree;
    IPoly poly;
    unsigned h() const { return degree - poly.front().mono.degree(); }
  };
  struct Lead {
    Monomial x;
    unsigned h;
    bool divides(const Lead& o) const { return h <= o.h && x.divides(o.x); }
    bool operator==(const Lead& o) const { return h == o.h && x == o.x; }
  };
  struct Pair {
    std::size_t i;
    std::size_t j;
    Lead lcm;
    unsigned degree;
  };

  static Lead lcm(const Lead& a, const Lead& b) { return {Monomial::lcm(a.x, b.x), std::max(a.h, b.h)}; }
  static Lead lead(const Element& e) { return {e.poly.front().mono, e.h()}; }

  void reduce(Element e) {
    while (!e.poly.empty()) {
      const Lead le = lead(e);
      const Element* best = nullptr;
      for (const auto& g : basis_) {
        if (lead(g).divides(le) && (best == nullptr || g.poly.size() < best->poly.size())) best = &g;
      }
      if (best == nullptr) {
        add(std::move(e));
        return;
      }
      e.poly = reduce_by(e.poly, best->poly, kNoCorner);
    }
  }

  void add(Element e) {
    const std::size_t k = basis_.size();
    const Lead lk = lead(e);
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lk.divides(p.lcm)) return false;
      return !(lcm(lead(basis_[p.i]), lk) == p.lcm) && !(lcm(lead(basis_[p.j]), lk) == p.lcm);
    });
    struct Fresh {
      std::size_t i;
      Lead lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Fresh> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      const Lead li = lead(basis_[i]);
      fresh.push_back({i, lcm(li, lk), li.x.coprime(lk.x) && (li.h == 0 || lk.h == 0)});
    }
    for (auto& a : fresh) {
      for (const auto& b : fresh) {
        if (&a != &b && b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.keep = false;
          break;
        }
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!fresh[a].keep) continue;
      bool any_coprime = fresh[a].coprime;
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (fresh[b].keep && fresh[b].lcm == fresh[a].lcm) {
          any_coprime = any_coprime || fresh[b].coprime;
          fresh[b].keep = false;
        }
      }
      if (any_coprime) fresh[a].keep = false;
    }
    basis_.push_back(std::move(e));
    for (const auto& f : fresh) {
      if (f.keep) pairs_.push_back({f.i, k, f.lcm, f.lcm.x.degree() + f.lcm.h});
    }
  }

  std::vector<Element> basis_;
  std::vector<Element> pending_;
  std::vector<Pair> pairs_;
};

}  // namespace

void LocalIdeal::State::compute_basis() {
  std::vector<IPoly> inputs;
  for (const auto& g : generators) {
    if (!g.is_zero()) inputs.push_back(to_ipoly(g));
  }
  // First work modulo m^D for growing D. When the leading ideal of I + m^D
  // contains every monomial of degree D - 1, Nakayama's lemma gives
  // m^(D-1) inside I, so the truncated basis is a standard basis of I itself.
  // Otherwise (infinite codimension, or a corner beyond the last attempt) use
  // the homogenized computation.
  bool certified = false;
  for (unsigned d : kTruncationAttempts) {
    TruncatedEngine engine(ambient.size(), inputs, d);
    engine.run();
    if (engine.corner() < d) {
      ibasis = engine.minimal_basis();
      certified = true;
      break;
    }
    if (d == kScreenTruncation) {
      auto sc = std::make_shared<Screen>();
      sc->basis = engine.minimal_basis();
      sc->corner = engine.corner();
      screens.emplace(d, std::move(sc));
    }
  }
  if (!certified) {
    LazardEngine engine(inputs);
    engine.run();
    ibasis = engine.minimal_basis();
  }
  for (const auto& g : ibasis) {
    basis.push_back(to_poly(ambient, g));
    leads.push_back(g.front().mono);
  }
  if (auto stairs = staircase(leads, ambient.size())) {
    dim = QuotientDim::finite(stairs->size());
    cob.monomials = std::move(*stairs);
    corner = 0;
    for (const auto& m : cob.monomials) corner = std::max(corner, m.degree() + 1);
  }
}

// Coordinates of every monomial of degree below the corner. Monomials are
// processed from the smallest up; a leading monomial u = q * LM(g) is rewritten
// as -q * tail(g) / LC(g), whose monomials are all smaller than u and therefore
// already resolved.
void LocalIdeal::State::compute_table() {
  for (std::size_t i = 0; i < cob.size(); ++i) table[cob.monomials[i]] = SparseVector{{i, Rational(1)}};
  std::vector<Monomial> pending;
  for (const auto& m : monomials_below_degree(ambient.size(), corner)) {
    if (!cob.index_of(m)) pending.push_back(m);
  }
  std::sort(pending.begin(), pending.end(), [](const Monomial& a, const Monomial& b) {
    return LocalOrdering::compare(a, b) < 0;
  });
  std::vector<Rational> acc(cob.size());
  std::vector<bool> touched(cob.size(), false);
  std::vector<std::size_t> touched_list;
  for (const auto& u : pending) {
    const IPoly* reducer = nullptr;
    for (const auto& g : ibasis) {
      if (g.front().mono.divides(u)) {
        reducer = &g;
        break;
      }
    }
    const Monomial q = u / reducer->front().mono;
    const Rational scale = Rational(-1) / Rational(reducer->front().coeff);
    for (std::size_t k = 1; k < reducer->size(); ++k) {
      const Monomial w = (*reducer)[k].mono * q;
      if (w.degree() >= corner) break;
      const Rational c = scale * Rational((*reducer)[k].coeff);
      for (const auto& [idx, v] : table.at(w)) {
        if (!touched[idx]) {
          touched[idx] = true;
          touched_list.push_back(idx);
        }
        acc[idx] += c * v;
      }
    }
    std::sort(touched_list.begin(), touched_list.end());
    SparseVector vec;
    for (std::size_t idx : touched_list) {
      if (acc[idx] != 0) vec.emplace_back(idx, acc[idx]);
      acc[idx] = 0;
      touched[idx] = false;
    }
    touched_list.clear();
    table.emplace(u, std::move(vec));
  }
}

LocalIdeal::LocalIdeal(std::vector<Poly> generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "LocalIdeal needs an ambient or a generator");
  Ambient a = generators.front().ambient();
  for (const auto& g : generators) {
    if (!(g.ambient() == a)) throw Error(ErrorKind::InvalidArgument, "ideal generators live in different ambients");
  }
  state_ = std::make_shared<State>(std::move(a), std::move(generators));
}

LocalIdeal::LocalIdeal(Ambient ambient, std::vector<Poly> generators) {
  for (const auto& g : generators) {
    if (!(g.ambient() == ambient)) {
      throw Error(ErrorKind::InvalidArgument, "ideal generators live in different ambients");
    }
  }
  state_ = std::make_shared<State>(std::move(ambient), std::move(generators));
}

const Ambient& LocalIdeal::ambient() const noexcept { return state_->ambient; }

const std::vector<Poly>& LocalIdeal::generators() const noexcept { return state_->generators; }

const std::vector<Poly>& LocalIdeal::standard_basis() const {
  std::call_once(state_->basis_once, [this] { state_->compute_basis(); });
  return state_->basis;
}

std::vector<Monomial> LocalIdeal::lead_monomials() const {
  standard_basis();
  return state_->leads;
}

QuotientDim LocalIdeal::quotient_dim() const {
  standard_basis();
  return state_->dim;
}

const Cobasis& LocalIdeal::cobasis() const {
  standard_basis();
  if (!state_->dim.is_finite()) {
    throw Error(ErrorKind::DimensionInfinite, "quotient by the ideal is infinite-dimensional");
  }
  return state_->cob;
}

std::optional<unsigned> LocalIdeal::corner_degree() const {
  standard_basis();
  if (!state_->dim.is_finite()) return std::nullopt;
  return state_->corner;
}

const SparseVector& LocalIdeal::monomial_coordinates(const Monomial& m) const {
  cobasis();
  std::call_once(state_->table_once, [this] { state_->compute_table(); });
  static const SparseVector kZero;
  if (m.degree() >= state_->corner) return kZero;
  return state_->table.at(m);
}

SparseVector LocalIdeal::coordinates(const Poly& p) const {
  if (!(p.ambient() == state_->ambient)) throw Error(ErrorKind::InvalidArgument, "polynomial ambient mismatch");
  std::vector<Rational> acc(cobasis().size());
  for (const auto& t : p.terms()) {
    for (const auto& [idx, v] : monomial_coordinates(t.mono)) acc[idx] += t.coeff * v;
  }
  SparseVector out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) out.emplace_back(i, std::move(acc[i]));
  }
  return out;
}

std::shared_ptr<const LocalIdeal::State::Screen> LocalIdeal::State::screen(unsigned d) {
  std::lock_guard<std::mutex> lock(screen_mutex);
  auto it = screens.find(d);
  if (it != screens.end()) return it->second;
  std::vector<IPoly> inputs;
  for (const auto& g : generators) {
    if (!g.is_zero()) inputs.push_back(to_ipoly(g));
  }
  TruncatedEngine engine(ambient.size(), inputs, d);
  engine.run();
  auto sc = std::make_shared<Screen>();
  sc->basis = engine.minimal_basis();
  sc->corner = engine.corner();
  return screens.emplace(d, std::move(sc)).first->second;
}

// For finite codimension this is the reduced representative on the cobasis.
// Otherwise: zero for members, and for non-members the weak normal form modulo
// I + m^D for the first D of the screening sequence that separates p from I.
Poly LocalIdeal::normal_form(const Poly& p) const {
  if (!(p.ambient() == state_->ambient)) throw Error(ErrorKind::InvalidArgument, "polynomial ambient mismatch");
  standard_basis();
  if (state_->dim.is_finite()) {
    std::vector<Term> terms;
    for (auto& [idx, v] : coordinates(p)) terms.push_back({state_->cob.monomials[idx], v});
    return Poly::from_terms(state_->ambient, std::move(terms));
  }
  if (contains(p)) return Poly(state_->ambient);
  // Some I + m^D misses p, by Krull's intersection theorem.
  for (unsigned d = kScreenTruncation;; d += kScreenTruncation) {
    IPoly r = state_->screened_remainder(to_ipoly(p), d);
    if (!r.empty()) return to_poly(state_->ambient, r);
  }
}

// For infinite codimension: p outside I + m^D refutes membership cheaply;
// otherwise the leading ideals of I and I + <p> are compared.
bool LocalIdeal::contains(const Poly& p) const {
  if (!(p.ambient() == state_->ambient)) throw Error(ErrorKind::InvalidArgument, "polynomial ambient mismatch");
  standard_basis();
  if (p.is_zero()) return true;
  if (state_->dim.is_finite()) return truncated_normal_form(to_ipoly(p), state_->ibasis, state_->corner).empty();

  const IPoly ip = to_ipoly(p);
  if (!state_->screened_remainder(ip, kScreenTruncation).empty()) return false;

  std::vector<IPoly> inputs;
  for (const auto& g : state_->generators) {
    if (!g.is_zero()) inputs.push_back(to_ipoly(g));
  }
  inputs.push_back(ip);
  LazardEngine engine(inputs);
  engine.run();
  std::vector<Monomial> leads;
  for (const auto& g : engine.minimal_basis()) leads.push_back(g.front().mono);
  return leads == state_->leads;
}

}  // namespace cuspbif

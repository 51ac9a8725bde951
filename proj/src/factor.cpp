#include "dcrep/factor.hpp"

#include <algorithm>
#include <map>

namespace dcrep {

namespace {

using PolyGF = Polynomial<GF>;

bool canonical_less(const PolyGF& a, const PolyGF& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto ca = a.coeffs()[i].code(), cb = b.coeffs()[i].code();
    if (ca != cb) return ca < cb;
  }
  return false;
}

/// p-th root of a polynomial whose exponents are all divisible by p.
PolyGF pth_root(const PolyGF& f) {
  const auto& field = f.zero_element().field();
  const int p = field.p();
  Integer e = 1;
  for (int i = 1; i < field.k(); ++i) e *= p;  // a -> a^(p^(k-1)) inverts Frobenius
  std::vector<GF> c;
  for (std::size_t i = 0; i < f.coeffs().size(); i += static_cast<std::size_t>(p)) c.push_back(f.coeffs()[i].pow(e));
  return PolyGF(std::move(c), f.zero_element());
}

Integer field_size_power(const GaloisField& field, int d) {
  Integer q = Integer(field.q());
  Integer out = 1;
  for (int i = 0; i < d; ++i) out *= q;
  return out;
}

PolyGF random_poly(const PolyGF& like, int degree_below, Rng& rng) {
  std::vector<GF> c;
  for (int i = 0; i < degree_below; ++i) c.push_back(FieldOps<GF>::random(like.zero_element(), rng));
  return PolyGF(std::move(c), like.zero_element());
}

/// Split a monic squarefree product of irreducibles of degree d.
void equal_degree_split(const PolyGF& g, int d, Rng& rng, std::vector<PolyGF>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto& field = g.zero_element().field();
  const GF one = g.zero_element().one();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const PolyGF a = random_poly(g, g.degree(), rng);
    if (a.degree() < 1) continue;
    PolyGF b(g.zero_element());
    if (field.p() == 2) {
      // trace map a + a^2 + ... + a^(2^(k d - 1))
      PolyGF t = a % g, acc = a % g;
      for (int i = 1; i < field.k() * d; ++i) {
        t = (t * t) % g;
        acc += t;
      }
      b = acc;
    } else {
      const Integer e = (field_size_power(field, d) - 1) / 2;
      b = powmod(a, e, g) - PolyGF::constant(one);
    }
    const PolyGF h = gcd(b, g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split((g / h).monic(), d, rng, out);
      return;
    }
  }
  throw CheckFailure("equal-degree splitting did not converge");
}

}  // namespace

Factorization<GF> squarefree_decomposition(const PolyGF& f_in) {
  if (f_in.is_zero()) throw InvalidInput("squarefree decomposition of zero");
  const PolyGF f = f_in.monic();
  Factorization<GF> out;
  if (f.degree() == 0) return out;
  const int p = f.zero_element().field().p();
  PolyGF c = gcd(f, f.derivative());
  PolyGF w = (f / c).monic();
  int i = 1;
  while (w.degree() > 0) {
    const PolyGF y = gcd(w, c);
    const PolyGF fac = (w / y).monic();
    if (fac.degree() > 0) out.emplace_back(fac, i);
    w = y;
    c = (c / y).monic();
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c))) out.emplace_back(g, m * p);
  }
  return out;
}

std::vector<std::pair<PolyGF, int>> distinct_degree_factorization(const PolyGF& f_in) {
  std::vector<std::pair<PolyGF, int>> out;
  PolyGF f = f_in.monic();
  const auto& field = f.zero_element().field();
  const PolyGF x = PolyGF::x(f.zero_element());
  PolyGF h = x % f;
  int d = 0;
  while (f.degree() >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Integer(field.q()), f);
    const PolyGF g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = (f / g).monic();
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

bool is_irreducible(const PolyGF& f) {
  if (f.degree() < 1) return false;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  const auto ddf = distinct_degree_factorization(f);
  return ddf.size() == 1 && ddf.front().second == f.degree();
}

Factorization<GF> factor_squarefree_finite(const PolyGF& f, std::uint64_t seed) {
  if (f.is_zero()) throw InvalidInput("cannot factor the zero polynomial");
  Rng rng(seed);
  std::map<std::vector<GF::code_type>, std::pair<PolyGF, int>> merged;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    for (const auto& [block, d] : distinct_degree_factorization(part)) {
      std::vector<PolyGF> pieces;
      equal_degree_split(block, d, rng, pieces);
      for (auto& piece : pieces) {
        std::vector<GF::code_type> key;
        for (const auto& c : piece.coeffs()) key.push_back(c.code());
        auto [it, fresh] = merged.try_emplace(key, piece, 0);
        it->second.second += mult;
      }
    }
  }
  Factorization<GF> out;
  for (auto& [key, entry] : merged) out.push_back(entry);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

Factorization<Rational> factor_squarefree_finite(const Polynomial<Rational>&, std::uint64_t) {
  throw InvalidInput("factor_squarefree_finite requires a finite field, got Q");
}

Factorization<Cyclotomic> factor_squarefree_finite(const Polynomial<Cyclotomic>&, std::uint64_t) {
  throw InvalidInput("factor_squarefree_finite requires a finite field, got a cyclotomic field");
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

RationalRoots rational_roots(const Polynomial<Rational>& f_in) {
  if (f_in.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  using PolyQ = Polynomial<Rational>;
  PolyQ f = f_in.monic();
  RationalRoots out{{}, f};
  std::map<Rational, int> found;
  // strip zero roots
  while (f.degree() > 0 && f.coeffs()[0].is_zero()) {
    ++found[Rational(0)];
    f = f / PolyQ::x(Rational());
  }
  bool progress = true;
  while (progress && f.degree() > 0) {
    progress = false;
    Integer lcm = 1;
    for (const auto& c : f.coeffs()) {
      const Integer den = c.denominator();
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    const Integer a0 = (f.coeffs().front() * Rational(lcm)).numerator();
    const Integer an = (f.leading() * Rational(lcm)).numerator();
    for (const auto& num : positive_divisors(a0)) {
      for (const auto& den : positive_divisors(an)) {
        for (int sign : {1, -1}) {
          const Rational r(sign * num, den);
          if (f(r).is_zero()) {
            ++found[r];
            f = f / PolyQ::linear(r);
            progress = true;
            break;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  for (const auto& [r, m] : found) out.roots.emplace_back(r, m);
  out.remainder = f.monic();
  return out;
}

LinearSplit<GF> FieldOps<GF>::split(const Polynomial<GF>& f, Rng& rng) {
  LinearSplit<GF> out;
  for (const auto& [g, m] : factor_squarefree_finite(f, rng())) {
    if (g.degree() == 1)
      out.roots.emplace_back(-g.coeffs()[0], m);
    else
      out.nonlinear_degrees.push_back(g.degree());
  }
  return out;
}

std::string FieldOps<GF>::describe(const GF& like) {
  const auto& f = like.field();
  return f.k() == 1 ? "GF(" + std::to_string(f.p()) + ")"
                    : "GF(" + std::to_string(f.p()) + "^" + std::to_string(f.k()) + ")";
}

LinearSplit<Rational> FieldOps<Rational>::split(const Polynomial<Rational>& f, Rng&) {
  LinearSplit<Rational> out;
  const auto rr = rational_roots(f);
  out.roots = rr.roots;
  if (rr.remainder.degree() > 0) out.nonlinear_degrees.push_back(rr.remainder.degree());
  return out;
}

}  // namespace dcrep

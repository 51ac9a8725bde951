#include <doctest.h>

#include <random>

#include "dcrep/factor.hpp"
#include "dcrep/field_spec.hpp"
#include "dcrep/linalg.hpp"
#include "dcrep/polynomial.hpp"

using namespace dcrep;

namespace {

GF gf(int p, long long v) { return GF::from_int(galois_field(p, 1), v); }

Matrix<GF> gf_matrix(int p, const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<GF>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (auto v : row) r.back().push_back(gf(p, v));
  }
  return Matrix<GF>::from_rows(r, gf(p, 0));
}

Polynomial<GF> gf_poly(int p, const std::vector<long long>& c) {
  std::vector<GF> v;
  for (auto x : c) v.push_back(gf(p, x));
  return Polynomial<GF>(v, gf(p, 0));
}

Matrix<Rational> q_matrix(const std::vector<std::vector<long long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (auto v : row) r.back().push_back(Rational(v));
  }
  return Matrix<Rational>::from_rows(r, Rational());
}

}  // namespace

TEST_CASE("finite field tables") {
  for (int p : {2, 3, 5, 7, 13, 97}) {
    for (int k = 1; k <= 3; ++k) {
      const auto& f = galois_field(p, k);
      CHECK(f.multiplicative_order(f.generator()) == f.q() - 1);
      if (f.q() < 3000) {
        for (GF::code_type a = 1; a < f.q(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
      }
    }
  }
  CHECK(galois_field(7, 1).generator() == 3);
  CHECK(galois_field(5, 1).generator() == 2);
  CHECK_THROWS_AS(galois_field(101, 1), InvalidInput);
  CHECK_THROWS_AS(galois_field(4, 1), InvalidInput);
  CHECK_THROWS_AS(galois_field(5, 5), InvalidInput);
}

TEST_CASE("large extension uses the non-table path consistently") {
  const auto& f = galois_field(97, 4);
  GF a(f, GF::code_type{12345}), b(f, GF::code_type{999});
  CHECK((a * b) / b == a);
  CHECK(a.pow(Integer(f.q() - 1)).is_one());
  CHECK(f.pow(f.generator(), Integer(f.log(a.code()))) == a.code());
}

TEST_CASE("cyclotomic identities for n <= 24") {
  for (int n = 1; n <= 24; ++n) {
    const auto& f = cyclotomic_field(n);
    CHECK(f.degree() == euler_phi(n));
    const auto z = Cyclotomic::zeta_power(f, 1);
    auto acc = z.one();
    for (int i = 0; i < n; ++i) acc *= z;
    CHECK(acc.is_one());
    // Phi_n(zeta) = 0
    auto val = z.zero();
    auto pw = z.one();
    for (auto c : f.cyclotomic_polynomial()) {
      val += pw * z.from_int(c);
      pw *= z;
    }
    CHECK(val.is_zero());
    if (n > 1) CHECK((z * z.inv()).is_one());
  }
  CHECK_THROWS_AS(cyclotomic_field(65), InvalidInput);
}

TEST_CASE("solve_linear examples") {
  SUBCASE("identity") {
    const auto m = q_matrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const auto s = solve_linear(m, {Rational(1), Rational(2), Rational(3)});
    REQUIRE(s.particular);
    CHECK(*s.particular == Vec<Rational>{1, 2, 3});
    CHECK(s.kernel.empty());
  }
  SUBCASE("zero map") {
    const auto m = q_matrix({{0, 0}, {0, 0}});
    const auto s = solve_linear(m, {Rational(0), Rational(0)});
    CHECK(s.particular);
    CHECK(s.kernel.size() == 2);
  }
  SUBCASE("inconsistent over F5") {
    const auto m = gf_matrix(5, {{1, 2}, {2, 4}});
    const auto s = solve_linear(m, {gf(5, 1), gf(5, 3)});
    CHECK_FALSE(s.particular);
    // exhaustive oracle over F5^2
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y) CHECK(m.apply({gf(5, x), gf(5, y)}) != Vec<GF>{gf(5, 1), gf(5, 3)});
  }
  SUBCASE("errors") {
    const auto m = q_matrix({{1, 2}});
    CHECK_THROWS_AS(solve_linear(m, {Rational(1), Rational(2)}), InvalidInput);
    const auto g = gf_matrix(5, {{1}});
    CHECK_THROWS_AS(solve_linear(g, {gf(7, 1)}), InvalidInput);
  }
}

TEST_CASE("solve_linear property on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = trial % 2 ? 5 : 7;
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix<GF> m(r, c, gf(p, 0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gf(p, static_cast<long long>(rng() % 3 == 0 ? 0 : rng() % p));
    Vec<GF> b;
    for (std::size_t i = 0; i < r; ++i) b.push_back(gf(p, static_cast<long long>(rng() % p)));
    const auto s = solve_linear(m, b);
    if (s.particular) CHECK(m.apply(*s.particular) == b);
    for (const auto& k : s.kernel) CHECK(m.apply(k) == Vec<GF>(r, gf(p, 0)));
    CHECK(s.kernel.size() + rank(m) == c);
    if (!s.kernel.empty()) CHECK(rank(Matrix<GF>::from_columns(s.kernel, c, gf(p, 0))) == s.kernel.size());
  }
}

TEST_CASE("inverse and determinant") {
  const auto m = q_matrix({{2, 1}, {7, 4}});
  CHECK(determinant(m) == Rational(1));
  CHECK(m * inverse(m) == Matrix<Rational>::identity(2, Rational()));
  CHECK_THROWS_AS(inverse(q_matrix({{1, 2}, {2, 4}})), CheckFailure);
}

TEST_CASE("minimal polynomial examples") {
  const auto id = Matrix<Rational>::identity(4, Rational());
  CHECK(minimal_polynomial(id) == Polynomial<Rational>({Rational(-1), Rational(1)}, Rational()));
  const auto jordan = q_matrix({{0, 1}, {0, 0}});
  CHECK(minimal_polynomial(jordan) == Polynomial<Rational>({Rational(0), Rational(0), Rational(1)}, Rational()));
  const auto f = gf_poly(5, {1, 0, 1});
  const auto comp = companion_matrix(f);
  CHECK(minimal_polynomial(comp) == f);
  // no monic degree-1 polynomial annihilates the companion matrix
  for (int c = 0; c < 5; ++c) CHECK_FALSE(evaluate(gf_poly(5, {c, 1}), comp).is_zero());
  CHECK_THROWS_AS(minimal_polynomial(q_matrix({{1, 2}})), InvalidInput);
}

TEST_CASE("minimal polynomial: no maximal proper divisor annihilates") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    Matrix<GF> m(n, n, gf(7, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gf(7, static_cast<long long>(rng() % 4 == 0 ? rng() % 7 : 0));
    const auto mp = minimal_polynomial(m);
    CHECK(evaluate(mp, m).is_zero());
    for (const auto& [g, mult] : factor_squarefree_finite(mp, 0)) {
      (void)mult;
      CHECK_FALSE(evaluate(mp / g, m).is_zero());
    }
  }
}

TEST_CASE("factorization examples") {
  SUBCASE("x^2+1 over F5") {
    const auto fac = factor_squarefree_finite(gf_poly(5, {1, 0, 1}), 0);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == gf_poly(5, {2, 1}));
    CHECK(fac[1].first == gf_poly(5, {3, 1}));
  }
  SUBCASE("x^2+1 over F7") {
    const auto f = gf_poly(7, {1, 0, 1});
    CHECK(is_irreducible(f));
    for (int r = 0; r < 7; ++r) CHECK_FALSE(f(gf(7, r)).is_zero());
    const auto fac = factor_squarefree_finite(f, 0);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].second == 1);
  }
  SUBCASE("x^3-x over F3") {
    const auto fac = factor_squarefree_finite(gf_poly(3, {0, -1, 0, 1}), 0);
    REQUIRE(fac.size() == 3);
    CHECK(fac[0].first == gf_poly(3, {0, 1}));
    CHECK(fac[1].first == gf_poly(3, {1, 1}));
    CHECK(fac[2].first == gf_poly(3, {2, 1}));
  }
  SUBCASE("non-finite field rejected") {
    CHECK_THROWS_AS(factor_squarefree_finite(Polynomial<Rational>({Rational(1), Rational(1)}, Rational()), 0),
                    InvalidInput);
  }
}

TEST_CASE("factorization reproduces the input for random polynomials and seeds") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const int p = std::vector<int>{2, 3, 5, 7, 13}[trial % 5];
    const int k = 1 + trial % 2;
    const auto& field = galois_field(p, k);
    std::vector<GF> c;
    const int deg = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i <= deg; ++i) c.push_back(GF(field, static_cast<GF::code_type>(rng() % field.q())));
    c.back() = GF(field, GF::code_type{1});
    const Polynomial<GF> f(c, c[0]);
    // a square factor now and then to exercise the squarefree step
    const Polynomial<GF> g = trial % 4 == 0 ? f * f : f;
    const auto fac0 = factor_squarefree_finite(g, 0);
    const auto fac1 = factor_squarefree_finite(g, 12345);
    CHECK(fac0 == fac1);
    Polynomial<GF> prod = Polynomial<GF>::constant(c[0].one());
    for (const auto& [h, m] : fac0) {
      CHECK(is_irreducible(h));
      for (int i = 0; i < m; ++i) prod = prod * h;
    }
    CHECK(prod == g.monic());
  }
}

TEST_CASE("rational roots") {
  using P = Polynomial<Rational>;
  // (2x - 1)(x + 3) x^2 (x^2 + 1)
  P f({Rational(-1), Rational(2)}, Rational());
  f = f * P({Rational(3), Rational(1)}, Rational());
  f = f * P({Rational(0), Rational(0), Rational(1)}, Rational());
  f = f * P({Rational(1), Rational(0), Rational(1)}, Rational());
  const auto rr = rational_roots(f);
  REQUIRE(rr.roots.size() == 3);
  CHECK(rr.roots[0] == std::pair<Rational, int>{Rational(-3), 1});
  CHECK(rr.roots[1] == std::pair<Rational, int>{Rational(0), 2});
  CHECK(rr.roots[2] == std::pair<Rational, int>{Rational(Integer(1), Integer(2)), 1});
  CHECK(rr.remainder.degree() == 2);
}

TEST_CASE("field spec parsing") {
  CHECK(FieldSpec::parse("Q").kind == FieldSpec::Kind::rationals);
  CHECK(FieldSpec::parse("GF(7)") == FieldSpec::finite(7));
  CHECK(FieldSpec::parse("GF(5^2)") == FieldSpec::finite(5, 2));
  CHECK(FieldSpec::parse("cyclotomic(12)") == FieldSpec::cyclotomic(12));
  CHECK(FieldSpec::from_json(FieldSpec::finite(3, 2).to_json()) == FieldSpec::finite(3, 2));
  CHECK_THROWS_AS(FieldSpec::parse("GF(6)"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::parse("R"), InvalidInput);
  CHECK_THROWS_AS(FieldSpec::parse("cyclotomic(100)"), InvalidInput);
}

#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcrep/clifford.hpp"
#include "test_util.hpp"

using namespace dcrep;
using testutil::klein;

namespace {

GF gf(int p, long long v) { return GF::from_int(galois_field(p, 1), v); }

// Klein four group with X = id 1, Z = id 2: rho_x rho_y = (-1)^{x_1 y_0} rho_{x+y}
template <class T>
FactorSet<T> pauli(const T& like) {
  std::vector<std::vector<T>> v(4, std::vector<T>(4, like.one()));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if (((a >> 1) & 1) && (b & 1)) v[a][b] = -like.one();
  return FactorSet<T>(klein(), v);
}

template <class T>
FactorSet<T> from_values(const FiniteGroup& g, const std::vector<std::vector<long long>>& vals, const T& like) {
  std::vector<std::vector<T>> v;
  for (const auto& r : vals) {
    v.emplace_back();
    for (auto x : r) v.back().push_back(like.from_int(x));
  }
  return FactorSet<T>(g, v);
}

std::vector<std::size_t> dims_of(const auto& mods) {
  std::vector<std::size_t> d;
  for (const auto& m : mods) d.push_back(m.dim);
  return d;
}

// brute-force cocycle check on one triple, written out independently
bool triple_ok(const FactorSet<GF>& f, Elem a, Elem b, Elem c) {
  const auto& g = f.group();
  return f(a, b) * f(g.mul(a, b), c) == f(a, g.mul(b, c)) * f(b, c);
}

}  // namespace

TEST_CASE("validate_factor_set examples") {
  const GF one = gf(5, 1);
  CHECK_FALSE(validate_factor_set(FactorSet<GF>::trivial(FiniteGroup::cyclic(2), one)));
  const auto p = pauli(one);
  CHECK_FALSE(validate_factor_set(p));
  int checked = 0;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      for (Elem c = 0; c < 4; ++c, ++checked) CHECK(triple_ok(p, a, b, c));
  CHECK(checked == 64);

  // Pauli matrices X, Z over F5 realize the table
  const auto X = Matrix<GF>::from_rows({{gf(5, 0), gf(5, 1)}, {gf(5, 1), gf(5, 0)}}, one);
  const auto Z = Matrix<GF>::from_rows({{gf(5, 1), gf(5, 0)}, {gf(5, 0), gf(5, -1)}}, one);
  const std::vector<Matrix<GF>> rep{Matrix<GF>::identity(2, one), X, Z, X * Z};
  CHECK(satisfies_relations(TwistedGroupAlgebra<GF>(p), rep));

  // break one value of the cyclic group of order 3
  auto vals = std::vector<std::vector<long long>>(3, std::vector<long long>(3, 1));
  vals[1][2] = 2;
  const auto bad = from_values(FiniteGroup::cyclic(3), vals, one);
  const auto v = validate_factor_set(bad);
  REQUIRE(v);
  CHECK(v->kind == "cocycle");
  // first violating triple in id order, by brute force
  bool found = false;
  for (Elem a = 0; a < 3 && !found; ++a)
    for (Elem b = 0; b < 3 && !found; ++b)
      for (Elem c = 0; c < 3 && !found; ++c)
        if (!triple_ok(bad, a, b, c)) {
          CHECK(v->a == a);
          CHECK(v->b == b);
          CHECK(v->c == c);
          found = true;
        }
  CHECK(found);
  CHECK_THROWS_AS(TwistedGroupAlgebra<GF>{bad}, InvalidInput);

  vals = std::vector<std::vector<long long>>(3, std::vector<long long>(3, 1));
  vals[0][1] = 3;
  CHECK(validate_factor_set(from_values(FiniteGroup::cyclic(3), vals, one))->kind == "normalization");
  vals[0][1] = 0;
  CHECK_THROWS_AS(from_values(FiniteGroup::cyclic(3), vals, one), InvalidInput);
}

TEST_CASE("associativity holds exactly when the cocycle identity does") {
  std::mt19937_64 rng(7);
  const GF one = gf(7, 1);
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), klein(), testutil::fixture_group("S3_A3")}) {
    int valid = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = g.order();
      std::vector<std::vector<GF>> v(n, std::vector<GF>(n, one));
      if (trial % 2 == 0) {
        // random normalized table
        for (Elem a = 1; a < n; ++a)
          for (Elem b = 1; b < n; ++b) v[a][b] = gf(7, 1 + static_cast<long long>(rng() % 6));
      } else {
        // random coboundary, always a cocycle
        std::vector<GF> t(n, one);
        for (Elem a = 1; a < n; ++a) t[a] = gf(7, 1 + static_cast<long long>(rng() % 6));
        v = coboundary_rescale(FactorSet<GF>::trivial(g, one), t).values();
      }
      const FactorSet<GF> f(g, v);
      const TwistedGroupAlgebra<GF> alg(f, false);
      const bool ok = !validate_factor_set(f);
      valid += ok;
      CHECK(alg.is_associative() == ok);
    }
    CHECK(valid >= 20);
  }
}

TEST_CASE("coboundary_rescale examples and invariants") {
  const GF one = gf(5, 1);
  const auto z2 = FiniteGroup::cyclic(2);
  const auto triv = FactorSet<GF>::trivial(z2, one);
  CHECK(coboundary_rescale(triv, {one, one}) == triv);
  for (long long c = 1; c < 5; ++c) CHECK(coboundary_rescale(triv, {one, gf(5, c)})(1, 1) == gf(5, c * c));
  CHECK_THROWS_AS(coboundary_rescale(triv, {gf(5, 2), one}), InvalidInput);

  std::mt19937_64 rng(3);
  const auto p = pauli(one);
  const auto base = simple_modules(TwistedGroupAlgebra<GF>(p), 0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GF> t(4, one);
    for (Elem a = 1; a < 4; ++a) t[a] = gf(5, 1 + static_cast<long long>(rng() % 4));
    const auto r = coboundary_rescale(p, t);
    CHECK_FALSE(validate_factor_set(r));
    // rho'_a -> t_a rho_a is an algebra map: check on structure constants
    const TwistedGroupAlgebra<GF> alg(r), old(p);
    for (Elem a = 0; a < 4; ++a)
      for (Elem b = 0; b < 4; ++b) {
        auto lhs = old.multiply(old.basis(a), old.basis(b));
        for (auto& x : lhs) x *= t[a] * t[b];
        auto rhs = alg.multiply(alg.basis(a), alg.basis(b));
        const Elem ab = klein().mul(a, b);
        CHECK(lhs[ab] == rhs[ab] * t[ab]);
      }
    const auto mods = simple_modules(alg, 1);
    CHECK(dims_of(mods) == dims_of(base));
    // traces scale by t
    for (Elem a = 0; a < 4; ++a) CHECK(mods[0].trace_vector[a] == t[a] * base[0].trace_vector[a]);
  }
}

TEST_CASE("simple_modules examples") {
  SUBCASE("Z/2 over F5") {
    const auto mods = simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(FiniteGroup::cyclic(2), gf(5, 1))), 0);
    REQUIRE(mods.size() == 2);
    std::vector<GF> signs{mods[0].action[1](0, 0), mods[1].action[1](0, 0)};
    std::sort(signs.begin(), signs.end());
    CHECK(signs == std::vector<GF>{gf(5, 1), gf(5, -1)});
  }
  SUBCASE("Pauli over F5") {
    const auto mods = simple_modules(TwistedGroupAlgebra<GF>(pauli(gf(5, 1))), 0);
    REQUIRE(mods.size() == 1);
    CHECK(mods[0].dim == 2);
    CHECK(mods[0].trace_vector == std::vector<GF>{gf(5, 2), gf(5, 0), gf(5, 0), gf(5, 0)});
  }
  SUBCASE("Z/3 over F7") {
    const auto mods = simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(FiniteGroup::cyclic(3), gf(7, 1))), 0);
    REQUIRE(mods.size() == 3);
    std::vector<long long> eig;
    for (const auto& m : mods) {
      CHECK(m.dim == 1);
      eig.push_back(static_cast<long long>(m.action[1](0, 0).code()));
    }
    std::sort(eig.begin(), eig.end());
    CHECK(eig == std::vector<long long>{1, 2, 4});
  }
  SUBCASE("over the rationals") {
    const auto z2 = simple_modules(TwistedGroupAlgebra<Rational>(FactorSet<Rational>::trivial(FiniteGroup::cyclic(2), Rational(1))), 0);
    CHECK(dims_of(z2) == std::vector<std::size_t>{1, 1});
    const auto p = simple_modules(TwistedGroupAlgebra<Rational>(pauli(Rational(1))), 0);
    CHECK(dims_of(p) == std::vector<std::size_t>{2});
    // rho_s^2 = -1 needs i
    const auto minus = from_values(FiniteGroup::cyclic(2), {{1, 1}, {1, -1}}, Rational(1));
    CHECK_THROWS_AS(simple_modules(TwistedGroupAlgebra<Rational>(minus), 0), Unsupported);
    CHECK_THROWS_AS(simple_modules(TwistedGroupAlgebra<Rational>(FactorSet<Rational>::trivial(FiniteGroup::cyclic(3), Rational(1))), 0),
                    Unsupported);
  }
  SUBCASE("non-split and modular cases") {
    try {
      simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(FiniteGroup::cyclic(3), gf(5, 1))), 0);
      FAIL("expected Unsupported");
    } catch (const Unsupported& e) {
      CHECK(std::string(e.what()).find("enlarge k") != std::string::npos);
      CHECK(std::string(e.what()).find("GF(5^2)") != std::string::npos);
    }
    // the same algebra over F25 splits
    const GF one25(galois_field(5, 2), GF::code_type{1});
    CHECK(simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(FiniteGroup::cyclic(3), one25)), 0).size() == 3);
    try {
      simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(FiniteGroup::cyclic(5), gf(5, 1))), 0);
      FAIL("expected Unsupported");
    } catch (const Unsupported& e) {
      CHECK(std::string(e.what()).find("modular case unsupported") != std::string::npos);
    }
  }
}

TEST_CASE("simple_modules invariants across groups and seeds") {
  for (const char* name : {"S3_A3", "D4_center", "Q8_Z4", "Z3xZ3_Z2_inversion"}) {
    const auto g = testutil::fixture_group(name);
    const GF one = name == std::string("Q8_Z4") ? gf(17, 1) : gf(7, 1);
    const TwistedGroupAlgebra<GF> alg(FactorSet<GF>::trivial(g, one));
    const auto m0 = simple_modules(alg, 0);
    std::size_t total = 0;
    for (const auto& m : m0) total += m.dim * m.dim;
    CHECK(total == g.order());
    for (std::size_t i = 1; i < m0.size(); ++i) CHECK(m0[i - 1].trace_vector != m0[i].trace_vector);
    for (std::uint64_t seed = 1; seed < 4; ++seed) {
      const auto ms = simple_modules(alg, seed);
      REQUIRE(ms.size() == m0.size());
      for (std::size_t i = 0; i < ms.size(); ++i) CHECK(ms[i].trace_vector == m0[i].trace_vector);
    }
  }
}

TEST_CASE("symbolic factor sets") {
  CHECK(SymbolicScalar::parse("-1").value == -1);
  CHECK(SymbolicScalar::parse("z^3").exponent == 3);
  CHECK(SymbolicScalar::parse("z").exponent == 1);
  CHECK_THROWS_AS(SymbolicScalar::parse("0"), InvalidInput);
  CHECK_THROWS_AS(SymbolicScalar::parse("x^2"), InvalidInput);
  CHECK(SymbolicScalar::parse("z^2").order(6) == 3);
  CHECK(SymbolicScalar::parse("-1").order(6) == 2);

  const auto j = nlohmann::json::parse(R"({"root_order": 4, "entries": [[1, 1, "z^2"]]})");
  const auto s = SymbolicFactorSet::from_json(j, 2);
  CHECK(s.value_exponent() == 2);
  const auto f5 = s.realize(FiniteGroup::cyclic(2), gf(5, 1));
  CHECK(f5(1, 1) == gf(5, -1));
  CHECK(s.realize(FiniteGroup::cyclic(2), Rational(1))(1, 1) == Rational(-1));
  const auto& q4 = cyclotomic_field(4);
  CHECK(s.realize(FiniteGroup::cyclic(2), Cyclotomic::from_int(q4, 1))(1, 1) == Cyclotomic::from_int(q4, -1));
  // z^1 with root_order 4 is i: fine in F5, not in F7 or Q
  const auto i = SymbolicFactorSet::from_json(nlohmann::json::parse(R"({"root_order": 4, "entries": [[1, 1, "z"]]})"), 2);
  CHECK(i.realize(FiniteGroup::cyclic(2), gf(5, 1))(1, 1) * i.realize(FiniteGroup::cyclic(2), gf(5, 1))(1, 1) == gf(5, -1));
  CHECK_THROWS_AS(i.realize(FiniteGroup::cyclic(2), gf(7, 1)), Unsupported);
  CHECK_THROWS_AS(i.realize(FiniteGroup::cyclic(2), Rational(1)), Unsupported);
  CHECK(SymbolicFactorSet::from_json(s.to_json(), 2).values == s.values);
  CHECK_THROWS_AS(SymbolicFactorSet::from_json(nlohmann::json::parse(R"({"values": [[1]]})"), 2), InvalidInput);
}

TEST_CASE("conjugation_iso") {
  const GF one = gf(7, 1);
  // swap on A1xA1, lambda = (2,1): trivial stabilizers on both ends
  const ComponentAction sw(root_datum_preset("A1xA1"), FiniteGroup::cyclic(2), {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  const auto c = conjugation_iso(sw, {2, 1}, 1, FactorSet<GF>::trivial(FiniteGroup::trivial(), one));
  CHECK(c.target.parent == std::vector<Elem>{0});
  CHECK(c.target_factor_set == FactorSet<GF>::trivial(FiniteGroup::trivial(), one));

  // S3 acting on its normal subgroup A3 by conjugation, with a nontrivial-valued factor set
  const auto s3 = testutil::fixture_group("S3_A3");
  const std::vector<Elem> a3{0, 1, 3};
  const auto sub = Subgroup::of(s3, a3);
  const auto f = coboundary_rescale(FactorSet<GF>::trivial(sub.group, one), {one, gf(7, 3), gf(7, 5)});
  const auto id = conjugation_iso(s3, a3, a3, 0, f);
  CHECK(id.target_factor_set == f);
  const auto mods = simple_modules(TwistedGroupAlgebra<GF>(f), 0);
  for (const auto& m : mods) CHECK(id.transport(m.action) == m.action);

  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) {
      const auto cb = conjugation_iso(s3, a3, a3, b, f);
      const auto cab = conjugation_iso(s3, a3, a3, a, cb.target_factor_set);
      const auto direct = conjugation_iso(s3, a3, a3, s3.mul(a, b), f);
      CHECK(cab.target_factor_set == direct.target_factor_set);
      for (const auto& m : mods) {
        const auto two = cab.transport(cb.transport(m.action));
        CHECK(two == direct.transport(m.action));
        CHECK(satisfies_relations(TwistedGroupAlgebra<GF>(direct.target_factor_set), two));
      }
    }
  CHECK_THROWS_AS(conjugation_iso(s3, a3, a3, 9, f), InvalidInput);
}

TEST_CASE("act_on_pairs") {
  const GF one = gf(5, 1);
  // Klein group acting on the rank-2 torus by sign changes; 0 has full stabilizer
  const ComponentAction act(RootDatum::torus(2), klein(),
                            {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}, {{1, 0}, {0, -1}}, {{-1, 0}, {0, -1}}});
  const TwistedGroupAlgebra<GF> alg(pauli(one));
  const auto mods = simple_modules(alg, 0);
  const WeightModulePair<GF> pair{{0, 0}, mods[0].action};
  for (Elem a = 0; a < 4; ++a) {
    const auto out = act_on_pairs(act, alg, a, pair);
    CHECK(out.weight == Weight{0, 0});
    CHECK(trace_vector(out.module) == mods[0].trace_vector);
    CHECK(satisfies_relations(alg, out.module));
  }
  CHECK(act_on_pairs(act, alg, 0, pair).module == pair.module);

  // O(2): the orbit of 3 has size 2 dividing |A|
  const ComponentAction o2(RootDatum::torus(1), FiniteGroup::cyclic(2), {{{1}}, {{-1}}});
  const TwistedGroupAlgebra<GF> triv(FactorSet<GF>::trivial(FiniteGroup::trivial(), one));
  const WeightModulePair<GF> p3{{3}, {Matrix<GF>::identity(1, one)}};
  std::vector<Weight> orbit;
  for (Elem a = 0; a < 2; ++a) orbit.push_back(act_on_pairs(o2, triv, a, p3).weight);
  CHECK(orbit == std::vector<Weight>{{3}, {-3}});
  CHECK_THROWS_AS(act_on_pairs(o2, alg, 1, p3), InvalidInput);
}

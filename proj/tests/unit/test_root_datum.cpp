#include <doctest.h>

#include "dcrep/root_datum.hpp"

using namespace dcrep;

namespace {

FiniteGroup z2() { return FiniteGroup::cyclic(2); }

ComponentAction o2_action() { return ComponentAction(RootDatum::torus(1), z2(), {{{1}}, {{-1}}}); }

ComponentAction swap_action() {
  return ComponentAction(root_datum_preset("A1xA1"), z2(), {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
}

// sl2 string: weights m, m-2, ..., -m in X = Z with alpha = 2.
FormalCharacter sl2_string(long long m) {
  FormalCharacter c;
  for (long long w = m; w >= -m; w -= 2) c[{w}] = 1;
  return c;
}

// Gelfand-Tsetlin count for gl3 with top row (a+b, b, 0), weights in fundamental coordinates.
FormalCharacter gt_a2(long long a, long long b) {
  FormalCharacter c;
  const long long t1 = a + b, t2 = b, t3 = 0;
  for (long long m12 = t2; m12 <= t1; ++m12)
    for (long long m22 = t3; m22 <= t2; ++m22)
      for (long long m11 = m22; m11 <= m12; ++m11) {
        const long long w1 = m11, w2 = m12 + m22 - m11, w3 = t1 + t2 + t3 - m12 - m22;
        c[{w1 - w2, w2 - w3}] += 1;
      }
  return c;
}

}  // namespace

TEST_CASE("presets build valid data") {
  const auto a1 = root_datum_preset("A1");
  CHECK(a1.positive_roots().size() == 1);
  CHECK(a1.two_rho_check() == Weight{1});
  const auto a2 = root_datum_preset("A2");
  CHECK(a2.positive_roots().size() == 3);
  CHECK(a2.two_rho_check() == Weight{2, 2});
  CHECK(a2.cartan_matrix() == IntMatrix{{2, -1}, {-1, 2}});
  const auto t2 = root_datum_preset("torus2");
  CHECK(t2.positive_roots().empty());
  CHECK_THROWS_AS(root_datum_preset("E9"), InvalidInput);
  // affine A1 Cartan matrix gives an infinite root system
  CHECK_THROWS_AS(RootDatum(2, {{2, -2}, {-2, 2}}, {{1, 0}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(RootDatum(1, {{2}}, {{2}}), InvalidInput);
}

TEST_CASE("is_dominant examples") {
  const auto a1 = root_datum_preset("A1");
  CHECK(a1.is_dominant({3}));
  CHECK_FALSE(a1.is_dominant({-1}));
  const auto t = RootDatum::torus(2);
  CHECK(t.is_dominant({-5, 7}));
  CHECK(root_datum_preset("A1xA1").is_dominant({2, 1}));
  CHECK_THROWS_AS(a1.is_dominant({1, 2}), InvalidInput);
}

TEST_CASE("dominance_leq examples") {
  const auto a1 = root_datum_preset("A1");
  CHECK(a1.dominance_leq({0}, {2}));
  CHECK_FALSE(a1.dominance_leq({0}, {1}));
  const auto a11 = root_datum_preset("A1xA1");
  CHECK(a11.dominance_leq({0, 1}, {2, 1}));
  for (const Weight& l : {Weight{0, 0}, Weight{3, 1}, Weight{-2, 5}}) CHECK(a11.dominance_leq(l, l));
  // brute force: enumerate small nonnegative combinations
  for (long long x = -4; x <= 4; ++x)
    for (long long y = -4; y <= 4; ++y) {
      bool expect = false;
      for (long long i = 0; i <= 4; ++i)
        for (long long j = 0; j <= 4; ++j)
          if (2 * i == x && 2 * j == y) expect = true;
      CHECK(a11.dominance_leq({0, 0}, {x, y}) == expect);
    }
}

TEST_CASE("act_weight and orbits") {
  const auto o2 = o2_action();
  CHECK(o2.act(1, {5}) == Weight{-5});
  CHECK(o2.act(0, {5}) == Weight{5});
  const auto sw = swap_action();
  CHECK(sw.act(1, {2, 1}) == Weight{1, 2});
  CHECK_THROWS_AS(sw.act(2, {2, 1}), InvalidInput);

  auto os = sw.orbit_and_stabilizer({2, 1});
  CHECK(os.orbit == std::vector<Weight>{{1, 2}, {2, 1}});
  CHECK(os.stabilizer == std::vector<Elem>{0});
  os = sw.orbit_and_stabilizer({3, 3});
  CHECK(os.orbit == std::vector<Weight>{{3, 3}});
  CHECK(os.stabilizer == std::vector<Elem>{0, 1});
  os = o2.orbit_and_stabilizer({0});
  CHECK(os.orbit.size() == 1);
  CHECK(os.stabilizer.size() == 2);
  CHECK_THROWS_AS(sw.orbit_and_stabilizer({-1, 0}), InvalidInput);
  CHECK(sw.canonical_rep({2, 0}) == Weight{0, 2});
  CHECK(sw.transporter({2, 0}) == 1);
}

TEST_CASE("invalid actions are rejected") {
  const auto a11 = root_datum_preset("A1xA1");
  // not a homomorphism
  CHECK_THROWS_AS(ComponentAction(a11, z2(), {{{1, 0}, {0, 1}}, {{1, 0}, {0, -1}}}), InvalidInput);
  // homomorphism but sends a positive root to a negative one
  CHECK_THROWS_AS(ComponentAction(a11, z2(), {{{1, 0}, {0, 1}}, {{-1, 0}, {0, 1}}}), InvalidInput);
  // not invertible over Z
  CHECK_THROWS_AS(ComponentAction(RootDatum::torus(1), FiniteGroup::trivial(), {{{2}}}), InvalidInput);
}

TEST_CASE("weyl_dimension examples") {
  const auto a1 = root_datum_preset("A1");
  for (long long m = 0; m <= 12; ++m) CHECK(a1.weyl_dimension({m}) == m + 1);
  CHECK(root_datum_preset("A1xA1").weyl_dimension({2, 1}) == 6);
  CHECK(RootDatum::torus(2).weyl_dimension({4, -3}) == 1);
  CHECK(root_datum_preset("A2").weyl_dimension({1, 1}) == 8);
  CHECK_THROWS_AS(a1.weyl_dimension({-2}), InvalidInput);
}

TEST_CASE("weight multiplicities examples") {
  const auto a1 = root_datum_preset("A1");
  CHECK(a1.weight_multiplicities({2}) == FormalCharacter{{{2}, 1}, {{0}, 1}, {{-2}, 1}});
  CHECK(RootDatum::torus(1).weight_multiplicities({7}) == FormalCharacter{{{7}, 1}});
  const auto a11 = root_datum_preset("A1xA1");
  CHECK(a11.weight_multiplicities({1, 1}) ==
        FormalCharacter{{{1, 1}, 1}, {{1, -1}, 1}, {{-1, 1}, 1}, {{-1, -1}, 1}});
}

TEST_CASE("Freudenthal agrees with independent oracles up to height 20") {
  const auto a1 = root_datum_preset("A1");
  for (long long m = 0; m <= 20; ++m) CHECK(a1.weight_multiplicities({m}) == sl2_string(m));

  const auto a11 = root_datum_preset("A1xA1");
  for (long long a = 0; a <= 20; ++a)
    for (long long b = 0; a + b <= 20; ++b) {
      FormalCharacter expect;
      for (const auto& [x, mx] : sl2_string(a))
        for (const auto& [y, my] : sl2_string(b)) expect[{x[0], y[0]}] += mx * my;
      const auto got = a11.weight_multiplicities({a, b});
      CHECK(got == expect);
    }

  const auto a2 = root_datum_preset("A2");
  for (long long a = 0; a <= 10; ++a)
    for (long long b = 0; 2 * (a + b) <= 20; ++b) {
      const auto got = a2.weight_multiplicities({a, b});
      CHECK(got == gt_a2(a, b));
      long long total = 0;
      for (const auto& [w, m] : got) total += m;
      CHECK(total == a2.weyl_dimension({a, b}));
      // stable under simple reflections
      for (std::size_t i = 0; i < 2; ++i)
        for (const auto& [w, m] : got) CHECK(got.at(a2.reflect(i, w)) == m);
    }
}

TEST_CASE("A-action invariants") {
  const auto sw = swap_action();
  const auto& d = sw.datum();
  for (long long a = 0; a <= 5; ++a)
    for (long long b = 0; b <= 5; ++b) {
      const Weight l{a, b};
      for (Elem g = 0; g < 2; ++g) {
        CHECK(d.height(sw.act(g, l)) == d.height(l));
        CHECK(d.weyl_dimension(sw.act(g, l)) == d.weyl_dimension(l));
        for (long long c = 0; c <= 5; ++c)
          for (long long e = 0; e <= 5; ++e) {
            const Weight m{c, e};
            if (d.dominance_leq(m, l)) CHECK(d.dominance_leq(sw.act(g, m), sw.act(g, l)));
          }
      }
      CHECK(2 % sw.orbit(l).size() == 0);
    }
  // A2 with the diagram automorphism
  const auto a2 = root_datum_preset("A2");
  const ComponentAction diag(a2, z2(), {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}});
  CHECK(diag.act(1, {2, 0}) == Weight{0, 2});
  CHECK(a2.weyl_dimension({2, 0}) == a2.weyl_dimension({0, 2}));
}

TEST_CASE("order witness examples") {
  const auto sw = swap_action();
  CHECK_FALSE(sw.order_strict_weight_witness({0, 0}, {1, 1}));
  const auto w = sw.order_strict_weight_witness({0, 0}, {2, 0});
  REQUIRE(w);
  CHECK(*w == 0);
  CHECK_FALSE(sw.order_strict_weight_witness({2, 0}, {2, 0}));
  CHECK_FALSE(o2_action().order_strict_weight_witness({0}, {3}));
}

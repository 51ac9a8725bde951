#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcrep/groth.hpp"
#include "test_util.hpp"

using namespace dcrep;

namespace {

SymbolicFactorSet pauli() {
  SymbolicFactorSet f = SymbolicFactorSet::trivial(4);
  f.root_order = 2;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if ((a & 2) && (b & 1)) f.values[a][b] = SymbolicScalar::parse("-1");
  return f;
}

std::vector<std::string> lifted(const LiftedSimple& s) {
  std::vector<std::string> out;
  for (const auto& x : s.lifted) out.push_back(x.str());
  return out;
}

}  // namespace

TEST_CASE("lift_trace") {
  const auto& f7 = galois_field(7, 1);
  const auto& cf3 = cyclotomic_field(3);
  // F7: zeta_3 = 3^2 = 2
  CHECK(lift_trace(GF::from_int(f7, 2), 1, 3) == Cyclotomic::zeta_power(cf3, 1));
  CHECK(lift_trace(GF::from_int(f7, 4), 1, 3) == Cyclotomic::zeta_power(cf3, 2));
  CHECK(lift_trace(GF::from_int(f7, 0), 3, 3) == Cyclotomic::from_int(cf3, 0));
  CHECK(lift_trace(GF::from_int(f7, 6), 1, 2) == Cyclotomic::from_int(cyclotomic_field(2), -1));
  CHECK_THROWS_AS(lift_trace(GF::from_int(f7, 3), 1, 3), Unsupported);
  CHECK_THROWS_AS(lift_trace(GF::from_int(f7, 1), 1, 5), Unsupported);
  // in F7, 1 + 1 + 1 + 1 = 4 = zeta_3^2: a four-dimensional trace is ambiguous
  CHECK_THROWS_AS(lift_trace(GF::from_int(f7, 4), 4, 3), Unsupported);
}

TEST_CASE("tits_match examples") {
  SUBCASE("Z/2 trivial alpha, p = 5, ell = 7") {
    const auto m = tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {5, 7, {}, 0});
    CHECK(m.e == 2);
    REQUIRE(m.char0.size() == 2);
    std::set<std::vector<std::string>> tr;
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(lifted(m.char0[i]) == lifted(m.charp[m.to_charp[i]]));
      tr.insert(lifted(m.char0[i]));
    }
    CHECK(tr == std::set<std::vector<std::string>>{{"1", "1"}, {"1", "-1"}});
    CHECK(m.charp_field == FieldSpec::finite(5));
  }
  SUBCASE("Z/3 trivial alpha, p = 7, ell = 13") {
    const auto m = tits_match(FiniteGroup::cyclic(3), SymbolicFactorSet::trivial(3), {7, 13, {}, 0});
    CHECK(m.e == 3);
    CHECK(m.char0_zeta == "3");
    CHECK(m.charp_zeta == "2");
    REQUIRE(m.char0.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK(m.char0[i].lifted == m.charp[m.to_charp[i]].lifted);
  }
  SUBCASE("Pauli alpha on the Klein group, p = 5, ell = 7") {
    const auto m = tits_match(testutil::klein(), pauli(), {5, 7, {}, 0});
    REQUIRE(m.char0.size() == 1);
    CHECK(m.char0[0].dim == 2);
    CHECK(lifted(m.char0[0]) == std::vector<std::string>{"2", "0", "0", "0"});
  }
  SUBCASE("Z/3 needs F_{p^2} when p = 5") {
    const auto m = tits_match(FiniteGroup::cyclic(3), SymbolicFactorSet::trivial(3), {5, 7, {}, 0});
    CHECK(m.charp_field == FieldSpec::finite(5, 2));
    CHECK(m.char0.size() == 3);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {2, 7, {}, 0}), Unsupported);
    CHECK_THROWS_AS(tits_match(FiniteGroup::cyclic(3), SymbolicFactorSet::trivial(3), {5, 11, {}, 0}), Unsupported);
    CHECK_THROWS_AS(tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {5, 8, {}, 0}), InvalidInput);
    CHECK_THROWS_AS(tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {5, 7, 3, 0}), InvalidInput);
    try {
      tits_match(FiniteGroup::cyclic(3), SymbolicFactorSet::trivial(3), {5, 11, {}, 0});
    } catch (const Unsupported& e) {
      CHECK(std::string(e.what()).find("next valid: 13") != std::string::npos);
    }
  }
  SUBCASE("explicit lift order") {
    const auto m = tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {5, 13, 4, 0});
    CHECK(m.e == 4);
    CHECK(m.char0.size() == 2);
  }
}

TEST_CASE("tits_match is independent of the auxiliary prime") {
  struct Case {
    FiniteGroup g;
    SymbolicFactorSet a;
    int p;
  };
  std::vector<Case> cases{{FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), 5},
                          {FiniteGroup::cyclic(3), SymbolicFactorSet::trivial(3), 7},
                          {testutil::klein(), SymbolicFactorSet::trivial(4), 5},
                          {testutil::klein(), pauli(), 5}};
  for (const auto& c : cases) {
    std::vector<std::vector<std::vector<std::string>>> seen;
    for (int ell : {7, 13, 31}) {
      if ((ell - 1) % lifting_exponent(c.g, c.a) != 0) continue;
      const auto m = tits_match(c.g, c.a, {c.p, ell, {}, 0});
      std::vector<std::vector<std::string>> v;
      for (std::size_t i = 0; i < m.char0.size(); ++i) {
        v.push_back(lifted(m.char0[i]));
        CHECK(lifted(m.charp[m.to_charp[i]]) == v.back());
      }
      std::sort(v.begin(), v.end());
      seen.push_back(v);
    }
    CHECK(seen.size() >= 2);
    for (const auto& v : seen) CHECK(v == seen.front());
  }
}

TEST_CASE("golden: Z/2 idempotents reduce mod 5 to 3(rho_1 +- rho_s)") {
  const FactorSet<Rational> fq = SymbolicFactorSet::trivial(2).realize(FiniteGroup::cyclic(2), Rational(1));
  const auto q_simples = simple_modules(TwistedGroupAlgebra<Rational>(fq), 0);
  REQUIRE(q_simples.size() == 2);
  const auto m = tits_match(FiniteGroup::cyclic(2), SymbolicFactorSet::trivial(2), {5, 7, {}, 0});
  const GF one5 = GF::from_int(galois_field(5, 1), 1);
  for (const auto& s : q_simples) {
    // (rho_1 + tr(rho_s) rho_s) / 2
    CHECK(s.central_idempotent[0] == Rational(1, 2));
    const auto sign = s.trace_vector[1];
    // find the char 0 proxy simple with the same lifted traces, follow the matching
    std::size_t hit = 99;
    for (std::size_t i = 0; i < m.char0.size(); ++i)
      if (m.char0[i].lifted[1] == Cyclotomic::from_int(cyclotomic_field(2), sign == Rational(1) ? 1 : -1)) hit = i;
    REQUIRE(hit < 2);
    const auto& e5 = m.charp[m.to_charp[hit]].module.central_idempotent;
    CHECK(e5[0] == reduce_mod_p(s.central_idempotent[0], one5));
    CHECK(e5[1] == reduce_mod_p(s.central_idempotent[1], one5));
    CHECK(e5[0] == one5.from_int(3));
    CHECK(e5[1] == one5.from_int(sign == Rational(1) ? 3 : -3));
  }
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 5), one5), InvalidInput);
}

TEST_CASE("decomposition_map examples") {
  SUBCASE("O(2), orbits of 0 and 3") {
    auto m = ModelFile::load("O2");
    m.ideal = IdealSpec{};
    m.ideal.weights = {{3}};
    m.ideal.max_abs_coord = 0;
    const auto r = decomposition_map(m, {5, 7, {}, 0});
    CHECK(r.matrix == std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(r.determinant == Rational(1));
    CHECK(r.is_permutation);
    CHECK(r.dims_preserved);
    CHECK(r.to_json() == decomposition_map(m, {5, 7, {}, 3}).to_json());
    CHECK(r.matrix == decomposition_map(m, {5, 13, {}, 0}).matrix);
  }
  SUBCASE("A1xA1 swap, orbit of (2,2)") {
    auto m = ModelFile::load("A1xA1_swap");
    m.ideal = IdealSpec{};
    m.ideal.weights = {{2, 2}};
    const auto r = decomposition_map(m, {5, 7, {}, 0});
    const auto n = r.matrix.size();
    CHECK(r.is_permutation);
    CHECK((r.determinant == Rational(1) || r.determinant == Rational(-1)));
    CHECK(r.matrix == decomposition_map(m, {5, 13, {}, 0}).matrix);
    // the (2,2) block is 2x2, the rest are 1x1
    std::size_t at22 = 0;
    for (const auto& l : r.char0_labels) at22 += l.rep == Weight{2, 2};
    CHECK(at22 == 2);
    CHECK(n == r.char0_labels.size());
  }
  SUBCASE("empty ideal") {
    const auto m = ModelFile::load(std::string(DCREP_TEST_DATA_DIR) + "/empty_ideal_model.json");
    const auto r = decomposition_map(m, {5, 7, {}, 0});
    CHECK(r.matrix.empty());
    CHECK(r.determinant == Rational(1));
    CHECK(r.is_permutation);
  }
  SUBCASE("p dividing |A|") {
    CHECK_THROWS_AS(decomposition_map(ModelFile::load("O2"), {2, 7, {}, 0}), Unsupported);
  }
  SUBCASE("CSV carries label metadata") {
    auto m = ModelFile::load("O2");
    m.ideal.max_abs_coord = 1;
    const auto csv = decomposition_map(m, {5, 7, {}, 0}).to_csv();
    CHECK(csv == "d_G,\"(-1)|E0\",\"(0)|E0\",\"(0)|E1\"\n\"(-1)|E0\",1,0,0\n\"(0)|E0\",0,1,0\n\"(0)|E1\",0,0,1\n");
  }
}

TEST_CASE("decomposition determinant is +-1 on every model") {
  for (const char* name : {"O2", "A1xA1_swap", "A2_diagram", "torus2_klein"}) {
    const auto m = ModelFile::load(name);
    const int ell = m.aux_prime.value_or(7);
    const auto r = decomposition_map(m, {static_cast<int>(m.field.p), ell, {}, 0});
    CHECK(r.is_permutation);
    CHECK(r.dims_preserved);
    CHECK((r.determinant == Rational(1) || r.determinant == Rational(-1)));
  }
}

TEST_CASE("dimension bookkeeping agrees with hw-poset") {
  const auto m = ModelFile::load("A1xA1_swap");
  const auto r = decomposition_map(m, {5, 7, {}, 0});
  const auto labels = classify_labels(m, 0);
  REQUIRE(labels.size() == r.char0_labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CHECK(labels[i].rep == r.char0_labels[i].rep);
    CHECK(labels[i].dim_e == r.char0_labels[i].dim_e);
  }
}

TEST_CASE("matching commutes with the action on pairs") {
  for (const char* name : {"O2", "A1xA1_swap", "torus2_klein"}) {
    const auto m = ModelFile::load(name);
    const auto r = decomposition_map(m, {static_cast<int>(m.field.p), m.aux_prime.value_or(7), {}, 0});
    for (std::size_t i = 0; i < r.orbit_reps.size(); ++i)
      CHECK(matching_commutes_with_action(m.action, r.orbit_reps[i], m.cocycle_for(r.orbit_reps[i]), r.matchings[i]));
  }
}

TEST_CASE("verify_unitriangular_char0") {
  auto o2 = ModelFile::load("O2");
  o2.ideal.max_abs_coord = 1;
  const auto p1 = LabelPoset::build(o2.action, classify_labels(o2, 0));
  REQUIRE(p1.labels.size() == 3);
  const auto u1 = verify_unitriangular_char0(p1, linear_extension(p1));
  CHECK(u1.ok());
  CHECK(u1.matrix == std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  const auto sw = ModelFile::load("A1xA1_swap");
  const auto p2 = LabelPoset::build(sw.action, classify_labels(sw, 0));
  const auto ext = linear_extension(p2);
  const auto u2 = verify_unitriangular_char0(p2, ext);
  CHECK(u2.ok());
  CHECK(u2.given_order_is_linear_extension);

  std::vector<std::size_t> shuffled = ext;
  std::mt19937_64 rng(11);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto u3 = verify_unitriangular_char0(p2, shuffled);
  CHECK(u3.ok());
  CHECK_FALSE(u3.given_order_is_linear_extension);
  for (std::size_t r = 0; r < shuffled.size(); ++r) CHECK(u3.matrix[r][shuffled[r]] == 1);

  CHECK_THROWS_AS(verify_unitriangular_char0(p2, {0, 0}), InvalidInput);
}

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/cyclotomic.hpp"
#include "dcrep/galois_field.hpp"
#include "dcrep/meataxe.hpp"
#include "dcrep/root_datum.hpp"

namespace dcrep {

/// Scalar in the factor-set grammar: "1", "-1", an integer, or "z^k" where z is
/// a primitive root of unity of the factor set's root_order.
struct SymbolicScalar {
  bool is_root = false;
  long long value = 1;     // integer form
  long long exponent = 0;  // z^exponent

  static SymbolicScalar parse(const std::string& s);
  static SymbolicScalar from_json(const nlohmann::json& j);
  std::string str() const;
  /// Multiplicative order as a root of unity (z having order root_order), or 0 if
  /// the value is an integer other than +-1.
  long long order(long long root_order) const;

  friend bool operator==(const SymbolicScalar&, const SymbolicScalar&) = default;
};

GF realize_root(long long root_order, long long k, const GF& like);
Rational realize_root(long long root_order, long long k, const Rational& like);
Cyclotomic realize_root(long long root_order, long long k, const Cyclotomic& like);

template <FieldElement T>
T realize(const SymbolicScalar& s, long long root_order, const T& like) {
  if (s.is_root) return realize_root(root_order, s.exponent, like);
  return like.from_int(s.value);
}

/// Factor set given symbolically on a group. JSON: {"root_order": m, "values": n x n table}
/// or {"root_order": m, "entries": [[a, b, value], ...]} with unlisted entries 1.
struct SymbolicFactorSet {
  long long root_order = 1;
  std::vector<std::vector<SymbolicScalar>> values;

  static SymbolicFactorSet trivial(std::size_t n);
  static SymbolicFactorSet from_json(const nlohmann::json& j, std::size_t n);
  nlohmann::json to_json() const;
  /// lcm of the orders of all values; throws if some value is not a root of unity.
  long long value_exponent() const;

  template <FieldElement T>
  FactorSet<T> realize(const FiniteGroup& g, const T& like) const {
    if (values.size() != g.order()) throw InvalidInput("factor set size does not match the stabilizer order");
    std::vector<std::vector<T>> v(g.order(), std::vector<T>(g.order(), like));
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b) v[a][b] = dcrep::realize(values[a][b], root_order, like);
    return FactorSet<T>(g, std::move(v));
  }
};

/// Conjugation by a: A^lambda -> A^{a lambda}, b -> a b a^-1, with the transported factor set.
template <FieldElement T>
struct Conjugation {
  Elem a = 0;
  Subgroup source, target;
  std::vector<Elem> map;  // local source id -> local target id
  FactorSet<T> target_factor_set;

  /// E'(rho~_{a b a^-1}) = E(rho_b).
  std::vector<Matrix<T>> transport(const std::vector<Matrix<T>>& action) const {
    if (action.size() != map.size()) throw InvalidInput("module does not match the source algebra");
    std::vector<Matrix<T>> out(action.size(), action.front());
    for (Elem b = 0; b < map.size(); ++b) out[map[b]] = action[b];
    return out;
  }
};

template <FieldElement T>
Conjugation<T> conjugation_iso(const FiniteGroup& ambient, const std::vector<Elem>& stabilizer,
                               const std::vector<Elem>& target_stabilizer, Elem a, const FactorSet<T>& f) {
  ambient.check_element(a);
  auto source = Subgroup::of(ambient, stabilizer);
  auto target = Subgroup::of(ambient, target_stabilizer);
  if (source.group.table() != f.group().table()) throw InvalidInput("factor set is not defined on the stabilizer");
  const std::size_t n = source.parent.size();
  if (target.parent.size() != n) throw InvalidInput("target stabilizer has the wrong order");
  std::vector<Elem> map(n);
  for (Elem b = 0; b < n; ++b) {
    const Elem img = ambient.conj(a, source.parent[b]);
    if (!target.contains(img)) throw InvalidInput("target stabilizer is not the conjugate subgroup");
    map[b] = target.to_local(img);
  }
  std::vector<std::vector<T>> v(n, std::vector<T>(n, f.like()));
  for (Elem c = 0; c < n; ++c)
    for (Elem b = 0; b < n; ++b) v[map[c]][map[b]] = f(c, b);
  FactorSet<T> tf(target.group, std::move(v));
  return Conjugation<T>{a, std::move(source), std::move(target), std::move(map), std::move(tf)};
}

template <FieldElement T>
Conjugation<T> conjugation_iso(const ComponentAction& action, const Weight& lambda, Elem a, const FactorSet<T>& f) {
  action.group().check_element(a);
  return conjugation_iso(action.group(), action.stabilizer(lambda), action.stabilizer(action.act(a, lambda)), a, f);
}

/// Twist of a module by the inner automorphism rho_c^-1 (.) rho_c:
/// E'(rho_u) = t E(rho_{c^-1 u c}) where rho_c^-1 rho_u rho_c = t rho_{c^-1 u c}.
template <FieldElement T>
std::vector<Matrix<T>> inner_twist(const TwistedGroupAlgebra<T>& alg, Elem c, const std::vector<Matrix<T>>& action) {
  const auto& g = alg.group();
  g.check_element(c);
  std::vector<Matrix<T>> out(action.size(), action.front());
  const Vec<T> rc_inv = alg.basis_inverse(c);
  for (Elem u = 0; u < alg.dim(); ++u) {
    const Vec<T> prod = alg.multiply(alg.multiply(rc_inv, alg.basis(u)), alg.basis(c));
    const Elem target = g.mul(g.mul(g.inv(c), u), c);
    out[u] = action[target] * prod[target];
  }
  return out;
}

/// A pair (mu, E) in canonical coordinates: E is a module for the twisted algebra on
/// the stabilizer of the orbit representative.
template <FieldElement T>
struct WeightModulePair {
  Weight weight;
  std::vector<Matrix<T>> module;
};

/// a . (mu, E) = (a mu, E') where E' is the inner twist by
/// c = b_{a mu}^-1 a b_mu in the representative's stabilizer.
template <FieldElement T>
WeightModulePair<T> act_on_pairs(const ComponentAction& action, const TwistedGroupAlgebra<T>& rep_algebra, Elem a,
                                 const WeightModulePair<T>& pair) {
  const auto& A = action.group();
  A.check_element(a);
  const Weight rep = action.canonical_rep(pair.weight);
  const auto stab = Subgroup::of(A, action.stabilizer(rep));
  if (stab.group.table() != rep_algebra.group().table())
    throw InvalidInput("module algebra does not match the stabilizer of the weight");
  if (pair.module.size() != rep_algebra.dim()) throw InvalidInput("module does not match the stabilizer algebra");
  const Weight target = action.act(a, pair.weight);
  const Elem c = A.mul(A.mul(A.inv(action.transporter(target)), a), action.transporter(pair.weight));
  if (!stab.contains(c)) throw CheckFailure("transporter composite left the stabilizer");
  return {target, inner_twist(rep_algebra, stab.to_local(c), pair.module)};
}

}  // namespace dcrep

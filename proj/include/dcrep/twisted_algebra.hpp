#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcrep/group.hpp"
#include "dcrep/linalg.hpp"

namespace dcrep {

/// Scalar valued 2-cochain on a finite group, alpha(a, b) for ids a, b.
template <FieldElement T>
class FactorSet {
 public:
  FactorSet(FiniteGroup group, std::vector<std::vector<T>> values)
      : group_(std::move(group)), values_(std::move(values)) {
    const std::size_t n = group_.order();
    if (values_.size() != n) throw InvalidInput("factor set needs one row per group element");
    for (const auto& row : values_)
      if (row.size() != n) throw InvalidInput("factor set row has wrong length");
    for (const auto& row : values_)
      for (const auto& v : row) {
        if (!v.same_field(values_[0][0])) throw InvalidInput("factor set values lie in different fields");
        if (v.is_zero()) throw InvalidInput("factor set has a zero value");
      }
  }
  static FactorSet trivial(const FiniteGroup& group, const T& like) {
    return FactorSet(group, std::vector<std::vector<T>>(group.order(), std::vector<T>(group.order(), like.one())));
  }

  const FiniteGroup& group() const { return group_; }
  const T& operator()(Elem a, Elem b) const { return values_[a][b]; }
  const std::vector<std::vector<T>>& values() const { return values_; }
  T like() const { return values_[0][0]; }

  friend bool operator==(const FactorSet& x, const FactorSet& y) {
    return x.group_.table() == y.group_.table() && x.values_ == y.values_;
  }

 private:
  FiniteGroup group_;
  std::vector<std::vector<T>> values_;
};

struct CocycleViolation {
  std::string kind;  // "normalization" or "cocycle"
  Elem a = 0, b = 0, c = 0;
  std::string message() const {
    if (kind == "normalization")
      return "normalization fails at " + std::to_string(a);
    return "cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
};

/// Checks alpha(1,a) = alpha(a,1) = 1 and alpha(a,b) alpha(ab,c) = alpha(a,bc) alpha(b,c);
/// returns the first violation in id order.
template <FieldElement T>
std::optional<CocycleViolation> validate_factor_set(const FactorSet<T>& f) {
  const auto& g = f.group();
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    if (!(f(0, a) == f.like().one()) || !(f(a, 0) == f.like().one())) return CocycleViolation{"normalization", a, 0, 0};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (!(f(a, b) * f(g.mul(a, b), c) == f(a, g.mul(b, c)) * f(b, c)))
          return CocycleViolation{"cocycle", a, b, c};
  return std::nullopt;
}

/// alpha'(a,b) = alpha(a,b) t(a) t(b) / t(ab); the map rho'_a -> t_a rho_a
/// is an isomorphism from the new algebra to the old one.
template <FieldElement T>
FactorSet<T> coboundary_rescale(const FactorSet<T>& f, const std::vector<T>& t) {
  const auto& g = f.group();
  if (t.size() != g.order()) throw InvalidInput("rescaling needs one scalar per group element");
  if (!(t[0] == t[0].one())) throw InvalidInput("rescaling must satisfy t(1) = 1");
  std::vector<std::vector<T>> v(g.order(), std::vector<T>(g.order(), f.like()));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) v[a][b] = f(a, b) * t[a] * t[b] / t[g.mul(a, b)];
  return FactorSet<T>(g, std::move(v));
}

/// Twisted group algebra with basis rho_a and rho_a rho_b = alpha(a,b) rho_ab.
/// Elements are coefficient vectors indexed by group ids.
template <FieldElement T>
class TwistedGroupAlgebra {
 public:
  /// With validate = false the cocycle identity is not enforced, so that
  /// associativity can be probed independently.
  explicit TwistedGroupAlgebra(FactorSet<T> f, bool validate = true) : f_(std::move(f)) {
    if (!validate) return;
    if (auto v = validate_factor_set(f_)) throw InvalidInput("twisted group algebra: " + v->message());
  }

  const FactorSet<T>& factor_set() const { return f_; }
  const FiniteGroup& group() const { return f_.group(); }
  std::size_t dim() const { return group().order(); }
  T like() const { return f_.like(); }

  Vec<T> zero() const { return Vec<T>(dim(), like().zero()); }
  Vec<T> basis(Elem a) const {
    Vec<T> v = zero();
    v[a] = like().one();
    return v;
  }
  Vec<T> unit() const { return basis(0); }

  Vec<T> multiply(const Vec<T>& x, const Vec<T>& y) const {
    Vec<T> out = zero();
    const auto& g = group();
    for (Elem a = 0; a < dim(); ++a) {
      if (x[a].is_zero()) continue;
      for (Elem b = 0; b < dim(); ++b) {
        if (y[b].is_zero()) continue;
        out[g.mul(a, b)] += x[a] * y[b] * f_(a, b);
      }
    }
    return out;
  }

  /// Matrix of y -> rho_a y.
  Matrix<T> left_matrix(Elem a) const {
    Matrix<T> m(dim(), dim(), like());
    for (Elem b = 0; b < dim(); ++b) m(group().mul(a, b), b) = f_(a, b);
    return m;
  }
  /// Matrix of y -> y rho_a.
  Matrix<T> right_matrix(Elem a) const {
    Matrix<T> m(dim(), dim(), like());
    for (Elem b = 0; b < dim(); ++b) m(group().mul(b, a), b) = f_(b, a);
    return m;
  }

  /// Inverse of the basis element rho_a.
  Vec<T> basis_inverse(Elem a) const {
    const Elem ai = group().inv(a);
    Vec<T> v = zero();
    v[ai] = f_(a, ai).inv();
    return v;
  }

  /// Re-verifies associativity on all basis triples.
  bool is_associative() const {
    for (Elem a = 0; a < dim(); ++a)
      for (Elem b = 0; b < dim(); ++b)
        for (Elem c = 0; c < dim(); ++c)
          if (multiply(multiply(basis(a), basis(b)), basis(c)) != multiply(basis(a), multiply(basis(b), basis(c))))
            return false;
    return true;
  }

  /// Evaluate a polynomial at x, using `unit` as the identity (for corner algebras e A e).
  template <class Poly>
  Vec<T> evaluate(const Poly& p, const Vec<T>& x, const Vec<T>& unit) const {
    Vec<T> acc = zero();
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = multiply(acc, x);
      for (Elem i = 0; i < dim(); ++i) acc[i] += *it * unit[i];
    }
    return acc;
  }

 private:
  FactorSet<T> f_;
};

/// A simple module: matrices E(rho_a) for all basis elements.
template <FieldElement T>
struct SimpleAlgebraModule {
  std::size_t dim = 0;
  std::vector<Matrix<T>> action;
  Vec<T> trace_vector;
  Vec<T> central_idempotent;  // in the regular representation
};

template <FieldElement T>
Vec<T> trace_vector(const std::vector<Matrix<T>>& action) {
  Vec<T> out;
  for (const auto& m : action) out.push_back(m.trace());
  return out;
}

/// Does E satisfy E(rho_a) E(rho_b) = alpha(a,b) E(rho_ab) and E(rho_1) = 1?
template <FieldElement T>
bool satisfies_relations(const TwistedGroupAlgebra<T>& alg, const std::vector<Matrix<T>>& action) {
  if (action.size() != alg.dim()) return false;
  const auto& g = alg.group();
  const std::size_t d = action.front().rows();
  if (!(action[0] == Matrix<T>::identity(d, alg.like()))) return false;
  for (Elem a = 0; a < alg.dim(); ++a)
    for (Elem b = 0; b < alg.dim(); ++b)
      if (!(action[a] * action[b] == action[g.mul(a, b)] * alg.factor_set()(a, b))) return false;
  return true;
}

/// Lexicographic comparison of equal-length trace vectors.
template <FieldElement T>
bool vec_less(const Vec<T>& a, const Vec<T>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace dcrep

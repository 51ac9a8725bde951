#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "dcrep/factor.hpp"
#include "dcrep/twisted_algebra.hpp"

namespace dcrep {

namespace detail {

template <FieldElement T>
std::string not_split_message(const T& like, const std::vector<int>& degrees) {
  std::string msg = "field does not split; enlarge k";
  if constexpr (std::is_same_v<T, GF>) {
    int l = 1;
    for (int d : degrees) l = std::lcm(l, d);
    msg += " (suggested extension: GF(" + std::to_string(like.field().p()) + "^" +
           std::to_string(like.field().k() * l) + "))";
  } else {
    (void)like;
    (void)degrees;
    msg += " (use a finite splitting field)";
  }
  return msg;
}

template <FieldElement T>
Vec<T> random_combination(const std::vector<Vec<T>>& basis, const T& like, Rng& rng) {
  Vec<T> v(basis.front().size(), like.zero());
  for (const auto& b : basis) {
    const T c = FieldOps<T>::random(like, rng);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
  }
  return v;
}

template <FieldElement T>
std::size_t span_dim(const std::vector<Vec<T>>& vecs, const T& like) {
  if (vecs.empty()) return 0;
  return rank(Matrix<T>::from_columns(vecs, vecs.front().size(), like));
}

/// Minimal polynomial of x inside the corner algebra with identity `unit`.
template <FieldElement T>
Polynomial<T> element_minpoly(const TwistedGroupAlgebra<T>& alg, const Vec<T>& x, const Vec<T>& unit) {
  return krylov_minimal_polynomial<T>(unit, [&](const Vec<T>& v) { return alg.multiply(x, v); }, alg.dim());
}

}  // namespace detail

/// Primitive central idempotents of a split semisimple twisted group algebra.
template <FieldElement T>
std::vector<Vec<T>> primitive_central_idempotents(const TwistedGroupAlgebra<T>& alg, Rng& rng) {
  const T like = alg.like();
  const std::size_t n = alg.dim();
  const auto& gens = alg.group().generators();
  // center: z with rho_g z = z rho_g for all generators g
  Matrix<T> sys(std::max<std::size_t>(1, gens.size()) * n, n, like);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto d = alg.left_matrix(gens[gi]) - alg.right_matrix(gens[gi]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(gi * n + i, j) = d(i, j);
  }
  const auto center = nullspace(sys);
  const std::size_t r = center.size();

  std::vector<Vec<T>> idems{alg.unit()};
  int stale = 0;
  while (idems.size() < r) {
    if (++stale > 200) throw CheckFailure("central idempotent refinement did not converge");
    const Vec<T> z = detail::random_combination(center, like, rng);
    std::vector<Vec<T>> next;
    bool progress = false;
    for (const auto& e : idems) {
      std::vector<Vec<T>> ez;
      for (const auto& c : center) ez.push_back(alg.multiply(e, c));
      if (detail::span_dim(ez, like) == 1) {
        next.push_back(e);
        continue;
      }
      const Vec<T> x = alg.multiply(z, e);
      const auto mp = detail::element_minpoly(alg, x, e);
      const auto split = FieldOps<T>::split(mp, rng);
      if (!split.nonlinear_degrees.empty())
        throw Unsupported(detail::not_split_message(like, split.nonlinear_degrees));
      for (const auto& [root, mult] : split.roots)
        if (mult != 1) throw CheckFailure("center is not reduced: algebra is not semisimple");
      if (split.roots.size() == 1) {
        next.push_back(e);
        continue;
      }
      progress = true;
      for (std::size_t i = 0; i < split.roots.size(); ++i) {
        Vec<T> acc = e;
        for (std::size_t j = 0; j < split.roots.size(); ++j) {
          if (i == j) continue;
          const T ci = split.roots[i].first, cj = split.roots[j].first;
          Vec<T> factor = x;
          for (std::size_t k = 0; k < n; ++k) factor[k] = (x[k] - cj * e[k]) / (ci - cj);
          acc = alg.multiply(acc, factor);
        }
        next.push_back(std::move(acc));
      }
    }
    idems = std::move(next);
    if (progress) stale = 0;
  }
  return idems;
}

/// Simple modules of a twisted group algebra over a splitting field whose
/// characteristic does not divide the group order. Sorted by (dim, trace vector).
template <FieldElement T>
std::vector<SimpleAlgebraModule<T>> simple_modules(const TwistedGroupAlgebra<T>& alg, std::uint64_t seed) {
  const T like = alg.like();
  const std::size_t n = alg.dim();
  const long long p = FieldOps<T>::characteristic(like);
  if (p != 0 && static_cast<long long>(n) % p == 0)
    throw Unsupported("modular case unsupported: characteristic " + std::to_string(p) + " divides |A^lambda| = " +
                      std::to_string(n));
  Rng rng(seed);
  const auto idems = primitive_central_idempotents(alg, rng);

  std::vector<SimpleAlgebraModule<T>> out;
  std::size_t total = 0;
  for (const auto& e : idems) {
    std::vector<Vec<T>> block;
    for (Elem g = 0; g < n; ++g) block.push_back(alg.multiply(alg.basis(g), e));
    const std::size_t bd = detail::span_dim(block, like);
    std::size_t d = 1;
    while (d * d < bd) ++d;
    if (d * d != bd) throw Unsupported(detail::not_split_message(like, {static_cast<int>(bd)}));

    // a rank-one element w: the left ideal A w is then the simple module
    Vec<T> w = e;
    if (d > 1) {
      bool found = false;
      for (int attempt = 0; attempt < 400 && !found; ++attempt) {
        const Vec<T> y = alg.multiply(detail::random_combination(block, like, rng), e);
        const auto mp = detail::element_minpoly(alg, y, e);
        const auto split = FieldOps<T>::split(mp, rng);
        for (const auto& [root, mult] : split.roots) {
          if (mult != 1) continue;
          const auto q = mp / Polynomial<T>::linear(root);
          const Vec<T> cand = alg.evaluate(q, y, e);
          std::vector<Vec<T>> ideal;
          for (Elem g = 0; g < n; ++g) ideal.push_back(alg.multiply(alg.basis(g), cand));
          if (detail::span_dim(ideal, like) == d) {
            w = cand;
            found = true;
            break;
          }
        }
      }
      if (!found) throw Unsupported(detail::not_split_message(like, {static_cast<int>(d)}));
    }

    // spin w
    std::vector<Vec<T>> basis;
    TrackedEchelon<T> ech(n, like);
    for (Elem g = 0; g < n && basis.size() < d; ++g) {
      Vec<T> v = alg.multiply(alg.basis(g), w);
      if (!ech.insert(v)) basis.push_back(std::move(v));
    }
    if (basis.size() != d) throw CheckFailure("spinning produced the wrong dimension");
    const auto bmat = Matrix<T>::from_columns(basis, n, like);
    SimpleAlgebraModule<T> mod;
    mod.dim = d;
    for (Elem g = 0; g < n; ++g) {
      Matrix<T> m(d, d, like);
      for (std::size_t j = 0; j < d; ++j) {
        const auto sol = solve_linear(bmat, alg.multiply(alg.basis(g), basis[j]));
        if (!sol.particular) throw CheckFailure("spun subspace is not invariant");
        for (std::size_t i = 0; i < d; ++i) m(i, j) = (*sol.particular)[i];
      }
      mod.action.push_back(std::move(m));
    }
    mod.trace_vector = trace_vector(mod.action);
    mod.central_idempotent = e;
    total += d * d;
    out.push_back(std::move(mod));
  }

  // certificates
  if (total != n) throw CheckFailure("sum of squared dimensions differs from the algebra dimension");
  for (const auto& m : out) {
    if (!satisfies_relations(alg, m.action)) throw CheckFailure("module matrices violate the algebra relations");
    std::vector<Matrix<T>> gens;
    for (auto g : alg.group().generators()) gens.push_back(m.action[g]);
    if (!gens.empty() && intertwiners(gens, gens, m.dim, m.dim, like).size() != 1)
      throw CheckFailure("module endomorphism ring is larger than the field");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return vec_less(a.trace_vector, b.trace_vector);
  });
  for (std::size_t i = 1; i < out.size(); ++i)
    if (out[i].trace_vector == out[i - 1].trace_vector) throw CheckFailure("two simple modules share a trace vector");
  return out;
}

}  // namespace dcrep

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dcrep/cyclotomic.hpp"
#include "dcrep/galois_field.hpp"
#include "dcrep/polynomial.hpp"
#include "dcrep/rational.hpp"

namespace dcrep {

using Rng = std::mt19937_64;

template <FieldElement T>
using Factorization = std::vector<std::pair<Polynomial<T>, int>>;

/// Complete factorization of a nonzero polynomial over a finite field into
/// monic irreducibles with multiplicities (Cantor-Zassenhaus). The leading
/// coefficient is dropped. Sorted by degree, then by coefficients from the
/// constant term up, so the content does not depend on the seed.
Factorization<GF> factor_squarefree_finite(const Polynomial<GF>& f, std::uint64_t seed);

/// Overloads that exist only to reject non-finite fields with a clear error.
Factorization<Rational> factor_squarefree_finite(const Polynomial<Rational>& f, std::uint64_t seed);
Factorization<Cyclotomic> factor_squarefree_finite(const Polynomial<Cyclotomic>& f, std::uint64_t seed);

bool is_irreducible(const Polynomial<GF>& f);

/// Squarefree decomposition f = prod g_i^i (monic g_i, pairwise coprime).
Factorization<GF> squarefree_decomposition(const Polynomial<GF>& f);

/// Distinct-degree factorization of a monic squarefree polynomial: pairs
/// (product of all irreducible factors of degree d, d).
std::vector<std::pair<Polynomial<GF>, int>> distinct_degree_factorization(const Polynomial<GF>& f);

struct RationalRoots {
  std::vector<std::pair<Rational, int>> roots;  // sorted ascending
  Polynomial<Rational> remainder;               // monic, no rational roots
};
RationalRoots rational_roots(const Polynomial<Rational>& f);

/// Linear part of a factorization plus the degrees of whatever does not split.
template <FieldElement T>
struct LinearSplit {
  std::vector<std::pair<T, int>> roots;
  std::vector<int> nonlinear_degrees;
};

/// Per-field operations used by the MeatAxe.
template <class T>
struct FieldOps;

template <>
struct FieldOps<GF> {
  static GF random(const GF& like, Rng& rng) {
    std::uniform_int_distribution<std::uint64_t> d(0, like.field().q() - 1);
    return GF(like.field(), static_cast<GF::code_type>(d(rng)));
  }
  static long long characteristic(const GF& like) { return like.field().p(); }
  static LinearSplit<GF> split(const Polynomial<GF>& f, Rng& rng);
  static std::string describe(const GF& like);
};

template <>
struct FieldOps<Rational> {
  static Rational random(const Rational&, Rng& rng) {
    std::uniform_int_distribution<int> d(-20, 20);
    return Rational(d(rng));
  }
  static long long characteristic(const Rational&) { return 0; }
  static LinearSplit<Rational> split(const Polynomial<Rational>& f, Rng& rng);
  static std::string describe(const Rational&) { return "Q"; }
};

}  // namespace dcrep

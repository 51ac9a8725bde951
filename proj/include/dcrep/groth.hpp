#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/clifford.hpp"
#include "dcrep/hw_poset.hpp"
#include "dcrep/model.hpp"

namespace dcrep {

/// Simple module of a twisted group algebra over a finite field, with its trace
/// vector lifted to Z[zeta_e].
struct LiftedSimple {
  std::size_t dim = 0;
  std::vector<Cyclotomic> lifted;
  SimpleAlgebraModule<GF> module;
};

struct TitsOptions {
  int p = 5;
  int ell = 7;
  std::optional<long long> lift_order;  // overrides e
  std::uint64_t seed = 0;
};

/// Bijection between the simples over F_ell (characteristic zero side) and over F_{p^k}.
struct SimpleMatching {
  long long e = 1;
  FieldSpec char0_field, charp_field;
  std::string char0_zeta, charp_zeta;  // image of zeta_e in each field
  std::vector<LiftedSimple> char0, charp;
  std::vector<std::size_t> to_charp;  // char0 index -> charp index

  nlohmann::json to_json() const;
};

/// Lift a trace in F_q (q = 1 mod e) to Z[zeta_e] as a sum of `dim` e-th roots of unity,
/// zeta_e mapping to root_of_unity(e). Throws Unsupported when no or several lifts exist.
Cyclotomic lift_trace(const GF& t, std::size_t dim, long long e);

/// Lifting exponent: lcm of the exponent of the group and the orders of the alpha values.
long long lifting_exponent(const FiniteGroup& stab, const SymbolicFactorSet& alpha);

SimpleMatching tits_match(const FiniteGroup& stab, const SymbolicFactorSet& alpha, const TitsOptions& opt);

/// Matching then acting by a agrees with acting then matching, for every a in A and
/// every weight in the orbit of rep.
bool matching_commutes_with_action(const ComponentAction& action, const Weight& rep, const SymbolicFactorSet& alpha,
                                   const SimpleMatching& m);

/// Image of a rational number in F_p (denominator prime to p).
GF reduce_mod_p(const Rational& x, const GF& like);

struct GrothLabel {
  Weight rep;
  std::size_t e_index = 0;
  std::size_t dim_e = 0;
  std::string str() const;
};

struct DecompositionReport {
  std::vector<GrothLabel> char0_labels, charp_labels;
  std::vector<std::vector<long long>> matrix;  // rows: char p labels, columns: char 0 labels
  Rational determinant;
  bool is_permutation = false;
  bool dims_preserved = false;
  std::vector<Weight> orbit_reps;
  std::vector<SimpleMatching> matchings;

  std::string to_csv() const;
  nlohmann::json to_json() const;
};

/// d_G on the labels of the model's ideal, in the bases of simples (char 0) and
/// standard objects (char p).
DecompositionReport decomposition_map(const ModelFile& m, const TitsOptions& opt);

struct UnitriangularReport {
  std::vector<std::vector<long long>> matrix;  // rows [Delta] in the given order, columns [L] in label order
  bool is_permutation = false;
  bool given_order_is_linear_extension = false;
  bool reordered_is_identity = false;
  bool strict_pairs_below_diagonal = false;  // in the linear extension used for reordering
  bool ok() const { return is_permutation && reordered_is_identity && strict_pairs_below_diagonal; }
};

/// Labels sorted by height, ties by index: a linear extension of the label order.
std::vector<std::size_t> linear_extension(const LabelPoset& p);
UnitriangularReport verify_unitriangular_char0(const LabelPoset& p, const std::vector<std::size_t>& order);

}  // namespace dcrep

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/clifford.hpp"
#include "dcrep/field_spec.hpp"

namespace dcrep {

/// Matrices of a representation, one per group element id.
using Rep = std::vector<Matrix<GF>>;

inline std::size_t rep_dim(const Rep& v) { return v.empty() ? 0 : v.front().rows(); }
bool is_representation(const FiniteGroup& g, const Rep& v);
bool is_automorphism(const FiniteGroup& g, const std::vector<Elem>& phi);
/// (phi V)(h) = V(phi^-1(h)).
Rep twist_rep(const FiniteGroup& g, const Rep& v, const std::vector<Elem>& phi);
/// Basis of Hom_H(V, W): matrices X with X V(h) = W(h) X on generators.
std::vector<Matrix<GF>> hom_space(const FiniteGroup& g, const Rep& v, const Rep& w);
/// End = scalars; with Maschke (char not dividing |H|) this certifies irreducibility.
bool is_irreducible(const FiniteGroup& g, const Rep& v);
Rep restrict_rep(const Subgroup& h, const Rep& v);
/// Ind_H^G W by the transversal formula W(r_i^-1 x r_j); W is indexed by local ids of H.
Rep induce_from_subgroup(const FiniteGroup& g, const Subgroup& h, const Rep& w);
/// Irreducible representations of g over the field of `one`, from the regular module.
std::vector<SimpleAlgebraModule<GF>> enumerate_irr(const FiniteGroup& g, const GF& one, std::uint64_t seed);

/// A finite group G with a normal subgroup G0, a section iota of G -> A = G/G0
/// and a finite field whose characteristic does not divide |G|.
class FiniteModel {
 public:
  FiniteModel(std::string name, FiniteGroup g, std::vector<Elem> normal, std::vector<Elem> section, FieldSpec field);
  static FiniteModel from_json(const nlohmann::json& j);
  /// Shipped fixture by name, or a path to a JSON file.
  static FiniteModel load(const std::string& name_or_path);

  const std::string& name() const { return name_; }
  const FiniteGroup& group() const { return g_; }
  const Subgroup& identity_component() const { return g0_; }
  const FiniteGroup& component_group() const { return a_.group; }
  const std::vector<Elem>& section() const { return section_; }
  const FieldSpec& field() const { return field_; }
  GF one() const { return GF(field_.galois_field(), GF::code_type{1}); }
  const std::vector<std::size_t>& expected_irr_dims() const { return expected_dims_; }

  Elem coset(Elem x) const { return a_.coset_of[x]; }
  Elem iota(Elem a) const { return section_.at(a); }
  /// gamma(a,b) = iota(ab)^-1 iota(a) iota(b), an element of G0 (ambient id).
  Elem gamma(Elem a, Elem b) const;
  /// First triple violating gamma(ab,c) ad(iota(c)^-1)(gamma(a,b)) = gamma(a,bc) gamma(b,c).
  std::optional<std::string> check_gamma_identity() const;
  /// Local id in G0 of an ambient element of G0.
  Elem local0(Elem x) const { return g0_.to_local(x); }
  /// Elements of G lying over a subgroup B of A, sorted.
  std::vector<Elem> preimage(const std::vector<Elem>& b) const;
  /// ^x L for x in G: g -> L(x^-1 g x), L a representation of G0.
  Rep twist_by(const Rep& l, Elem x) const;

 private:
  std::string name_;
  FiniteGroup g_;
  Subgroup g0_;
  Quotient a_;
  std::vector<Elem> section_;
  FieldSpec field_;
  std::vector<std::size_t> expected_dims_;
};

/// k[B] (x) V with x = iota(a) g acting on f (x) v by af (x) V(gamma(a,f) iota(f)^-1 g iota(f)) v.
/// B is a subgroup of A (sorted ids); the result is a representation of the preimage of B,
/// indexed by local ids of Subgroup::of(G, preimage(B)). Blocks follow the order of B.
Rep induce_over(const FiniteModel& m, const Rep& v, const std::vector<Elem>& b);
/// Ind from G0 to G.
Rep induce(const FiniteModel& m, const Rep& v);
/// Builds the function-space model {F : G -> V, F(gh) = V(h^-1) F(g)} and checks that
/// f (x) v -> (F supported on iota(f) G0 with F(iota(f)) = v) intertwines with `induced`.
bool function_space_model_agrees(const FiniteModel& m, const Rep& v, const Rep& induced);

/// theta_a : L -> ^{iota(a)} L, first nonzero entry 1, or nullopt if no such map.
std::optional<Matrix<GF>> compute_theta(const FiniteModel& m, const Rep& l, Elem a);

/// Intertwiners theta_a for a in B (indexed by local id in B). Throws if some a in B does not fix L.
std::vector<Matrix<GF>> theta_family(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b);

/// alpha(a,b) theta_ab = L(gamma(a,b)) theta_b theta_a on the local group of B.
FactorSet<GF> extract_alpha(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                            const std::vector<Matrix<GF>>& theta);

/// iota(a) g -> E(rho_a) (x) theta_a^-1 L(g), a representation of the preimage of B.
Rep build_E_tensor_L(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                     const std::vector<Matrix<GF>>& theta, const std::vector<Matrix<GF>>& e);

/// Ind from the preimage of B to G.
Rep induce_label(const FiniteModel& m, const std::vector<Elem>& b, const Rep& el);

struct EndomorphismReport {
  std::size_t dim = 0;       // dim End_{G^lambda}(Ind L), solved directly
  std::size_t expected = 0;  // |A^lambda|
  bool right_action_commutes = false;
  bool spans = false;          // the maps R_a form a basis of End
  bool anti_homomorphism = false;  // R_b R_a = alpha(a,b) R_ab
  bool ok() const { return dim == expected && right_action_commutes && spans && anti_homomorphism; }
};
EndomorphismReport endomorphism_algebra(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                                        const std::vector<Matrix<GF>>& theta, const FactorSet<GF>& alpha);

struct ClassificationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct LabelRow {
  std::size_t orbit_rep = 0;      // index into Irr(G0)
  std::vector<std::size_t> orbit;  // indices into Irr(G0)
  std::size_t stabilizer_order = 0;
  std::size_t dim_e = 0;
  std::size_t dim_l = 0;
  std::size_t dim = 0;
  std::size_t matched_irr = 0;  // index into Irr(G)
  Rep module;                   // L(lambda,E) as a representation of G
};

struct ClassificationReport {
  std::string model;
  std::vector<std::size_t> irr_g0_dims;
  std::vector<std::size_t> irr_dims;
  std::vector<LabelRow> labels;
  std::vector<ClassificationCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

ClassificationReport verify_classification(const FiniteModel& m, std::uint64_t seed);

struct RescalingReport {
  std::size_t simples = 0;
  std::size_t trials = 0;
  bool ok = true;
  std::string detail;
};
/// For every simple L of G0 and `trials` random rescalings theta_a -> t_a theta_a (t_1 = 1):
/// the extracted alpha is a normalized cocycle equal to coboundary_rescale(alpha, t).
RescalingReport check_theta_rescaling(const FiniteModel& m, std::size_t trials, std::uint64_t seed);

}  // namespace dcrep

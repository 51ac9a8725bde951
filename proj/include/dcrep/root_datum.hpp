#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/group.hpp"
#include "dcrep/rational.hpp"

namespace dcrep {

using Weight = std::vector<long long>;
using IntMatrix = std::vector<std::vector<long long>>;
using FormalCharacter = std::map<Weight, long long>;

std::string weight_str(const Weight& w);
long long pairing(const Weight& x, const Weight& coweight);

/// Based root datum on X = Z^rank given by simple roots and simple coroots.
/// Positive roots and coroots are generated by closing the simple ones under
/// the simple reflections.
class RootDatum {
 public:
  RootDatum() = default;
  RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Weight> simple_coroots, std::string name = "");
  static RootDatum from_json(const nlohmann::json& j);
  /// Torus of the given rank (no roots).
  static RootDatum torus(int rank);
  nlohmann::json to_json() const;

  const std::string& name() const { return name_; }
  int rank() const { return rank_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::vector<Weight>& simple_roots() const { return simple_roots_; }
  const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Weight>& positive_roots() const { return pos_roots_; }
  const std::vector<Weight>& positive_coroots() const { return pos_coroots_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// Sum of the positive coroots.
  const Weight& two_rho_check() const { return two_rho_check_; }
  /// Sum of the positive roots.
  const Weight& two_rho() const { return two_rho_; }

  void check_weight(const Weight& w) const;
  bool is_dominant(const Weight& w) const;
  /// Coordinates of w in the basis of simple roots, or nullopt if w is not in
  /// their rational span.
  std::optional<std::vector<Rational>> simple_root_coordinates(const Weight& w) const;
  /// True iff lambda - mu is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  bool dominance_less(const Weight& mu, const Weight& lambda) const {
    return mu != lambda && dominance_leq(mu, lambda);
  }
  /// <w, 2 rho-check>
  long long height(const Weight& w) const { return pairing(w, two_rho_check_); }
  Weight reflect(std::size_t i, const Weight& w) const;
  /// w_0 applied to a dominant weight.
  Weight lowest_weight(const Weight& dominant) const;

  long long weyl_dimension(const Weight& dominant) const;
  FormalCharacter weight_multiplicities(const Weight& dominant) const;
  /// Dominant weights mu with mu <= lambda.
  std::vector<Weight> dominant_weights_below(const Weight& dominant) const;

 private:
  void require_dominant(const Weight& w) const;
  long long form(const Weight& x, const Weight& y) const;

  std::string name_;
  int rank_ = 0;
  std::vector<Weight> simple_roots_, simple_coroots_;
  std::vector<Weight> pos_roots_, pos_coroots_;
  IntMatrix cartan_;
  Weight two_rho_check_, two_rho_;
};

/// Action of a finite group A on X by integer matrices, lambda -> M_a lambda.
/// Coweights transform by the inverse transpose.
class ComponentAction {
 public:
  ComponentAction() = default;
  ComponentAction(RootDatum datum, FiniteGroup group, std::vector<IntMatrix> matrices);
  static ComponentAction from_json(const RootDatum& datum, const nlohmann::json& j);
  /// Trivial action of the trivial group.
  static ComponentAction trivial(const RootDatum& datum);
  nlohmann::json to_json() const;

  const RootDatum& datum() const { return datum_; }
  const FiniteGroup& group() const { return group_; }
  const IntMatrix& matrix(Elem a) const { return mats_.at(a); }

  Weight act(Elem a, const Weight& w) const;
  Weight act_coweight(Elem a, const Weight& c) const;

  /// Orbit in lexicographic order.
  std::vector<Weight> orbit(const Weight& w) const;
  /// Sorted ids of the stabilizer.
  std::vector<Elem> stabilizer(const Weight& w) const;
  /// Lexicographically minimal orbit element.
  Weight canonical_rep(const Weight& w) const { return orbit(w).front(); }
  /// Smallest a with a . canonical_rep(w) = w.
  Elem transporter(const Weight& w) const;

  struct OrbitStabilizer {
    std::vector<Weight> orbit;
    std::vector<Elem> stabilizer;
  };
  /// Requires a dominant weight.
  OrbitStabilizer orbit_and_stabilizer(const Weight& w) const;

  /// Some a with a.lambda strictly below lambda_prime in dominance order (smallest id).
  std::optional<Elem> order_strict_weight_witness(const Weight& lambda, const Weight& lambda_prime) const;

 private:
  RootDatum datum_;
  FiniteGroup group_;
  std::vector<IntMatrix> mats_;
  std::vector<IntMatrix> comats_;
};

/// Root datum presets shipped with the data directory: A1, A1xA1, A2, torus1, torus2.
RootDatum root_datum_preset(const std::string& name);

}  // namespace dcrep

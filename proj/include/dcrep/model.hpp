#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/clifford.hpp"
#include "dcrep/field_spec.hpp"
#include "dcrep/root_datum.hpp"

namespace dcrep {

/// Finite set of dominant weights: height <= max_height, every coordinate bounded by
/// max_abs_coord, plus explicit extra weights. The generated set is closed under the
/// A-action and under dominance downsets.
struct IdealSpec {
  std::optional<long long> max_height;
  std::optional<long long> max_abs_coord;
  std::vector<Weight> weights;

  static IdealSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/// Model file: root datum, component action, cocycles per orbit representative,
/// field, ideal and an optional finite-model fixture.
struct ModelFile {
  std::string name;
  RootDatum datum;
  ComponentAction action;
  FieldSpec field = FieldSpec::finite(5);
  std::optional<int> aux_prime;
  std::map<Weight, SymbolicFactorSet> cocycles;
  IdealSpec ideal;
  std::string finite_model;

  static ModelFile from_json(const nlohmann::json& j);
  /// Shipped model by name, or a path to a JSON file.
  static ModelFile load(const std::string& name_or_path);

  /// Cocycle attached to an orbit representative (trivial when not listed).
  SymbolicFactorSet cocycle_for(const Weight& rep) const;
  /// Dominant weights of the ideal, sorted lexicographically.
  std::vector<Weight> ideal_weights() const;
  /// Canonical orbit representatives of the ideal, sorted.
  std::vector<Weight> orbit_reps() const;
};

/// Dominant weights generated by an ideal specification.
std::vector<Weight> generate_ideal(const ComponentAction& action, const IdealSpec& spec);

}  // namespace dcrep

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcrep/clifford.hpp"
#include "dcrep/field_spec.hpp"
#include "dcrep/finite_model.hpp"
#include "dcrep/model.hpp"

namespace dcrep {

/// [lambda, E]: an orbit representative and a simple module of the twisted algebra
/// on its stabilizer (index into the sorted simple_modules list).
struct SimpleLabel {
  Weight rep;
  std::vector<Weight> orbit;
  std::vector<Elem> stabilizer;
  std::size_t e_index = 0;
  std::size_t dim_e = 0;
  std::vector<std::string> traces;  // trace of rho_a on E, a in the stabilizer

  /// "lambda|dimE", used for DOT node labels.
  std::string str() const;
  nlohmann::json to_json() const;
};

using CocycleLookup = std::function<SymbolicFactorSet(const Weight&)>;

/// One label per (orbit, simple module). Requires char k not dividing |A|.
std::vector<SimpleLabel> classify_labels(const ComponentAction& action, const std::vector<Weight>& reps,
                                         const CocycleLookup& cocycles, const FieldSpec& field, std::uint64_t seed);
std::vector<SimpleLabel> classify_labels(const ModelFile& m, std::uint64_t seed);

/// [lambda,E] < [lambda',E'] iff a.lambda < lambda' for some a in A.
bool label_less(const ComponentAction& action, const SimpleLabel& x, const SimpleLabel& y);

struct LabelPoset {
  ComponentAction action;
  std::vector<SimpleLabel> labels;
  std::vector<std::vector<bool>> less;  // less[i][j]: labels[i] < labels[j]

  static LabelPoset build(const ComponentAction& action, std::vector<SimpleLabel> labels);
  /// Covering pairs (i, j) with i < j and nothing strictly in between.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;
  /// Graphviz digraph of the Hasse diagram, edges pointing upward.
  std::string to_dot() const;
};

struct OrderReport {
  bool ok = true;
  std::vector<std::string> violations;
  std::size_t pairs_checked = 0;
  nlohmann::json to_json() const;
};

/// Irreflexivity, transitivity, antisymmetry; <lambda - a.lambda, 2 rho-check> = 0 on
/// every orbit; positive roots have positive height; the label weights form an ideal.
OrderReport check_partial_order(const LabelPoset& p);

struct DeltaData {
  long long dim = 0;
  FormalCharacter character;
};
/// Dimension and formal character of Delta(lambda,E) (and of nabla(lambda,E)).
DeltaData delta_dimension_and_character(const ComponentAction& action, const SimpleLabel& label);
std::string character_csv(const FormalCharacter& ch, int rank);

struct AxiomCheck {
  enum class Status { pass, fail, not_computed };
  std::string name;
  Status status = Status::pass;
  std::string detail;
};
std::string status_str(AxiomCheck::Status s);

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  nlohmann::json to_json() const;
};

/// Desk-checkable highest weight axioms on the ideal. With a finite model, also
/// checks dim Hom(L(lambda,E), L(mu,E')) = delta on its simple modules.
AxiomReport hw_axiom_report(const LabelPoset& p, const FiniteModel* oracle = nullptr, std::uint64_t seed = 0);

}  // namespace dcrep

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace dcrep {

using Elem = std::size_t;

/// Finite group given by a multiplication table on ids 0..n-1; 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates the table (identity, closure, inverses, associativity).
  explicit FiniteGroup(std::vector<std::vector<Elem>> table);
  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup trivial() { return cyclic(1); }
  static FiniteGroup from_json(const nlohmann::json& j);

  std::size_t order() const { return table_.size(); }
  Elem mul(Elem a, Elem b) const { return table_[a][b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem conj(Elem a, Elem b) const { return mul(mul(a, b), inv(a)); }  // a b a^-1
  Elem pow(Elem a, long long e) const;
  std::size_t element_order(Elem a) const;
  std::size_t exponent() const;
  const std::vector<std::vector<Elem>>& table() const { return table_; }
  void check_element(Elem a) const;

  /// A small generating set, chosen greedily in id order.
  const std::vector<Elem>& generators() const { return gens_; }

  bool is_subgroup(const std::vector<Elem>& s) const;
  bool is_normal(const std::vector<Elem>& s) const;
  /// Sorted closure of the given elements.
  std::vector<Elem> generated(const std::vector<Elem>& s) const;
  bool is_abelian() const;

  nlohmann::json to_json() const;

 private:
  std::vector<std::vector<Elem>> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
};

/// A subgroup relabelled as a group in its own right; `parent[i]` is the id in
/// the ambient group of local element i (parent[0] is the identity).
struct Subgroup {
  FiniteGroup group;
  std::vector<Elem> parent;
  std::vector<long> local;  // ambient id -> local id, or -1

  static Subgroup of(const FiniteGroup& g, std::vector<Elem> elements);
  bool contains(Elem ambient) const { return local[ambient] >= 0; }
  Elem to_local(Elem ambient) const;
};

/// Quotient by a normal subgroup. Cosets are labelled by the order in which
/// their representatives appear in `reps` (reps[0] must lie in the subgroup).
struct Quotient {
  FiniteGroup group;
  std::vector<Elem> coset_of;  // ambient id -> quotient id
  std::vector<Elem> reps;

  static Quotient of(const FiniteGroup& g, const std::vector<Elem>& normal, const std::vector<Elem>& reps);
};

/// Left transversal of a subgroup: the smallest id of each left coset x H, in
/// increasing order (so the first representative is the identity).
std::vector<Elem> left_transversal(const FiniteGroup& g, const std::vector<Elem>& subgroup);

}  // namespace dcrep

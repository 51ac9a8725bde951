#include "dcrep/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dcrep/error.hpp"

namespace dcrep {

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvalidInput("group table is empty");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvalidInput("group table is not square");
    for (auto x : row)
      if (x >= n) throw InvalidInput("group table entry out of range");
  }
  for (Elem a = 0; a < n; ++a)
    if (table_[0][a] != a || table_[a][0] != a) throw InvalidInput("element 0 is not the identity");
  inv_.assign(n, n);
  for (Elem a = 0; a < n; ++a) {
    std::vector<bool> seen(n, false);
    for (Elem b = 0; b < n; ++b) {
      if (seen[table_[a][b]]) throw InvalidInput("group table row " + std::to_string(a) + " is not a permutation");
      seen[table_[a][b]] = true;
      if (table_[a][b] == 0) inv_[a] = b;
    }
    if (table_[inv_[a]][a] != 0) throw InvalidInput("left and right inverses differ");
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvalidInput("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                             "," + std::to_string(c) + ")");
  std::vector<Elem> span{0};
  for (Elem a = 1; a < n && span.size() < n; ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens_.push_back(a);
    span = generated(gens_);
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  try {
    const auto& t = j.is_object() ? j.at("table") : j;
    return FiniteGroup(t.get<std::vector<std::vector<Elem>>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("group table: ") + e.what());
  }
}

nlohmann::json FiniteGroup::to_json() const { return table_; }

void FiniteGroup::check_element(Elem a) const {
  if (a >= order()) throw InvalidInput("invalid group element id " + std::to_string(a));
}

Elem FiniteGroup::pow(Elem a, long long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem acc = 0;
  for (long long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (Elem a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool FiniteGroup::is_subgroup(const std::vector<Elem>& s) const {
  if (s.empty()) return false;
  std::set<Elem> set(s.begin(), s.end());
  if (!set.count(0)) return false;
  for (auto a : set) {
    if (a >= order()) return false;
    if (!set.count(inv(a))) return false;
    for (auto b : set)
      if (!set.count(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<Elem>& s) const {
  if (!is_subgroup(s)) return false;
  std::set<Elem> set(s.begin(), s.end());
  for (Elem g = 0; g < order(); ++g)
    for (auto h : set)
      if (!set.count(conj(g, h))) return false;
  return true;
}

std::vector<Elem> FiniteGroup::generated(const std::vector<Elem>& s) const {
  std::set<Elem> out{0};
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (auto x : frontier)
      for (auto g : s) {
        const Elem y = mul(x, g);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = 0; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup Subgroup::of(const FiniteGroup& g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!g.is_subgroup(elements)) throw InvalidInput("element set is not a subgroup");
  Subgroup s;
  s.parent = elements;
  s.local.assign(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) s.local[elements[i]] = static_cast<long>(i);
  std::vector<std::vector<Elem>> t(elements.size(), std::vector<Elem>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      t[i][j] = static_cast<Elem>(s.local[g.mul(elements[i], elements[j])]);
  s.group = FiniteGroup(std::move(t));
  return s;
}

Elem Subgroup::to_local(Elem ambient) const {
  if (ambient >= local.size() || local[ambient] < 0)
    throw InvalidInput("element " + std::to_string(ambient) + " is not in the subgroup");
  return static_cast<Elem>(local[ambient]);
}

Quotient Quotient::of(const FiniteGroup& g, const std::vector<Elem>& normal, const std::vector<Elem>& reps) {
  if (!g.is_normal(normal)) throw InvalidInput("subgroup is not normal");
  if (reps.size() * normal.size() != g.order()) throw InvalidInput("wrong number of coset representatives");
  Quotient q;
  q.reps = reps;
  q.coset_of.assign(g.order(), g.order());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    g.check_element(reps[i]);
    for (auto h : normal) {
      const Elem x = g.mul(reps[i], h);
      if (q.coset_of[x] != g.order()) throw InvalidInput("two representatives lie in the same coset");
      q.coset_of[x] = i;
    }
  }
  if (q.coset_of[0] != 0) throw InvalidInput("first coset representative must lie in the subgroup");
  std::vector<std::vector<Elem>> t(reps.size(), std::vector<Elem>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) t[i][j] = q.coset_of[g.mul(reps[i], reps[j])];
  q.group = FiniteGroup(std::move(t));
  return q;
}

std::vector<Elem> left_transversal(const FiniteGroup& g, const std::vector<Elem>& subgroup) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    if (covered[x]) continue;
    out.push_back(x);
    for (auto h : subgroup) covered[g.mul(x, h)] = true;
  }
  return out;
}

}  // namespace dcrep

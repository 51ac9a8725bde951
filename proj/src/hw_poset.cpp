#include "dcrep/hw_poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dcrep {

namespace {

template <FieldElement T>
std::vector<SimpleLabel> classify_over(const ComponentAction& action, const std::vector<Weight>& reps,
                                       const CocycleLookup& cocycles, const T& one, std::uint64_t seed) {
  const auto& A = action.group();
  std::vector<SimpleLabel> out;
  for (const auto& w : reps) {
    const auto os = action.orbit_and_stabilizer(w);
    if (os.orbit.front() != w) throw InvalidInput("weight " + weight_str(w) + " is not its orbit representative");
    const auto stab = Subgroup::of(A, os.stabilizer);
    const TwistedGroupAlgebra<T> alg(cocycles(w).realize(stab.group, one));
    const auto simples = simple_modules(alg, seed);
    for (std::size_t i = 0; i < simples.size(); ++i) {
      SimpleLabel l{w, os.orbit, os.stabilizer, i, simples[i].dim, {}};
      for (const auto& t : simples[i].trace_vector) l.traces.push_back(t.str());
      out.push_back(std::move(l));
    }
  }
  return out;
}

}  // namespace

std::string SimpleLabel::str() const { return weight_str(rep) + "|" + std::to_string(dim_e); }

nlohmann::json SimpleLabel::to_json() const {
  return {{"orbit_rep", rep}, {"orbit", orbit},   {"stabilizer", stabilizer}, {"stabilizer_order", stabilizer.size()},
          {"e_index", e_index}, {"dim_e", dim_e}, {"traces", traces}};
}

std::vector<SimpleLabel> classify_labels(const ComponentAction& action, const std::vector<Weight>& reps,
                                         const CocycleLookup& cocycles, const FieldSpec& field, std::uint64_t seed) {
  const auto n = static_cast<long long>(action.group().order());
  if (field.characteristic() != 0 && n % field.characteristic() == 0)
    throw Unsupported("characteristic " + std::to_string(field.characteristic()) + " divides |A| = " +
                      std::to_string(n));
  std::vector<Weight> sorted = reps;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  switch (field.kind) {
    case FieldSpec::Kind::finite:
      return classify_over(action, sorted, cocycles, GF(field.galois_field(), GF::code_type{1}), seed);
    case FieldSpec::Kind::rationals:
      return classify_over(action, sorted, cocycles, Rational(1), seed);
    default:
      throw Unsupported("label classification over " + field.str() + " is not implemented; use Q or a finite field");
  }
}

std::vector<SimpleLabel> classify_labels(const ModelFile& m, std::uint64_t seed) {
  return classify_labels(m.action, m.orbit_reps(), [&](const Weight& w) { return m.cocycle_for(w); }, m.field, seed);
}

bool label_less(const ComponentAction& action, const SimpleLabel& x, const SimpleLabel& y) {
  return action.order_strict_weight_witness(x.rep, y.rep).has_value();
}

LabelPoset LabelPoset::build(const ComponentAction& action, std::vector<SimpleLabel> labels) {
  LabelPoset p{action, std::move(labels), {}};
  const auto n = p.labels.size();
  p.less.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.less[i][j] = label_less(action, p.labels[i], p.labels[j]);
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> LabelPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto n = labels.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!less[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (less[i][k] && less[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

std::string LabelPoset::to_dot() const {
  std::ostringstream s;
  s << "digraph poset {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < labels.size(); ++i) s << "  n" << i << " [label=\"" << labels[i].str() << "\"];\n";
  for (const auto& [i, j] : hasse_edges()) s << "  n" << i << " -> n" << j << ";\n";
  s << "}\n";
  return s.str();
}

nlohmann::json OrderReport::to_json() const {
  return {{"ok", ok}, {"violations", violations}, {"pairs_checked", pairs_checked}};
}

OrderReport check_partial_order(const LabelPoset& p) {
  OrderReport r;
  const auto n = p.labels.size();
  auto fail = [&](std::string msg) {
    r.ok = false;
    if (r.violations.size() < 20) r.violations.push_back(std::move(msg));
  };
  if (p.less.size() != n) {
    fail("relation has the wrong size");
    return r;
  }
  const auto& A = p.action.group();
  const auto& d = p.action.datum();
  for (std::size_t i = 0; i < n; ++i) {
    if (p.less[i][i]) fail("not irreflexive at " + p.labels[i].str());
    for (std::size_t j = 0; j < n; ++j) {
      ++r.pairs_checked;
      if (i != j && p.less[i][j] && p.less[j][i])
        fail("not antisymmetric: " + p.labels[i].str() + " and " + p.labels[j].str());
      for (std::size_t k = 0; k < n; ++k)
        if (p.less[i][j] && p.less[j][k] && !p.less[i][k])
          fail("not transitive: " + p.labels[i].str() + " < " + p.labels[j].str() + " < " + p.labels[k].str());
      // representative independence: every pair of orbit elements gives the same answer
      for (const auto& x : p.labels[i].orbit)
        for (const auto& y : p.labels[j].orbit) {
          bool any = false;
          for (Elem a = 0; a < A.order() && !any; ++a) any = d.dominance_less(p.action.act(a, x), y);
          if (any != p.less[i][j]) {
            fail("relation disagrees with the orbit computation for " + p.labels[i].str() + ", " + p.labels[j].str() +
                 " at " + weight_str(x) + ", " + weight_str(y));
          }
        }
    }
  }
  for (const auto& beta : d.positive_roots())
    if (d.height(beta) <= 0) fail("positive root " + weight_str(beta) + " has nonpositive height");
  std::set<Weight> ideal;
  for (const auto& l : p.labels)
    for (const auto& w : l.orbit) ideal.insert(w);
  for (const auto& l : p.labels)
    for (Elem a = 0; a < A.order(); ++a) {
      const auto w = p.action.act(a, l.rep);
      if (d.height(w) != d.height(l.rep)) fail("height not A-invariant at " + weight_str(l.rep));
    }
  for (const auto& w : ideal)
    for (const auto& mu : d.dominant_weights_below(w))
      if (!ideal.count(mu)) fail("label set is not an ideal: " + weight_str(mu) + " < " + weight_str(w) + " missing");
  return r;
}

DeltaData delta_dimension_and_character(const ComponentAction& action, const SimpleLabel& label) {
  const auto& d = action.datum();
  DeltaData out;
  for (const auto& w : label.orbit) {
    out.dim += static_cast<long long>(label.dim_e) * d.weyl_dimension(w);
    for (const auto& [mu, m] : d.weight_multiplicities(w)) out.character[mu] += static_cast<long long>(label.dim_e) * m;
  }
  return out;
}

std::string character_csv(const FormalCharacter& ch, int rank) {
  std::ostringstream s;
  for (int i = 0; i < rank; ++i) s << "w" << (i + 1) << ",";
  s << "multiplicity\n";
  for (const auto& [w, m] : ch) {
    for (auto x : w) s << x << ",";
    s << m << "\n";
  }
  return s.str();
}

std::string status_str(AxiomCheck::Status s) {
  switch (s) {
    case AxiomCheck::Status::pass: return "pass";
    case AxiomCheck::Status::fail: return "fail";
    default: return "not_computed";
  }
}

bool AxiomReport::ok() const {
  return std::none_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == AxiomCheck::Status::fail; });
}

nlohmann::json AxiomReport::to_json() const {
  nlohmann::json j = {{"ok", ok()}, {"checks", nlohmann::json::array()}};
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"status", status_str(c.status)}, {"detail", c.detail}});
  return j;
}

AxiomReport hw_axiom_report(const LabelPoset& p, const FiniteModel* oracle, std::uint64_t seed) {
  using S = AxiomCheck::Status;
  AxiomReport r;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok ? S::pass : S::fail, std::move(detail)});
  };
  const auto& d = p.action.datum();
  const auto& A = p.action.group();
  const auto n = p.labels.size();

  // (1) finite downsets: everything dominated by a label weight is in the ideal
  std::set<Weight> ideal;
  for (const auto& l : p.labels) ideal.insert(l.orbit.begin(), l.orbit.end());
  bool closed = true;
  std::size_t largest = 0;
  std::string detail;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t below = 0;
    for (std::size_t i = 0; i < n; ++i) below += p.less[i][j];
    largest = std::max(largest, below);
    for (const auto& w : p.labels[j].orbit)
      for (const auto& mu : d.dominant_weights_below(w))
        if (!ideal.count(mu)) {
          closed = false;
          detail = weight_str(mu) + " below " + weight_str(w) + " is outside the ideal";
        }
  }
  add("axiom 1: finite downsets", closed, closed ? "largest strict downset has " + std::to_string(largest) + " labels" : detail);

  // (4) at character level: Delta(lambda,E) has highest weights the orbit, each dim E times,
  // and every other weight lies strictly below some a.lambda
  bool char_ok = true, additive = true;
  for (const auto& l : p.labels) {
    const auto dd = delta_dimension_and_character(p.action, l);
    long long total = 0;
    for (const auto& [mu, m] : dd.character) {
      total += m;
      const bool top = std::find(l.orbit.begin(), l.orbit.end(), mu) != l.orbit.end();
      if (top) {
        if (m != static_cast<long long>(l.dim_e)) char_ok = false;
        continue;
      }
      bool below = false;
      for (const auto& w : l.orbit) below = below || d.dominance_less(mu, w);
      if (m <= 0 || !below) {
        char_ok = false;
        detail = "weight " + weight_str(mu) + " of Delta" + l.str() + " is not below its orbit";
      }
    }
    if (total != dd.dim) char_ok = false;
    const long long w0 = d.weyl_dimension(l.rep);
    for (const auto& w : l.orbit)
      if (d.weyl_dimension(w) != w0) additive = false;
    if (dd.dim != static_cast<long long>(l.orbit.size() * l.dim_e) * w0) additive = false;
  }
  add("axiom 4: character of Delta lies below its highest weights", char_ok, char_ok ? "" : detail);
  add("Weyl dimension is constant on orbits", additive, "");

  // each orbit accounts for Ind of L(lambda): sum of (dim E)^2 = |A^lambda|
  std::map<Weight, std::size_t> squares;
  std::map<Weight, std::size_t> stab;
  for (const auto& l : p.labels) {
    squares[l.rep] += l.dim_e * l.dim_e;
    stab[l.rep] = l.stabilizer.size();
  }
  bool numerology = true;
  for (const auto& l : p.labels)
    if (l.orbit.size() * l.stabilizer.size() != A.order()) numerology = false;
  for (const auto& [w, s] : squares)
    if (s != stab[w]) {
      numerology = false;
      detail = "orbit of " + weight_str(w) + ": sum of squares " + std::to_string(s) + " vs " + std::to_string(stab[w]);
    }
  add("sum of (dim E)^2 equals the stabilizer order", numerology, numerology ? "" : detail);

  if (oracle) {
    const auto rep = verify_classification(*oracle, seed);
    bool hom_ok = rep.ok();
    for (std::size_t i = 0; i < rep.labels.size(); ++i)
      for (std::size_t j = 0; j < rep.labels.size(); ++j) {
        const auto h = hom_space(oracle->group(), rep.labels[i].module, rep.labels[j].module).size();
        if (h != (i == j ? 1u : 0u)) {
          hom_ok = false;
          detail = "dim Hom(L" + std::to_string(i) + ", L" + std::to_string(j) + ") = " + std::to_string(h);
        }
      }
    add("axiom 2 (semisimple model " + oracle->name() + "): dim Hom(L, L') = delta", hom_ok,
        hom_ok ? std::to_string(rep.labels.size()) + " labels" : detail);
  } else {
    r.checks.push_back({"axiom 2: End(Delta) = k", S::not_computed, "needs a finite model to compute Hom spaces"});
  }
  r.checks.push_back({"axiom 3: Ext^1 vanishing in truncations", S::not_computed,
                      "not computable for algebraic groups at this scale"});
  r.checks.push_back({"axiom 5: Ext^2(Delta, nabla) = 0", S::not_computed,
                      "not computable for algebraic groups at this scale"});
  return r;
}

}  // namespace dcrep

#include "dcrep/finite_model.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

namespace dcrep {

namespace {

std::vector<Matrix<GF>> on_generators(const FiniteGroup& g, const Rep& v) {
  std::vector<Matrix<GF>> out;
  for (auto x : g.generators()) out.push_back(v.at(x));
  return out;
}

Matrix<GF> normalize_first_entry(Matrix<GF> x) {
  for (const auto& e : x.data())
    if (!e.is_zero()) {
      x *= e.inv();
      return x;
    }
  return x;
}

std::string dims_str(const std::vector<std::size_t>& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "}";
}

}  // namespace

bool is_representation(const FiniteGroup& g, const Rep& v) {
  if (v.size() != g.order() || v.empty()) return false;
  const std::size_t d = rep_dim(v);
  if (!(v[0] == Matrix<GF>::identity(d, v[0].zero_element().one()))) return false;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (!(v[a] * v[b] == v[g.mul(a, b)])) return false;
  return true;
}

bool is_automorphism(const FiniteGroup& g, const std::vector<Elem>& phi) {
  if (phi.size() != g.order()) return false;
  std::vector<bool> hit(g.order(), false);
  for (auto x : phi) {
    if (x >= g.order() || hit[x]) return false;
    hit[x] = true;
  }
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
  return true;
}

Rep twist_rep(const FiniteGroup& g, const Rep& v, const std::vector<Elem>& phi) {
  if (!is_automorphism(g, phi)) throw InvalidInput("twist: map is not an automorphism");
  if (v.size() != g.order()) throw InvalidInput("twist: representation does not match the group");
  Rep out(v.size(), v.front());
  for (Elem h = 0; h < g.order(); ++h) out[phi[h]] = v[h];
  return out;
}

std::vector<Matrix<GF>> hom_space(const FiniteGroup& g, const Rep& v, const Rep& w) {
  if (v.size() != g.order() || w.size() != g.order()) throw InvalidInput("hom: representation does not match the group");
  return intertwiners(on_generators(g, v), on_generators(g, w), rep_dim(v), rep_dim(w), v.front().zero_element());
}

bool is_irreducible(const FiniteGroup& g, const Rep& v) { return hom_space(g, v, v).size() == 1; }

Rep restrict_rep(const Subgroup& h, const Rep& v) {
  Rep out;
  for (auto x : h.parent) out.push_back(v.at(x));
  return out;
}

Rep induce_from_subgroup(const FiniteGroup& g, const Subgroup& h, const Rep& w) {
  if (w.size() != h.parent.size()) throw InvalidInput("induce: representation does not match the subgroup");
  const auto r = left_transversal(g, h.parent);
  const std::size_t d = rep_dim(w), n = r.size();
  const GF zero = w.front().zero_element();
  Rep out;
  for (Elem x = 0; x < g.order(); ++x) {
    Matrix<GF> m(n * d, n * d, zero);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Elem y = g.mul(g.mul(g.inv(r[i]), x), r[j]);
        if (!h.contains(y)) continue;
        const auto& b = w[h.to_local(y)];
        for (std::size_t p = 0; p < d; ++p)
          for (std::size_t q = 0; q < d; ++q) m(i * d + p, j * d + q) = b(p, q);
      }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<SimpleAlgebraModule<GF>> enumerate_irr(const FiniteGroup& g, const GF& one, std::uint64_t seed) {
  return simple_modules(TwistedGroupAlgebra<GF>(FactorSet<GF>::trivial(g, one)), seed);
}

FiniteModel::FiniteModel(std::string name, FiniteGroup g, std::vector<Elem> normal, std::vector<Elem> section,
                         FieldSpec field)
    : name_(std::move(name)), g_(std::move(g)), section_(std::move(section)), field_(field) {
  if (field_.kind != FieldSpec::Kind::finite) throw InvalidInput("finite model needs a finite field");
  if (g_.order() % field_.p == 0)
    throw Unsupported("modular case unsupported: characteristic " + std::to_string(field_.p) + " divides |G| = " +
                      std::to_string(g_.order()));
  std::sort(normal.begin(), normal.end());
  if (!g_.is_normal(normal)) throw InvalidInput("finite model: subgroup is not normal");
  g0_ = Subgroup::of(g_, normal);
  if (section_.empty() || section_[0] != 0) throw InvalidInput("finite model: section must send 1 to 1");
  a_ = Quotient::of(g_, normal, section_);
}

FiniteModel FiniteModel::from_json(const nlohmann::json& j) {
  try {
    FiniteModel m(j.value("name", std::string("model")), FiniteGroup::from_json(j.at("group")),
                  j.at("normal_subgroup").get<std::vector<Elem>>(), j.at("section").get<std::vector<Elem>>(),
                  FieldSpec::from_json(j.at("field")));
    if (j.contains("expected_irr_dims")) m.expected_dims_ = j.at("expected_irr_dims").get<std::vector<std::size_t>>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("finite model: ") + e.what());
  }
}

FiniteModel FiniteModel::load(const std::string& name_or_path) {
  std::filesystem::path p(name_or_path);
  if (!std::filesystem::exists(p)) p = std::filesystem::path(DCREP_DATA_DIR) / "fixtures" / (name_or_path + ".json");
  std::ifstream in(p);
  if (!in) throw InvalidInput("cannot open finite model '" + name_or_path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("finite model: ") + e.what());
  }
  return from_json(j);
}

Elem FiniteModel::gamma(Elem a, Elem b) const {
  const auto& A = component_group();
  return g_.mul(g_.inv(iota(A.mul(a, b))), g_.mul(iota(a), iota(b)));
}

std::optional<std::string> FiniteModel::check_gamma_identity() const {
  const auto& A = component_group();
  const std::size_t n = A.order();
  for (Elem a = 0; a < n; ++a) {
    if (gamma(0, a) != 0 || gamma(a, 0) != 0) return "gamma is not normalized at " + std::to_string(a);
    for (Elem b = 0; b < n; ++b) {
      if (!g0_.contains(gamma(a, b))) return "gamma(" + std::to_string(a) + "," + std::to_string(b) + ") is not in G0";
      for (Elem c = 0; c < n; ++c) {
        const Elem ic = iota(c);
        const Elem lhs = g_.mul(gamma(A.mul(a, b), c), g_.mul(g_.mul(g_.inv(ic), gamma(a, b)), ic));
        const Elem rhs = g_.mul(gamma(a, A.mul(b, c)), gamma(b, c));
        if (lhs != rhs)
          return "gamma product identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
      }
    }
  }
  return std::nullopt;
}

std::vector<Elem> FiniteModel::preimage(const std::vector<Elem>& b) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < g_.order(); ++x)
    if (std::find(b.begin(), b.end(), coset(x)) != b.end()) out.push_back(x);
  return out;
}

Rep FiniteModel::twist_by(const Rep& l, Elem x) const {
  if (l.size() != g0_.parent.size()) throw InvalidInput("twist: not a representation of G0");
  Rep out;
  for (auto g : g0_.parent) out.push_back(l[local0(g_.mul(g_.mul(g_.inv(x), g), x))]);
  return out;
}

Rep induce_over(const FiniteModel& m, const Rep& v, const std::vector<Elem>& b) {
  const auto& G = m.group();
  const auto& A = m.component_group();
  if (v.size() != m.identity_component().parent.size()) throw InvalidInput("induce: not a representation of G0");
  const auto sub = Subgroup::of(A, b);
  const auto pre = Subgroup::of(G, m.preimage(sub.parent));
  const std::size_t d = rep_dim(v), n = sub.parent.size();
  const GF zero = v.front().zero_element();
  Rep out;
  for (auto x : pre.parent) {
    const Elem a = m.coset(x);
    const Elem g = G.mul(G.inv(m.iota(a)), x);
    Matrix<GF> mat(n * d, n * d, zero);
    for (std::size_t j = 0; j < n; ++j) {
      const Elem f = sub.parent[j];
      const Elem i = sub.to_local(A.mul(a, f));
      const Elem inner = G.mul(m.gamma(a, f), G.mul(G.mul(G.inv(m.iota(f)), g), m.iota(f)));
      const auto& blk = v[m.local0(inner)];
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) mat(i * d + p, j * d + q) = blk(p, q);
    }
    out.push_back(std::move(mat));
  }
  return out;
}

Rep induce(const FiniteModel& m, const Rep& v) {
  std::vector<Elem> all(m.component_group().order());
  for (Elem a = 0; a < all.size(); ++a) all[a] = a;
  return induce_over(m, v, all);
}

bool function_space_model_agrees(const FiniteModel& m, const Rep& v, const Rep& induced) {
  const auto& G = m.group();
  const auto& A = m.component_group();
  const std::size_t d = rep_dim(v), n = G.order();
  const GF zero = v.front().zero_element();
  // a function is a vector of length |G| d: block y holds F(y)
  auto image = [&](Elem f, const Vec<GF>& vec) {
    Vec<GF> F(n * d, zero);
    for (Elem y = 0; y < n; ++y) {
      if (m.coset(y) != f) continue;
      const Elem h = G.mul(G.inv(m.iota(f)), y);  // y = iota(f) h
      const auto val = v[m.local0(G.inv(h))].apply(vec);
      for (std::size_t p = 0; p < d; ++p) F[y * d + p] = val[p];
    }
    return F;
  };
  auto act = [&](Elem x, const Vec<GF>& F) {
    Vec<GF> out(n * d, zero);
    for (Elem y = 0; y < n; ++y) {
      const Elem src = G.mul(G.inv(x), y);
      for (std::size_t p = 0; p < d; ++p) out[y * d + p] = F[src * d + p];
    }
    return out;
  };
  const auto& g0 = m.identity_component();
  for (Elem f = 0; f < A.order(); ++f)
    for (std::size_t j = 0; j < d; ++j) {
      Vec<GF> e(d, zero);
      e[j] = zero.one();
      const auto F = image(f, e);
      // F satisfies F(gh) = V(h^-1) F(g)
      for (Elem y = 0; y < n; ++y)
        for (auto h : g0.parent) {
          const Vec<GF> fy(F.begin() + y * d, F.begin() + (y + 1) * d);
          const Vec<GF> fyh(F.begin() + G.mul(y, h) * d, F.begin() + (G.mul(y, h) + 1) * d);
          if (fyh != v[m.local0(G.inv(h))].apply(fy)) return false;
        }
      for (Elem x = 0; x < n; ++x) {
        // x . (f (x) e_j) in the tensor model, pushed through the map
        Vec<GF> basis(A.order() * d, zero);
        basis[f * d + j] = zero.one();
        const auto col = induced[x].apply(basis);
        Vec<GF> mapped(n * d, zero);
        for (Elem f2 = 0; f2 < A.order(); ++f2) {
          const Vec<GF> part(col.begin() + f2 * d, col.begin() + (f2 + 1) * d);
          const auto img = image(f2, part);
          for (std::size_t k = 0; k < mapped.size(); ++k) mapped[k] += img[k];
        }
        if (mapped != act(x, F)) return false;
      }
    }
  return true;
}

std::optional<Matrix<GF>> compute_theta(const FiniteModel& m, const Rep& l, Elem a) {
  m.component_group().check_element(a);
  const std::size_t d = rep_dim(l);
  const GF one = l.front().zero_element().one();
  if (a == 0) return Matrix<GF>::identity(d, one);
  const auto& g0 = m.identity_component().group;
  const auto sols = hom_space(g0, l, m.twist_by(l, m.iota(a)));
  if (sols.empty()) return std::nullopt;
  if (sols.size() > 1) throw InvalidInput("intertwiner space has dimension > 1: L is not irreducible");
  return normalize_first_entry(sols.front());
}

std::vector<Matrix<GF>> theta_family(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b) {
  const auto sub = Subgroup::of(m.component_group(), b);
  std::vector<Matrix<GF>> out;
  for (auto a : sub.parent) {
    auto t = compute_theta(m, l, a);
    if (!t) throw InvalidInput("component " + std::to_string(a) + " does not fix L");
    out.push_back(std::move(*t));
  }
  return out;
}

FactorSet<GF> extract_alpha(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                            const std::vector<Matrix<GF>>& theta) {
  const auto& A = m.component_group();
  const auto sub = Subgroup::of(A, b);
  const std::size_t n = sub.parent.size();
  if (theta.size() != n) throw InvalidInput("theta family does not match the stabilizer");
  const GF one = l.front().zero_element().one();
  std::vector<std::vector<GF>> v(n, std::vector<GF>(n, one));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem a = sub.parent[i], c = sub.parent[j];
      const auto lhs = l[m.local0(m.gamma(a, c))] * theta[j] * theta[i];
      const auto& t = theta[sub.to_local(A.mul(a, c))];
      // find the scalar s with lhs = s t
      std::optional<GF> s;
      for (std::size_t k = 0; k < t.data().size(); ++k)
        if (!t.data()[k].is_zero()) {
          s = lhs.data()[k] / t.data()[k];
          break;
        }
      if (!s || !(lhs == t * *s)) throw CheckFailure("composite intertwiner is not a multiple of theta_ab");
      v[i][j] = *s;
    }
  return FactorSet<GF>(sub.group, std::move(v));
}

Rep build_E_tensor_L(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                     const std::vector<Matrix<GF>>& theta, const std::vector<Matrix<GF>>& e) {
  const auto& G = m.group();
  const auto sub = Subgroup::of(m.component_group(), b);
  if (e.size() != sub.parent.size() || theta.size() != sub.parent.size())
    throw InvalidInput("module does not match the stabilizer algebra");
  std::vector<Matrix<GF>> theta_inv;
  for (const auto& t : theta) theta_inv.push_back(inverse(t));
  Rep out;
  for (auto x : m.preimage(sub.parent)) {
    const Elem a = m.coset(x);
    const Elem g = G.mul(G.inv(m.iota(a)), x);
    const Elem la = sub.to_local(a);
    out.push_back(kronecker(e[la], theta_inv[la] * l[m.local0(g)]));
  }
  return out;
}

Rep induce_label(const FiniteModel& m, const std::vector<Elem>& b, const Rep& el) {
  const auto pre = Subgroup::of(m.group(), m.preimage(b));
  return induce_from_subgroup(m.group(), pre, el);
}

EndomorphismReport endomorphism_algebra(const FiniteModel& m, const Rep& l, const std::vector<Elem>& b,
                                        const std::vector<Matrix<GF>>& theta, const FactorSet<GF>& alpha) {
  const auto& G = m.group();
  const auto& A = m.component_group();
  const auto sub = Subgroup::of(A, b);
  const auto pre = Subgroup::of(G, m.preimage(sub.parent));
  const auto ind = induce_over(m, l, sub.parent);
  const std::size_t n = sub.parent.size(), d = rep_dim(l);
  const GF zero = l.front().zero_element();
  EndomorphismReport r;
  r.expected = n;
  const auto end = hom_space(pre.group, ind, ind);
  r.dim = end.size();

  // R_a: f (x) v -> fa (x) L(gamma(f,a)) theta_a v
  std::vector<Matrix<GF>> right;
  for (std::size_t ia = 0; ia < n; ++ia) {
    const Elem a = sub.parent[ia];
    Matrix<GF> mat(n * d, n * d, zero);
    for (std::size_t jf = 0; jf < n; ++jf) {
      const Elem f = sub.parent[jf];
      const Elem i = sub.to_local(A.mul(f, a));
      const auto blk = l[m.local0(m.gamma(f, a))] * theta[ia];
      for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) mat(i * d + p, jf * d + q) = blk(p, q);
    }
    right.push_back(std::move(mat));
  }
  r.right_action_commutes = true;
  for (const auto& ra : right)
    for (const auto& x : ind)
      if (!(ra * x == x * ra)) r.right_action_commutes = false;
  std::vector<Vec<GF>> flat;
  for (const auto& ra : right) flat.push_back(flatten(ra));
  r.spans = rank(Matrix<GF>::from_columns(flat, n * n * d * d, zero)) == n && r.dim == n;
  r.anti_homomorphism = true;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (!(right[j] * right[i] == right[sub.group.mul(i, j)] * alpha(i, j))) r.anti_homomorphism = false;
  return r;
}

bool ClassificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

nlohmann::json ClassificationReport::to_json() const {
  nlohmann::json j;
  j["model"] = model;
  j["irr_g0_dims"] = irr_g0_dims;
  j["irr_dims"] = irr_dims;
  j["labels"] = nlohmann::json::array();
  for (const auto& l : labels)
    j["labels"].push_back({{"orbit_rep", l.orbit_rep},
                           {"orbit", l.orbit},
                           {"stabilizer_order", l.stabilizer_order},
                           {"dim_E", l.dim_e},
                           {"dim_L", l.dim_l},
                           {"dim", l.dim},
                           {"matched_irr", l.matched_irr}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["ok"] = ok();
  return j;
}

ClassificationReport verify_classification(const FiniteModel& m, std::uint64_t seed) {
  ClassificationReport rep;
  rep.model = m.name();
  auto check = [&](std::string name, bool ok, std::string detail = "") {
    rep.checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  };
  const auto& G = m.group();
  const auto& A = m.component_group();
  const auto& g0 = m.identity_component();
  const GF one = m.one();

  const auto gam = m.check_gamma_identity();
  check("gamma product identity", !gam, gam.value_or(""));

  const auto irr0 = enumerate_irr(g0.group, one, seed);
  const auto irr = enumerate_irr(G, one, seed);
  for (const auto& s : irr0) rep.irr_g0_dims.push_back(s.dim);
  for (const auto& s : irr) rep.irr_dims.push_back(s.dim);
  if (!m.expected_irr_dims().empty())
    check("Irr(G) dimensions match fixture", rep.irr_dims == m.expected_irr_dims(),
          dims_str(rep.irr_dims) + " vs " + dims_str(m.expected_irr_dims()));

  // A acts on Irr(G0) by twisting with iota(a)
  auto find_irr0 = [&](const Rep& v) -> std::optional<std::size_t> {
    const auto tv = trace_vector(v);
    for (std::size_t i = 0; i < irr0.size(); ++i)
      if (irr0[i].trace_vector == tv) return i;
    return std::nullopt;
  };
  std::vector<std::vector<std::size_t>> act(A.order(), std::vector<std::size_t>(irr0.size()));
  bool act_ok = true;
  for (Elem a = 0; a < A.order(); ++a)
    for (std::size_t i = 0; i < irr0.size(); ++i) {
      const auto j = find_irr0(m.twist_by(irr0[i].action, m.iota(a)));
      if (!j) {
        act_ok = false;
        continue;
      }
      act[a][i] = *j;
    }
  for (Elem a = 0; a < A.order() && act_ok; ++a)
    for (Elem b = 0; b < A.order(); ++b)
      for (std::size_t i = 0; i < irr0.size(); ++i)
        if (act[a][act[b][i]] != act[A.mul(a, b)][i]) act_ok = false;
  if (!check("A acts on Irr(G0) by twisting", act_ok)) return rep;

  // Ind of every irreducible of G0 is semisimple
  bool semis = true;
  std::string semis_detail;
  for (std::size_t i = 0; i < irr0.size(); ++i) {
    const auto ind = induce(m, irr0[i].action);
    std::size_t total = 0;
    for (const auto& s : irr) total += hom_space(G, s.action, ind).size() * s.dim;
    if (total != rep_dim(ind)) {
      semis = false;
      semis_detail = "Ind of simple " + std::to_string(i) + " is not a sum of simples";
    }
    if (!is_representation(G, ind) || !function_space_model_agrees(m, irr0[i].action, ind)) {
      semis = false;
      semis_detail = "tensor model of Ind " + std::to_string(i) + " disagrees with the function-space model";
    }
  }
  check("Ind from G0 is semisimple and matches the function-space model", semis, semis_detail);

  std::vector<bool> used(irr.size(), false);
  std::vector<bool> done(irr0.size(), false);
  bool all_match = true, theta_ok = true, alpha_ok = true, el_ok = true, res_ok = true, end_ok = true,
       orbit_ok = true;
  std::string detail;
  for (std::size_t i = 0; i < irr0.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> orbit;
    std::vector<Elem> stab;
    for (Elem a = 0; a < A.order(); ++a) {
      const auto j = act[a][i];
      if (!done[j]) orbit.push_back(j);
      done[j] = true;
      if (j == i) stab.push_back(a);
    }
    std::sort(orbit.begin(), orbit.end());
    const auto& L = irr0[i].action;
    // theta exists exactly on the stabilizer
    for (Elem a = 0; a < A.order(); ++a)
      if (compute_theta(m, L, a).has_value() != (act[a][i] == i)) theta_ok = false;
    const auto theta = theta_family(m, L, stab);
    const auto alpha = extract_alpha(m, L, stab, theta);
    if (validate_factor_set(alpha)) alpha_ok = false;
    const auto endo = endomorphism_algebra(m, L, stab, theta, alpha);
    if (!endo.ok()) end_ok = false;
    const TwistedGroupAlgebra<GF> alg(alpha);
    const auto simples = simple_modules(alg, seed);
    for (const auto& e : simples) {
      const auto el = build_E_tensor_L(m, L, stab, theta, e.action);
      const auto pre = Subgroup::of(G, m.preimage(stab));
      if (!is_representation(pre.group, el)) {
        el_ok = false;
        detail = "E (x) L is not a representation of G^lambda";
        continue;
      }
      const auto lab = induce_label(m, stab, el);
      LabelRow row{i, orbit, stab.size(), e.dim, rep_dim(L), rep_dim(lab), 0, lab};
      if (row.dim != orbit.size() * e.dim * row.dim_l || !is_representation(G, lab) || !is_irreducible(G, lab)) {
        el_ok = false;
        detail = "L(lambda,E) is not an irreducible representation of the expected dimension";
      }
      // restriction to G0 contains exactly the orbit, each dim E times
      const auto res = restrict_rep(g0, lab);
      for (std::size_t j = 0; j < irr0.size(); ++j) {
        const auto h = hom_space(g0.group, irr0[j].action, res).size();
        const bool in_orbit = std::find(orbit.begin(), orbit.end(), j) != orbit.end();
        if (h != (in_orbit ? e.dim : 0)) res_ok = false;
      }
      const auto tv = trace_vector(lab);
      bool found = false;
      for (std::size_t k = 0; k < irr.size(); ++k)
        if (irr[k].trace_vector == tv) {
          found = true;
          if (used[k]) all_match = false;
          used[k] = true;
          row.matched_irr = k;
          if (hom_space(G, irr[k].action, lab).size() != 1) all_match = false;
        }
      if (!found) all_match = false;
      rep.labels.push_back(std::move(row));

      // other orbit points give isomorphic modules: conjugate L, theta and E by a
      for (Elem a = 1; a < A.order(); ++a) {
        const Elem x = m.iota(a);
        const auto L2 = m.twist_by(L, x);
        std::vector<Elem> stab2;
        for (auto c : stab) stab2.push_back(A.conj(a, c));
        std::sort(stab2.begin(), stab2.end());
        const auto conj = conjugation_iso(A, stab, stab2, a, alpha);
        std::vector<Matrix<GF>> theta2(stab.size(), theta.front());
        const auto sub = Subgroup::of(A, stab);
        for (Elem lb = 0; lb < stab.size(); ++lb) {
          const Elem bb = sub.parent[lb];
          const Elem c = A.conj(a, bb);
          const Elem mm = G.mul(G.mul(G.inv(x), G.inv(m.iota(c))), G.mul(x, m.iota(bb)));
          theta2[conj.map[lb]] = L[m.local0(mm)] * theta[lb];
        }
        bool ok2 = true;
        for (std::size_t lc = 0; lc < stab2.size(); ++lc) {
          const auto t = compute_theta(m, L2, stab2[lc]);
          // the conjugated family intertwines L2 with its twist
          for (auto g : g0.group.generators()) {
            const Elem ag = g0.parent[g];
            const Elem tw = G.mul(G.mul(G.inv(m.iota(stab2[lc])), ag), m.iota(stab2[lc]));
            if (!(theta2[lc] * L2[g] == L2[m.local0(tw)] * theta2[lc])) ok2 = false;
          }
          if (!t) ok2 = false;
        }
        if (!ok2 || !(extract_alpha(m, L2, stab2, theta2) == conj.target_factor_set)) {
          orbit_ok = false;
          detail = "conjugated theta family does not reproduce the transported cocycle";
          continue;
        }
        const auto el2 = build_E_tensor_L(m, L2, stab2, theta2, conj.transport(e.action));
        const auto lab2 = induce_label(m, stab2, el2);
        if (trace_vector(lab2) != tv || hom_space(G, lab, lab2).size() != 1) {
          orbit_ok = false;
          detail = "label moved by " + std::to_string(a) + " is not isomorphic";
        }
      }
    }
  }
  check("theta exists exactly on the stabilizer", theta_ok);
  check("extracted alpha is a normalized 2-cocycle", alpha_ok);
  check("End(Ind L) is the opposite twisted algebra", end_ok);
  check("E (x) L and L(lambda,E) are irreducible representations", el_ok, el_ok ? "" : detail);
  check("restriction to G0 is the orbit", res_ok);
  check("A-conjugate labels give isomorphic modules", orbit_ok, orbit_ok ? "" : detail);
  const bool bij = all_match && std::all_of(used.begin(), used.end(), [](bool u) { return u; }) &&
                   rep.labels.size() == irr.size();
  check("labels match Irr(G) bijectively", bij,
        std::to_string(rep.labels.size()) + " labels, " + std::to_string(irr.size()) + " irreducibles");
  return rep;
}

}  // namespace dcrep

namespace dcrep {

RescalingReport check_theta_rescaling(const FiniteModel& m, std::size_t trials, std::uint64_t seed) {
  RescalingReport r;
  const auto& A = m.component_group();
  const auto& f = m.one().field();
  Rng rng(seed);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, f.q() - 1);
  for (const auto& s : enumerate_irr(m.identity_component().group, m.one(), seed)) {
    ++r.simples;
    std::vector<Elem> stab;
    for (Elem a = 0; a < A.order(); ++a)
      if (compute_theta(m, s.action, a)) stab.push_back(a);
    const auto theta = theta_family(m, s.action, stab);
    const auto alpha = extract_alpha(m, s.action, stab, theta);
    for (std::size_t t = 0; t < trials; ++t) {
      ++r.trials;
      std::vector<GF> scale(stab.size(), m.one());
      auto rescaled = theta;
      for (std::size_t i = 1; i < stab.size(); ++i) {
        scale[i] = GF(f, static_cast<GF::code_type>(nonzero(rng)));
        rescaled[i] *= scale[i];
      }
      const auto a2 = extract_alpha(m, s.action, stab, rescaled);
      if (const auto v = validate_factor_set(a2)) {
        r.ok = false;
        r.detail = "rescaled alpha fails: " + v->message();
      } else if (!(a2 == coboundary_rescale(alpha, scale))) {
        r.ok = false;
        r.detail = "rescaled alpha differs from the coboundary rescaling";
      }
    }
  }
  return r;
}

}  // namespace dcrep

#include "dcrep/model.hpp"

#include <filesystem>
#include <fstream>
#include <set>

namespace dcrep {

namespace {

nlohmann::json read_json(const std::filesystem::path& p, const std::string& what) {
  std::ifstream in(p);
  if (!in) throw InvalidInput("cannot open " + what + " '" + p.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

// dominant weights with <lambda, alpha_i-check> = c_i for c in a box
void enumerate_by_coroots(const RootDatum& d, long long bound, std::set<Weight>& out) {
  const int r = d.rank();
  const std::size_t s = d.simple_coroots().size();
  // solve lambda from its pairings with the simple coroots over Q
  Matrix<Rational> m(s, static_cast<std::size_t>(r), Rational(0));
  for (std::size_t i = 0; i < s; ++i)
    for (int j = 0; j < r; ++j) m(i, j) = Rational(d.simple_coroots()[i][j]);
  std::vector<long long> c(s, 0);
  while (true) {
    Vec<Rational> rhs;
    for (auto v : c) rhs.push_back(Rational(v));
    const auto sol = solve_linear(m, rhs);
    if (sol.particular) {
      Weight w;
      bool integral = true;
      for (const auto& x : *sol.particular) {
        if (!x.is_integer()) integral = false;
        w.push_back(static_cast<long long>(x.numerator()));
      }
      if (integral && d.height(w) <= bound) out.insert(w);
    }
    std::size_t i = 0;
    while (i < s && ++c[i] > bound) c[i++] = 0;
    if (i == s) break;
  }
}

void enumerate_box(const RootDatum& d, long long bound, std::optional<long long> max_height, std::set<Weight>& out) {
  const int r = d.rank();
  Weight w(static_cast<std::size_t>(r), -bound);
  while (true) {
    if (d.is_dominant(w) && (!max_height || d.height(w) <= *max_height)) out.insert(w);
    int i = 0;
    while (i < r && ++w[i] > bound) w[i++] = -bound;
    if (i == r) break;
  }
}

}  // namespace

IdealSpec IdealSpec::from_json(const nlohmann::json& j) {
  IdealSpec s;
  if (j.is_null()) return s;
  try {
    if (j.contains("max_height")) s.max_height = j.at("max_height").get<long long>();
    if (j.contains("max_abs_coord")) s.max_abs_coord = j.at("max_abs_coord").get<long long>();
    if (j.contains("weights")) s.weights = j.at("weights").get<std::vector<Weight>>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("ideal: ") + e.what());
  }
  if ((s.max_height && *s.max_height < 0) || (s.max_abs_coord && *s.max_abs_coord < 0))
    throw InvalidInput("ideal bounds must be nonnegative");
  return s;
}

nlohmann::json IdealSpec::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  if (max_height) j["max_height"] = *max_height;
  if (max_abs_coord) j["max_abs_coord"] = *max_abs_coord;
  j["weights"] = weights;
  return j;
}

std::vector<Weight> generate_ideal(const ComponentAction& action, const IdealSpec& spec) {
  const auto& d = action.datum();
  std::set<Weight> seeds;
  if (spec.max_abs_coord) {
    enumerate_box(d, *spec.max_abs_coord, spec.max_height, seeds);
  } else if (spec.max_height) {
    if (d.semisimple_rank() < d.rank())
      throw InvalidInput("ideal needs max_abs_coord when the root datum has a central torus");
    enumerate_by_coroots(d, *spec.max_height, seeds);
  }
  for (const auto& w : spec.weights) {
    d.check_weight(w);
    if (!d.is_dominant(w)) throw InvalidInput("ideal weight " + weight_str(w) + " is not dominant");
    seeds.insert(w);
  }
  std::set<Weight> out;
  for (const auto& w : seeds)
    for (const auto& below : d.dominant_weights_below(w))
      for (const auto& x : action.orbit(below)) out.insert(x);
  return {out.begin(), out.end()};
}

ModelFile ModelFile::from_json(const nlohmann::json& j) {
  ModelFile m;
  try {
    m.name = j.value("name", std::string("model"));
    const auto& rd = j.at("root_datum");
    m.datum = rd.is_string() ? root_datum_preset(rd.get<std::string>()) : RootDatum::from_json(rd);
    if (j.contains("component_action"))
      m.action = ComponentAction::from_json(m.datum, j.at("component_action"));
    else
      m.action = ComponentAction::trivial(m.datum);
    if (j.contains("field")) m.field = FieldSpec::from_json(j.at("field"));
    if (j.contains("aux_prime")) m.aux_prime = j.at("aux_prime").get<int>();
    m.ideal = IdealSpec::from_json(j.value("ideal", nlohmann::json()));
    m.finite_model = j.value("finite_model", std::string());
    for (const auto& c : j.value("cocycles", nlohmann::json::array())) {
      const Weight w = c.at("weight").get<Weight>();
      m.datum.check_weight(w);
      if (!m.datum.is_dominant(w)) throw InvalidInput("cocycle weight " + weight_str(w) + " is not dominant");
      if (m.action.canonical_rep(w) != w)
        throw InvalidInput("cocycle weight " + weight_str(w) + " is not the orbit representative " +
                           weight_str(m.action.canonical_rep(w)));
      const auto n = m.action.stabilizer(w).size();
      m.cocycles[w] = SymbolicFactorSet::from_json(c.at("factor_set"), n);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("model file: ") + e.what());
  }
  return m;
}

ModelFile ModelFile::load(const std::string& name_or_path) {
  std::filesystem::path p(name_or_path);
  if (!std::filesystem::exists(p)) p = std::filesystem::path(DCREP_DATA_DIR) / "models" / (name_or_path + ".json");
  return from_json(read_json(p, "model file"));
}

SymbolicFactorSet ModelFile::cocycle_for(const Weight& rep) const {
  const auto it = cocycles.find(rep);
  if (it != cocycles.end()) return it->second;
  return SymbolicFactorSet::trivial(action.stabilizer(rep).size());
}

std::vector<Weight> ModelFile::ideal_weights() const { return generate_ideal(action, ideal); }

std::vector<Weight> ModelFile::orbit_reps() const {
  std::set<Weight> reps;
  for (const auto& w : ideal_weights()) reps.insert(action.canonical_rep(w));
  return {reps.begin(), reps.end()};
}

}  // namespace dcrep

#include "dcrep/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "dcrep/finite_model.hpp"
#include "dcrep/groth.hpp"
#include "dcrep/hw_poset.hpp"
#include "dcrep/model.hpp"

namespace dcrep {

namespace fs = std::filesystem;

namespace {

constexpr const char* kVersion = "dcrep 0.1.0";

fs::path resolve_model(const std::string& name) {
  if (name.empty()) throw InvalidInput("--model is required");
  if (fs::exists(name)) return name;
  for (const char* dir : {"models", "fixtures"}) {
    const auto p = fs::path(DCREP_DATA_DIR) / dir / (name + ".json");
    if (fs::exists(p)) return p;
  }
  throw InvalidInput("unknown model '" + name + "' (not a file, shipped model or fixture)");
}

nlohmann::json read_json(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InvalidInput("cannot open '" + p.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("'" + p.string() + "': " + e.what());
  }
}

bool is_root_datum_model(const nlohmann::json& j) { return j.is_object() && j.contains("root_datum"); }

ModelFile load_model(const CommandOptions& opt, bool prime_sets_field) {
  const auto j = read_json(resolve_model(opt.model));
  if (!is_root_datum_model(j)) throw InvalidInput("'" + opt.model + "' is a finite-group fixture, not a root datum model");
  auto m = ModelFile::from_json(j);
  if (opt.field) m.field = FieldSpec::parse(*opt.field);
  else if (opt.prime && prime_sets_field) m.field = FieldSpec::finite(*opt.prime);
  if (opt.aux_prime) m.aux_prime = *opt.aux_prime;
  if (opt.ideal_height) m.ideal.max_height = *opt.ideal_height;
  if (opt.ideal_coord) m.ideal.max_abs_coord = *opt.ideal_coord;
  return m;
}

FiniteModel load_fixture(const nlohmann::json& j0, const CommandOptions& opt) {
  auto j = j0;
  if (opt.field) j["field"] = *opt.field;
  else if (opt.prime) j["field"] = "GF(" + std::to_string(*opt.prime) + ")";
  try {
    return FiniteModel::from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("fixture: ") + e.what());
  }
}

nlohmann::json metadata(const CommandOptions& opt, const FieldSpec& field) {
  return {{"version", kVersion}, {"seed", opt.seed}, {"field", field.to_json()}};
}

nlohmann::json classification_rows(const ClassificationReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& l : r.labels)
    rows.push_back({{"orbit", l.orbit},
                    {"stabilizer_order", l.stabilizer_order},
                    {"dim_e", l.dim_e},
                    {"dim_l0", l.dim_l},
                    {"dim", l.dim},
                    {"matched_irr", l.matched_irr}});
  return rows;
}

nlohmann::json checks_json(const ClassificationReport& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : r.checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return out;
}

nlohmann::json label_rows(const ComponentAction& action, const std::vector<SimpleLabel>& labels) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& l : labels) {
    auto row = l.to_json();
    row["dim_delta"] = delta_dimension_and_character(action, l).dim;
    row["height"] = action.datum().height(l.rep);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool unit_det(const Rational& d) { return d == Rational(1) || d == Rational(-1); }

int choose_aux_prime(const ModelFile& m, int p) {
  if (m.aux_prime) return *m.aux_prime;
  long long e = 1;
  for (const auto& w : m.orbit_reps())
    e = std::lcm(e, lifting_exponent(Subgroup::of(m.action.group(), m.action.stabilizer(w)).group, m.cocycle_for(w)));
  long long ell = std::max(p, 2) + 1;
  while (!is_prime(ell) || (ell - 1) % e != 0 || ell == p) ++ell;
  return static_cast<int>(ell);
}

int decomposition_prime(const ModelFile& m, const CommandOptions& opt) {
  if (opt.prime) return *opt.prime;
  if (m.field.kind == FieldSpec::Kind::finite) return m.field.p;
  throw InvalidInput("decompose needs --prime or a finite field in the model");
}

// next prime after ell that is 1 mod every lifting exponent used by the matchings
int next_aux_prime(const DecompositionReport& r, int ell, int p) {
  long long e = 1;
  for (const auto& mt : r.matchings) e = std::lcm(e, mt.e);
  long long x = ell + 1;
  while (!is_prime(x) || (x - 1) % e != 0 || x == p) ++x;
  return static_cast<int>(x);
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Suite {
  std::string name;
  nlohmann::json cases = nlohmann::json::array();
  void add(const std::string& name, const std::string& status, const std::string& detail = "") {
    cases.push_back({{"name", name}, {"status", status}, {"detail", detail}});
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    add(name, ok ? "pass" : "fail", detail);
  }
  nlohmann::json to_json() const {
    std::size_t failures = 0, skipped = 0;
    for (const auto& c : cases) {
      failures += c["status"] == "fail";
      skipped += c["status"] == "skipped";
    }
    return {{"name", name}, {"tests", cases.size()}, {"failures", failures}, {"skipped", skipped}, {"testcases", cases}};
  }
};

std::vector<std::string> shipped(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(fs::path(DCREP_DATA_DIR) / dir))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

void run_clifford(Suite& s, const std::string& name, const nlohmann::json& j, const CommandOptions& opt) {
  try {
    const auto m = load_fixture(j, opt);
    const auto r = verify_classification(m, opt.seed);
    for (const auto& c : r.checks) s.check(name + ": " + c.name, c.passed, c.detail);
    const auto resc = check_theta_rescaling(m, 5, opt.seed);
    s.check(name + ": theta rescaling changes alpha by a coboundary", resc.ok, resc.detail);
  } catch (const Error& e) {
    s.check(name + ": load and classify", false, e.what());
  }
}

void run_hw(Suite& s, const std::string& name, const CommandOptions& opt) {
  try {
    CommandOptions o = opt;
    o.model = name;
    const auto m = load_model(o, true);
    const auto p = LabelPoset::build(m.action, classify_labels(m, opt.seed));
    const auto order = check_partial_order(p);
    s.check(name + ": partial order", order.ok, order.violations.empty() ? "" : order.violations.front());
    std::optional<FiniteModel> oracle;
    if (!m.finite_model.empty()) oracle = FiniteModel::load(m.finite_model);
    const auto ax = hw_axiom_report(p, oracle ? &*oracle : nullptr, opt.seed);
    for (const auto& c : ax.checks)
      s.add(name + ": " + c.name, c.status == AxiomCheck::Status::pass   ? "pass"
                                  : c.status == AxiomCheck::Status::fail ? "fail"
                                                                         : "skipped",
            c.detail);
  } catch (const Error& e) {
    s.check(name + ": load and classify", false, e.what());
  }
}

void run_groth(Suite& s, const std::string& name, const CommandOptions& opt) {
  try {
    CommandOptions o = opt;
    o.model = name;
    auto m = load_model(o, false);
    const int p = decomposition_prime(m, o);
    const int ell = choose_aux_prime(m, p);
    const TitsOptions t{p, ell, opt.lift_order, opt.seed};
    const auto r = decomposition_map(m, t);
    s.check(name + ": d_G is a permutation matrix", r.is_permutation);
    s.check(name + ": det d_G = +-1", unit_det(r.determinant), "det = " + r.determinant.str());
    s.check(name + ": matching preserves dimensions", r.dims_preserved);
    const int ell2 = next_aux_prime(r, ell, p);
    const auto r2 = decomposition_map(m, {p, ell2, opt.lift_order, opt.seed});
    bool same = r2.matrix == r.matrix;
    for (std::size_t i = 0; i < r.matchings.size() && same; ++i)
      for (std::size_t k = 0; k < r.matchings[i].char0.size(); ++k)
        same = same && r.matchings[i].char0[k].lifted == r2.matchings[i].char0[k].lifted;
    s.check(name + ": matching independent of the auxiliary prime",
            same, "ell = " + std::to_string(ell) + ", " + std::to_string(ell2));
    bool compat = true;
    for (std::size_t i = 0; i < r.orbit_reps.size(); ++i)
      compat = compat && matching_commutes_with_action(m.action, r.orbit_reps[i], m.cocycle_for(r.orbit_reps[i]),
                                                       r.matchings[i]);
    s.check(name + ": matching commutes with the action on pairs", compat);
    m.field = FieldSpec::finite(ell);
    const auto poset = LabelPoset::build(m.action, classify_labels(m, opt.seed));
    const auto u = verify_unitriangular_char0(poset, linear_extension(poset));
    s.check(name + ": char 0 change of basis is unitriangular", u.ok());
  } catch (const Error& e) {
    s.check(name + ": decomposition", false, e.what());
  }
}

}  // namespace

std::string CommandResult::document(const std::string& command) const {
  nlohmann::json j = {{"command", command}, {"exit_code", exit_code}, {"payload", payload}, {"metadata", metadata}};
  return j.dump(2) + "\n";
}

CommandResult cmd_classify(const CommandOptions& opt) {
  CommandResult r;
  const auto j = read_json(resolve_model(opt.model));
  if (!is_root_datum_model(j)) {
    const auto m = load_fixture(j, opt);
    const auto rep = verify_classification(m, opt.seed);
    r.payload = {{"model", m.name()},
                 {"kind", "finite_model"},
                 {"field", m.field().str()},
                 {"irr_g0_dims", rep.irr_g0_dims},
                 {"irr_dims", rep.irr_dims},
                 {"labels", classification_rows(rep)},
                 {"checks", checks_json(rep)}};
    r.metadata = metadata(opt, m.field());
    r.exit_code = rep.ok() ? 0 : 1;
    return r;
  }
  const auto m = load_model(opt, true);
  const auto labels = classify_labels(m, opt.seed);
  r.payload = {{"model", m.name},
               {"kind", "root_datum"},
               {"field", m.field.str()},
               {"ideal", m.ideal.to_json()},
               {"labels", label_rows(m.action, labels)}};
  r.metadata = metadata(opt, m.field);
  if (!m.finite_model.empty()) {
    const auto fm = FiniteModel::load(m.finite_model);
    const auto rep = verify_classification(fm, opt.seed);
    r.payload["finite_model"] = {{"model", fm.name()}, {"labels", classification_rows(rep)}, {"checks", checks_json(rep)}};
    if (!rep.ok()) r.exit_code = 1;
  }
  return r;
}

CommandResult cmd_poset(const CommandOptions& opt) {
  CommandResult r;
  const auto m = load_model(opt, true);
  const auto p = LabelPoset::build(m.action, classify_labels(m, opt.seed));
  const auto order = check_partial_order(p);
  std::optional<FiniteModel> oracle;
  if (!m.finite_model.empty()) oracle = FiniteModel::load(m.finite_model);
  const auto axioms = hw_axiom_report(p, oracle ? &*oracle : nullptr, opt.seed);

  nlohmann::json relation = nlohmann::json::array(), hasse = nlohmann::json::array();
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    for (std::size_t j = 0; j < p.labels.size(); ++j)
      if (p.less[i][j]) relation.push_back({i, j});
  for (const auto& [i, j] : p.hasse_edges()) hasse.push_back({i, j});
  const auto dot = p.to_dot();
  r.payload = {{"model", m.name},
               {"labels", label_rows(m.action, p.labels)},
               {"relation", relation},
               {"hasse", hasse},
               {"order_report", order.to_json()},
               {"axiom_report", axioms.to_json()},
               {"dot", dot}};
  r.metadata = metadata(opt, m.field);
  r.files["poset.dot"] = dot;

  std::ostringstream csv;
  csv << "label";
  for (int i = 0; i < m.datum.rank(); ++i) csv << ",w" << (i + 1);
  csv << ",multiplicity\n";
  for (const auto& l : p.labels)
    for (const auto& [w, mult] : delta_dimension_and_character(m.action, l).character) {
      csv << "\"" << weight_str(l.rep) << "|E" << l.e_index << "\"";
      for (auto x : w) csv << "," << x;
      csv << "," << mult << "\n";
    }
  r.files["characters.csv"] = csv.str();
  r.exit_code = order.ok && axioms.ok() ? 0 : 1;
  return r;
}

CommandResult cmd_decompose(const CommandOptions& opt) {
  CommandResult r;
  auto m = load_model(opt, false);
  const int p = decomposition_prime(m, opt);
  const int ell = opt.aux_prime ? *opt.aux_prime : choose_aux_prime(m, p);
  const auto rep = decomposition_map(m, {p, ell, opt.lift_order, opt.seed});
  m.field = FieldSpec::finite(ell);
  const auto poset = LabelPoset::build(m.action, classify_labels(m, opt.seed));
  const auto u = verify_unitriangular_char0(poset, linear_extension(poset));
  r.payload = {{"model", m.name},
               {"p", p},
               {"ell", ell},
               {"decomposition", rep.to_json()},
               {"unitriangular", {{"ok", u.ok()}, {"matrix", u.matrix}}}};
  r.metadata = metadata(opt, FieldSpec::finite(ell));
  r.metadata["charp_prime"] = p;
  r.files["decomposition.csv"] = rep.to_csv();
  r.exit_code = rep.is_permutation && rep.dims_preserved && unit_det(rep.determinant) && u.ok() ? 0 : 1;
  return r;
}

CommandResult cmd_verify(const CommandOptions& opt) {
  static const std::vector<std::string> suites{"clifford", "hw", "groth", "all"};
  if (std::find(suites.begin(), suites.end(), opt.suite) == suites.end())
    throw InvalidInput("unknown suite '" + opt.suite + "' (expected clifford, hw, groth or all)");
  const bool all = opt.suite == "all";
  std::vector<std::string> fixtures, models;
  if (!opt.model.empty()) {
    const auto j = read_json(resolve_model(opt.model));
    (is_root_datum_model(j) ? models : fixtures).push_back(opt.model);
  } else {
    fixtures = shipped("fixtures");
    models = shipped("models");
  }

  std::vector<Suite> out;
  if (all || opt.suite == "clifford") {
    Suite s{"clifford"};
    for (const auto& f : fixtures) run_clifford(s, fs::path(f).stem().string(), read_json(resolve_model(f)), opt);
    out.push_back(std::move(s));
  }
  if (all || opt.suite == "hw") {
    Suite s{"hw"};
    for (const auto& m : models) run_hw(s, m, opt);
    out.push_back(std::move(s));
  }
  if (all || opt.suite == "groth") {
    Suite s{"groth"};
    for (const auto& m : models) run_groth(s, m, opt);
    out.push_back(std::move(s));
  }

  CommandResult r;
  nlohmann::json js = nlohmann::json::array();
  std::size_t tests = 0, failures = 0, skipped = 0;
  for (const auto& s : out) {
    auto j = s.to_json();
    tests += j["tests"].get<std::size_t>();
    failures += j["failures"].get<std::size_t>();
    skipped += j["skipped"].get<std::size_t>();
    js.push_back(std::move(j));
  }
  r.payload = {{"suite", opt.suite},
               {"tests", tests},
               {"failures", failures},
               {"skipped", skipped},
               {"verdict", failures == 0 ? "pass" : "fail"},
               {"testsuites", js}};
  r.metadata = {{"version", kVersion}, {"seed", opt.seed}};
  r.files["junit.xml"] = junit_xml(r.payload);
  r.exit_code = failures == 0 ? 0 : 1;
  return r;
}

std::string junit_xml(const nlohmann::json& v) {
  std::ostringstream s;
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s << "<testsuites tests=\"" << v["tests"] << "\" failures=\"" << v["failures"] << "\" skipped=\"" << v["skipped"]
    << "\">\n";
  for (const auto& suite : v["testsuites"]) {
    const auto name = suite["name"].get<std::string>();
    s << "  <testsuite name=\"" << xml_escape(name) << "\" tests=\"" << suite["tests"] << "\" failures=\""
      << suite["failures"] << "\" skipped=\"" << suite["skipped"] << "\">\n";
    for (const auto& c : suite["testcases"]) {
      s << "    <testcase classname=\"" << xml_escape(name) << "\" name=\"" << xml_escape(c["name"].get<std::string>())
        << "\"";
      const auto status = c["status"].get<std::string>();
      const auto detail = xml_escape(c["detail"].get<std::string>());
      if (status == "pass") s << "/>\n";
      else if (status == "fail") s << ">\n      <failure message=\"" << detail << "\"/>\n    </testcase>\n";
      else s << ">\n      <skipped message=\"" << detail << "\"/>\n    </testcase>\n";
    }
    s << "  </testsuite>\n";
  }
  s << "</testsuites>\n";
  return s.str();
}

CommandResult run_command(const std::string& name, const CommandOptions& opt) {
  auto fail = [](ErrorKind kind, const std::string& kind_name, const std::string& msg) {
    CommandResult r;
    r.exit_code = static_cast<int>(kind);
    r.payload = {{"error", {{"kind", kind_name}, {"message", msg}}}};
    r.metadata = {{"version", kVersion}};
    return r;
  };
  try {
    if (name == "classify") return cmd_classify(opt);
    if (name == "poset") return cmd_poset(opt);
    if (name == "decompose") return cmd_decompose(opt);
    if (name == "verify") return cmd_verify(opt);
    throw InvalidInput("unknown command '" + name + "'");
  } catch (const Error& e) {
    static const char* names[] = {"", "check_failure", "invalid_input", "unsupported"};
    return fail(e.kind(), names[static_cast<int>(e.kind())], e.what());
  } catch (const std::exception& e) {
    return fail(ErrorKind::check_failure, "internal", e.what());
  }
}

}  // namespace dcrep

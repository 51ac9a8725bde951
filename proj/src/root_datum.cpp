#include "dcrep/root_datum.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>

#include "dcrep/linalg.hpp"

namespace dcrep {

std::string weight_str(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

long long pairing(const Weight& x, const Weight& c) {
  if (x.size() != c.size()) throw InvalidInput("pairing: rank mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * c[i];
  return s;
}

namespace {

Weight axpy(const Weight& x, long long a, const Weight& y) {
  Weight out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += a * y[i];
  return out;
}

Matrix<Rational> to_rational(const IntMatrix& m, std::size_t n) {
  Matrix<Rational> out(n, n, Rational());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = Rational(m[i][j]);
  return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

IntMatrix identity_int(std::size_t n) {
  IntMatrix c(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) c[i][i] = 1;
  return c;
}

}  // namespace

RootDatum::RootDatum(int rank, std::vector<Weight> simple_roots, std::vector<Weight> simple_coroots, std::string name)
    : name_(std::move(name)), rank_(rank), simple_roots_(std::move(simple_roots)),
      simple_coroots_(std::move(simple_coroots)) {
  if (rank < 0) throw InvalidInput("root datum rank must be nonnegative");
  if (simple_roots_.size() != simple_coroots_.size())
    throw InvalidInput("root datum needs as many simple coroots as simple roots");
  for (const auto& v : simple_roots_)
    if (static_cast<int>(v.size()) != rank) throw InvalidInput("simple root has wrong length");
  for (const auto& v : simple_coroots_)
    if (static_cast<int>(v.size()) != rank) throw InvalidInput("simple coroot has wrong length");
  const std::size_t r = simple_roots_.size();
  cartan_.assign(r, std::vector<long long>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) cartan_[i][j] = pairing(simple_roots_[j], simple_coroots_[i]);
  for (std::size_t i = 0; i < r; ++i) {
    if (cartan_[i][i] != 2) throw InvalidInput("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (cartan_[i][j] > 0) throw InvalidInput("Cartan matrix has a positive off-diagonal entry");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0)) throw InvalidInput("Cartan matrix zero pattern is not symmetric");
    }
  }
  if (r > 0) {
    std::vector<Vec<Rational>> cols, cocols;
    for (std::size_t i = 0; i < r; ++i) {
      cols.emplace_back(simple_roots_[i].begin(), simple_roots_[i].end());
      cocols.emplace_back(simple_coroots_[i].begin(), simple_coroots_[i].end());
    }
    if (rank_ < static_cast<int>(r) ||
        dcrep::rank(Matrix<Rational>::from_columns(cols, rank_, Rational())) != r ||
        dcrep::rank(Matrix<Rational>::from_columns(cocols, rank_, Rational())) != r)
      throw InvalidInput("simple roots or coroots are linearly dependent");
  }

  // close under simple reflections, carrying roots and coroots together
  std::set<std::pair<Weight, Weight>> seen;
  std::vector<std::pair<Weight, Weight>> queue;
  for (std::size_t i = 0; i < r; ++i) {
    seen.insert({simple_roots_[i], simple_coroots_[i]});
    queue.emplace_back(simple_roots_[i], simple_coroots_[i]);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    if (queue.size() > 2000) throw InvalidInput("root system is not finite");
    const auto [beta, cobeta] = queue[head];
    for (std::size_t i = 0; i < r; ++i) {
      if (beta == simple_roots_[i]) continue;
      Weight b2 = axpy(beta, -pairing(beta, simple_coroots_[i]), simple_roots_[i]);
      Weight c2 = axpy(cobeta, -pairing(simple_roots_[i], cobeta), simple_coroots_[i]);
      if (seen.insert({b2, c2}).second) queue.emplace_back(std::move(b2), std::move(c2));
    }
  }
  std::sort(queue.begin(), queue.end());
  two_rho_check_.assign(rank_, 0);
  two_rho_.assign(rank_, 0);
  for (auto& [b, c] : queue) {
    const auto coords = simple_root_coordinates(b);
    if (!coords) throw InvalidInput("generated root outside the root span");
    for (const auto& x : *coords)
      if (!x.is_integer() || x < Rational(0)) throw InvalidInput("generated root is not positive");
    if (pairing(b, c) != 2) throw InvalidInput("root and coroot do not pair to 2");
    pos_roots_.push_back(b);
    pos_coroots_.push_back(c);
    two_rho_check_ = axpy(two_rho_check_, 1, c);
    two_rho_ = axpy(two_rho_, 1, b);
  }
}

RootDatum RootDatum::torus(int rank) { return RootDatum(rank, {}, {}, "torus" + std::to_string(rank)); }

RootDatum RootDatum::from_json(const nlohmann::json& j) {
  try {
    return RootDatum(j.at("rank").get<int>(), j.value("simple_roots", std::vector<Weight>{}),
                     j.value("simple_coroots", std::vector<Weight>{}), j.value("name", std::string()));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("root datum: ") + e.what());
  }
}

nlohmann::json RootDatum::to_json() const {
  return {{"name", name_}, {"rank", rank_}, {"simple_roots", simple_roots_}, {"simple_coroots", simple_coroots_}};
}

void RootDatum::check_weight(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank_)
    throw InvalidInput("weight " + weight_str(w) + " has rank " + std::to_string(w.size()) + ", expected " +
                       std::to_string(rank_));
}

bool RootDatum::is_dominant(const Weight& w) const {
  check_weight(w);
  for (const auto& c : simple_coroots_)
    if (pairing(w, c) < 0) return false;
  return true;
}

void RootDatum::require_dominant(const Weight& w) const {
  if (!is_dominant(w)) throw InvalidInput("weight " + weight_str(w) + " is not dominant");
}

std::optional<std::vector<Rational>> RootDatum::simple_root_coordinates(const Weight& w) const {
  check_weight(w);
  const std::size_t r = simple_roots_.size();
  if (r == 0) {
    for (auto x : w)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  std::vector<Vec<Rational>> cols;
  for (const auto& s : simple_roots_) cols.emplace_back(s.begin(), s.end());
  const auto m = Matrix<Rational>::from_columns(cols, rank_, Rational());
  const auto sol = solve_linear(m, Vec<Rational>(w.begin(), w.end()));
  if (!sol.particular) return std::nullopt;
  return *sol.particular;
}

bool RootDatum::dominance_leq(const Weight& mu, const Weight& lambda) const {
  check_weight(mu);
  check_weight(lambda);
  const auto coords = simple_root_coordinates(axpy(lambda, -1, mu));
  if (!coords) return false;
  for (const auto& x : *coords)
    if (!x.is_integer() || x < Rational(0)) return false;
  return true;
}

Weight RootDatum::reflect(std::size_t i, const Weight& w) const {
  return axpy(w, -pairing(w, simple_coroots_.at(i)), simple_roots_.at(i));
}

Weight RootDatum::lowest_weight(const Weight& dominant) const {
  require_dominant(dominant);
  Weight w = dominant;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < simple_roots_.size(); ++i)
      if (pairing(w, simple_coroots_[i]) > 0) {
        w = reflect(i, w);
        moved = true;
      }
  }
  return w;
}

long long RootDatum::weyl_dimension(const Weight& dominant) const {
  require_dominant(dominant);
  Rational d(1);
  for (const auto& c : pos_coroots_) {
    const long long den = pairing(two_rho_, c);
    d *= Rational(Integer(2 * pairing(dominant, c) + den), Integer(den));
  }
  if (!d.is_integer()) throw CheckFailure("Weyl dimension is not an integer");
  return d.numerator().convert_to<long long>();
}

long long RootDatum::form(const Weight& x, const Weight& y) const {
  long long s = 0;
  for (const auto& c : pos_coroots_) s += pairing(x, c) * pairing(y, c);
  return s;
}

std::vector<Weight> RootDatum::dominant_weights_below(const Weight& dominant) const {
  std::vector<Weight> out;
  for (const auto& [w, m] : weight_multiplicities(dominant)) {
    (void)m;
    if (is_dominant(w)) out.push_back(w);
  }
  return out;
}

FormalCharacter RootDatum::weight_multiplicities(const Weight& lambda) const {
  require_dominant(lambda);
  const std::size_t r = simple_roots_.size();
  if (r == 0) return {{lambda, 1}};
  std::vector<long long> box;
  {
    const auto coords = simple_root_coordinates(axpy(lambda, -1, lowest_weight(lambda)));
    for (const auto& x : *coords) box.push_back(x.numerator().convert_to<long long>());
  }
  std::vector<std::vector<long long>> root_coords;
  for (const auto& b : pos_roots_) {
    std::vector<long long> c;
    const auto coords = simple_root_coordinates(b);
    for (const auto& x : *coords) c.push_back(x.numerator().convert_to<long long>());
    root_coords.push_back(std::move(c));
  }
  const Weight top = axpy(axpy(lambda, 1, lambda), 1, two_rho_);  // 2 lambda + 2 rho
  const long long top_norm = form(top, top);

  std::map<std::vector<long long>, long long> mult;  // keyed by depth coordinates n
  auto weight_of = [&](const std::vector<long long>& n) {
    Weight w = lambda;
    for (std::size_t i = 0; i < r; ++i) w = axpy(w, -n[i], simple_roots_[i]);
    return w;
  };
  long long total_height = 0;
  for (auto b : box) total_height += b;
  std::vector<long long> n(r, 0);
  std::function<void(std::size_t, long long)> visit = [&](std::size_t i, long long remaining) {
    if (i + 1 == r) {
      if (remaining > box[i]) return;
      n[i] = remaining;
      if (std::all_of(n.begin(), n.end(), [](long long x) { return x == 0; })) {
        mult[n] = 1;
        return;
      }
      const Weight mu = weight_of(n);
      long long num = 0;
      for (std::size_t a = 0; a < pos_roots_.size(); ++a) {
        std::vector<long long> up = n;
        for (long long k = 1;; ++k) {
          bool inside = true;
          for (std::size_t j = 0; j < r; ++j) {
            up[j] -= root_coords[a][j];
            if (up[j] < 0) inside = false;
          }
          if (!inside) break;
          const auto it = mult.find(up);
          if (it == mult.end() || it->second == 0) continue;
          num += it->second * form(axpy(mu, k, pos_roots_[a]), pos_roots_[a]);
        }
      }
      const Weight shifted = axpy(axpy(mu, 1, mu), 1, two_rho_);
      const long long den = top_norm - form(shifted, shifted);
      long long m = 0;
      if (den == 0) {
        if (num != 0) throw CheckFailure("Freudenthal recursion hit a zero denominator");
      } else {
        if ((8 * num) % den != 0) throw CheckFailure("Freudenthal recursion produced a non-integer");
        m = 8 * num / den;
      }
      if (m < 0) throw CheckFailure("Freudenthal recursion produced a negative multiplicity");
      mult[n] = m;
      return;
    }
    for (long long v = 0; v <= std::min(box[i], remaining); ++v) {
      n[i] = v;
      visit(i + 1, remaining - v);
    }
  };
  for (long long h = 0; h <= total_height; ++h) visit(0, h);

  FormalCharacter out;
  for (const auto& [key, m] : mult)
    if (m > 0) out[weight_of(key)] = m;
  return out;
}

ComponentAction::ComponentAction(RootDatum datum, FiniteGroup group, std::vector<IntMatrix> matrices)
    : datum_(std::move(datum)), group_(std::move(group)), mats_(std::move(matrices)) {
  const std::size_t n = static_cast<std::size_t>(datum_.rank());
  if (mats_.size() != group_.order()) throw InvalidInput("one action matrix per group element is required");
  for (const auto& m : mats_) {
    if (m.size() != n) throw InvalidInput("action matrix has wrong size");
    for (const auto& row : m)
      if (row.size() != n) throw InvalidInput("action matrix has wrong size");
  }
  if (mats_[0] != identity_int(n)) throw InvalidInput("identity element must act trivially");
  for (Elem a = 0; a < group_.order(); ++a)
    for (Elem b = 0; b < group_.order(); ++b)
      if (multiply(mats_[a], mats_[b]) != mats_[group_.mul(a, b)])
        throw InvalidInput("action matrices do not define a homomorphism at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
  for (const auto& m : mats_) {
    const auto rm = to_rational(m, n);
    const auto det = determinant(rm);
    if (!(det == Rational(1) || det == Rational(-1))) throw InvalidInput("action matrix is not invertible over Z");
    const auto inv_t = inverse(rm).transpose();
    IntMatrix c(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = inv_t(i, j).numerator().convert_to<long long>();
    comats_.push_back(std::move(c));
  }
  const std::set<Weight> roots(datum_.positive_roots().begin(), datum_.positive_roots().end());
  const std::set<Weight> coroots(datum_.positive_coroots().begin(), datum_.positive_coroots().end());
  for (Elem a = 0; a < group_.order(); ++a) {
    for (const auto& b : roots)
      if (!roots.count(act(a, b))) throw InvalidInput("action of element " + std::to_string(a) + " does not preserve positive roots");
    for (const auto& c : coroots)
      if (!coroots.count(act_coweight(a, c)))
        throw InvalidInput("action of element " + std::to_string(a) + " does not preserve positive coroots");
  }
}

ComponentAction ComponentAction::from_json(const RootDatum& datum, const nlohmann::json& j) {
  try {
    return ComponentAction(datum, FiniteGroup::from_json(j.at("group")), j.at("matrices").get<std::vector<IntMatrix>>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("component action: ") + e.what());
  }
}

ComponentAction ComponentAction::trivial(const RootDatum& datum) {
  return ComponentAction(datum, FiniteGroup::trivial(), {identity_int(static_cast<std::size_t>(datum.rank()))});
}

nlohmann::json ComponentAction::to_json() const { return {{"group", group_.to_json()}, {"matrices", mats_}}; }

Weight ComponentAction::act(Elem a, const Weight& w) const {
  group_.check_element(a);
  datum_.check_weight(w);
  Weight out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j) out[i] += mats_[a][i][j] * w[j];
  return out;
}

Weight ComponentAction::act_coweight(Elem a, const Weight& c) const {
  group_.check_element(a);
  datum_.check_weight(c);
  Weight out(c.size(), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) out[i] += comats_[a][i][j] * c[j];
  return out;
}

std::vector<Weight> ComponentAction::orbit(const Weight& w) const {
  std::set<Weight> s;
  for (Elem a = 0; a < group_.order(); ++a) s.insert(act(a, w));
  return {s.begin(), s.end()};
}

std::vector<Elem> ComponentAction::stabilizer(const Weight& w) const {
  std::vector<Elem> out;
  for (Elem a = 0; a < group_.order(); ++a)
    if (act(a, w) == w) out.push_back(a);
  return out;
}

Elem ComponentAction::transporter(const Weight& w) const {
  const Weight rep = canonical_rep(w);
  for (Elem a = 0; a < group_.order(); ++a)
    if (act(a, rep) == w) return a;
  throw CheckFailure("no transporter found");
}

ComponentAction::OrbitStabilizer ComponentAction::orbit_and_stabilizer(const Weight& w) const {
  if (!datum_.is_dominant(w)) throw InvalidInput("weight " + weight_str(w) + " is not dominant");
  OrbitStabilizer out{orbit(w), stabilizer(w)};
  if (out.orbit.size() * out.stabilizer.size() != group_.order()) throw CheckFailure("orbit-stabilizer count fails");
  return out;
}

std::optional<Elem> ComponentAction::order_strict_weight_witness(const Weight& lambda, const Weight& lambda_prime) const {
  for (Elem a = 0; a < group_.order(); ++a)
    if (datum_.dominance_less(act(a, lambda), lambda_prime)) return a;
  return std::nullopt;
}

RootDatum root_datum_preset(const std::string& name) {
  const std::string path = std::string(DCREP_DATA_DIR) + "/presets/" + name + ".json";
  std::ifstream in(path);
  if (!in) throw InvalidInput("unknown root datum preset '" + name + "'");
  return RootDatum::from_json(nlohmann::json::parse(in));
}

}  // namespace dcrep

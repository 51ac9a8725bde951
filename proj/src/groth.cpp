#include "dcrep/groth.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dcrep/linalg.hpp"

namespace dcrep {

namespace {

constexpr std::size_t kMaxLiftCandidates = 2'000'000;

std::size_t multiset_count(long long e, std::size_t d) {
  // C(e + d - 1, d), saturating
  double c = 1;
  for (std::size_t i = 1; i <= d; ++i) c = c * static_cast<double>(e - 1 + static_cast<long long>(i)) / static_cast<double>(i);
  return c > 1e12 ? static_cast<std::size_t>(1e12) : static_cast<std::size_t>(c);
}

std::vector<LiftedSimple> lifted_simples(const FiniteGroup& stab, const SymbolicFactorSet& alpha, const GF& one,
                                         long long e, std::uint64_t seed) {
  const TwistedGroupAlgebra<GF> alg(alpha.realize(stab, one));
  std::vector<LiftedSimple> out;
  for (auto& s : simple_modules(alg, seed)) {
    LiftedSimple l{s.dim, {}, s};
    for (const auto& t : s.trace_vector) l.lifted.push_back(lift_trace(t, s.dim, e));
    out.push_back(std::move(l));
  }
  return out;
}

std::string label_cell(const std::string& s) { return "\"" + s + "\""; }

std::vector<std::string> lifted_strings(const LiftedSimple& l) {
  std::vector<std::string> out;
  for (const auto& x : l.lifted) out.push_back(x.str());
  return out;
}

std::optional<std::size_t> find_by_traces(const std::vector<LiftedSimple>& ls, const Vec<GF>& tv) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i].module.trace_vector == tv) return i;
  return std::nullopt;
}

}  // namespace

Cyclotomic lift_trace(const GF& t, std::size_t dim, long long e) {
  const auto& f = t.field();
  if (e < 1 || e > 64) throw Unsupported("lift order " + std::to_string(e) + " is outside 1..64");
  if ((f.q() - 1) % static_cast<std::uint64_t>(e) != 0)
    throw Unsupported("F_" + std::to_string(f.q()) + " has no primitive " + std::to_string(e) + "-th root of unity");
  if (multiset_count(e, dim) > kMaxLiftCandidates)
    throw Unsupported("too many lift candidates for a " + std::to_string(dim) + "-dimensional simple");
  const auto& cf = cyclotomic_field(static_cast<int>(e));
  const GF zeta(f, f.root_of_unity(static_cast<std::uint64_t>(e)));
  std::vector<GF> roots{t.one()};
  for (long long j = 1; j < e; ++j) roots.push_back(roots.back() * zeta);

  std::set<Cyclotomic> found;
  std::vector<long long> idx(dim, 0);
  // enumerate nondecreasing index sequences
  while (true) {
    GF s = t.zero();
    for (auto j : idx) s += roots[static_cast<std::size_t>(j)];
    if (s == t) {
      Cyclotomic c = Cyclotomic::from_int(cf, 0);
      for (auto j : idx) c += Cyclotomic::zeta_power(cf, j);
      found.insert(c);
    }
    std::size_t i = dim;
    while (i > 0 && idx[i - 1] == e - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < dim; ++k) idx[k] = idx[i - 1];
  }
  if (found.empty())
    throw Unsupported("trace " + t.str() + " of a " + std::to_string(dim) + "-dimensional simple over F_" +
                      std::to_string(f.q()) + " is not a sum of " + std::to_string(e) +
                      "-th roots of unity; pass a larger lift order (try " + std::to_string(2 * e) + ")");
  if (found.size() > 1)
    throw Unsupported("trace " + t.str() + " over F_" + std::to_string(f.q()) + " lifts ambiguously to Z[zeta_" +
                      std::to_string(e) + "] (" + found.begin()->str() + " and " + std::next(found.begin())->str() +
                      "); choose a larger auxiliary prime or a different lift order");
  return *found.begin();
}

long long lifting_exponent(const FiniteGroup& stab, const SymbolicFactorSet& alpha) {
  return std::lcm(static_cast<long long>(stab.exponent()), alpha.value_exponent());
}

GF reduce_mod_p(const Rational& x, const GF& like) {
  const auto p = like.field().p();
  const Integer num = x.numerator() % p, den = x.denominator() % p;
  if (den == 0) throw InvalidInput("denominator of " + x.str() + " is divisible by " + std::to_string(p));
  return like.from_int(num.convert_to<long long>()) / like.from_int(den.convert_to<long long>());
}

nlohmann::json SimpleMatching::to_json() const {
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < char0.size(); ++i)
    pairs.push_back({{"char0", i}, {"charp", to_charp[i]}, {"dim", char0[i].dim}, {"lifted_traces", lifted_strings(char0[i])}});
  return {{"e", e},
          {"char0_field", char0_field.str()},
          {"charp_field", charp_field.str()},
          {"embedding", {{"char0", "zeta_" + std::to_string(e) + " -> " + char0_zeta},
                         {"charp", "zeta_" + std::to_string(e) + " -> " + charp_zeta}}},
          {"pairs", pairs}};
}

SimpleMatching tits_match(const FiniteGroup& stab, const SymbolicFactorSet& alpha, const TitsOptions& opt) {
  const auto n = static_cast<long long>(stab.order());
  if (!is_prime(opt.p)) throw InvalidInput(std::to_string(opt.p) + " is not prime");
  if (!is_prime(opt.ell)) throw InvalidInput("auxiliary prime " + std::to_string(opt.ell) + " is not prime");
  if (n % opt.p == 0) throw Unsupported("p = " + std::to_string(opt.p) + " divides the stabilizer order " + std::to_string(n));
  if (n % opt.ell == 0)
    throw Unsupported("ell = " + std::to_string(opt.ell) + " divides the stabilizer order " + std::to_string(n));
  const long long base = lifting_exponent(stab, alpha);
  const long long e = opt.lift_order.value_or(base);
  if (e % base != 0)
    throw InvalidInput("lift order " + std::to_string(e) + " is not a multiple of " + std::to_string(base));
  if ((opt.ell - 1) % e != 0) {
    long long next = opt.ell + 1;
    while ((next - 1) % e != 0 || !is_prime(next)) ++next;
    throw Unsupported("auxiliary prime must be 1 mod " + std::to_string(e) + " (next valid: " + std::to_string(next) + ")");
  }

  SimpleMatching m;
  m.e = e;
  m.char0_field = FieldSpec::finite(opt.ell);
  const GF one0(m.char0_field.galois_field(), GF::code_type{1});
  m.char0_zeta = GF(one0.field(), one0.field().root_of_unity(static_cast<std::uint64_t>(e))).str();
  m.char0 = lifted_simples(stab, alpha, one0, e, opt.seed);

  std::optional<Unsupported> last;
  long long q = 1;
  for (int k = 1; k <= 4 && m.charp.empty(); ++k) {
    q *= opt.p;
    if ((q - 1) % e != 0 || (q - 1) % alpha.root_order != 0) continue;
    try {
      const auto spec = FieldSpec::finite(opt.p, k);
      const GF onep(spec.galois_field(), GF::code_type{1});
      m.charp = lifted_simples(stab, alpha, onep, e, opt.seed);
      m.charp_field = spec;
      m.charp_zeta = GF(onep.field(), onep.field().root_of_unity(static_cast<std::uint64_t>(e))).str();
    } catch (const Unsupported& err) {
      last = err;
    }
  }
  if (m.charp.empty()) {
    if (last) throw *last;
    throw Unsupported("no F_" + std::to_string(opt.p) + "^k with k <= 4 contains the " + std::to_string(e) +
                      "-th roots of unity");
  }

  if (m.char0.size() != m.charp.size())
    throw Unsupported("different numbers of simples over " + m.char0_field.str() + " and " + m.charp_field.str() +
                      "; choose a different lift order");
  std::vector<bool> used(m.charp.size(), false);
  for (const auto& s : m.char0) {
    std::vector<std::size_t> hits;
    for (std::size_t j = 0; j < m.charp.size(); ++j)
      if (m.charp[j].lifted == s.lifted) hits.push_back(j);
    if (hits.size() != 1 || used[hits[0]] || m.charp[hits[0]].dim != s.dim)
      throw Unsupported("lifted trace vectors do not match bijectively between " + m.char0_field.str() + " and " +
                        m.charp_field.str() + "; choose a different auxiliary prime or lift order");
    used[hits[0]] = true;
    m.to_charp.push_back(hits[0]);
  }
  return m;
}

bool matching_commutes_with_action(const ComponentAction& action, const Weight& rep, const SymbolicFactorSet& alpha,
                                   const SimpleMatching& m) {
  const auto stab = Subgroup::of(action.group(), action.stabilizer(rep));
  const TwistedGroupAlgebra<GF> alg0(alpha.realize(stab.group, GF(m.char0_field.galois_field(), GF::code_type{1})));
  const TwistedGroupAlgebra<GF> algp(alpha.realize(stab.group, GF(m.charp_field.galois_field(), GF::code_type{1})));
  for (const auto& mu : action.orbit(rep))
    for (Elem a = 0; a < action.group().order(); ++a)
      for (std::size_t i = 0; i < m.char0.size(); ++i) {
        const auto j = m.to_charp[i];
        const auto x0 = act_on_pairs(action, alg0, a, WeightModulePair<GF>{mu, m.char0[i].module.action});
        const auto xp = act_on_pairs(action, algp, a, WeightModulePair<GF>{mu, m.charp[j].module.action});
        if (x0.weight != xp.weight) return false;
        const auto i2 = find_by_traces(m.char0, trace_vector(x0.module));
        const auto j2 = find_by_traces(m.charp, trace_vector(xp.module));
        if (!i2 || !j2 || m.to_charp[*i2] != *j2) return false;
      }
  return true;
}

std::string GrothLabel::str() const { return weight_str(rep) + "|E" + std::to_string(e_index); }

std::string DecompositionReport::to_csv() const {
  std::ostringstream s;
  s << "d_G";
  for (const auto& l : char0_labels) s << "," << label_cell(l.str());
  s << "\n";
  for (std::size_t r = 0; r < charp_labels.size(); ++r) {
    s << label_cell(charp_labels[r].str());
    for (auto x : matrix[r]) s << "," << x;
    s << "\n";
  }
  return s.str();
}

nlohmann::json DecompositionReport::to_json() const {
  auto labels = [](const std::vector<GrothLabel>& ls) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& l : ls) j.push_back({{"orbit_rep", l.rep}, {"e_index", l.e_index}, {"dim_e", l.dim_e}, {"name", l.str()}});
    return j;
  };
  nlohmann::json ms = nlohmann::json::array();
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    auto j = matchings[i].to_json();
    j["orbit_rep"] = orbit_reps[i];
    ms.push_back(std::move(j));
  }
  return {{"char0_labels", labels(char0_labels)},
          {"charp_labels", labels(charp_labels)},
          {"matrix", matrix},
          {"determinant", determinant.str()},
          {"is_permutation", is_permutation},
          {"dims_preserved", dims_preserved},
          {"matchings", ms}};
}

DecompositionReport decomposition_map(const ModelFile& m, const TitsOptions& opt) {
  const auto& A = m.action.group();
  if (static_cast<long long>(A.order()) % opt.p == 0)
    throw Unsupported("p = " + std::to_string(opt.p) + " divides |A| = " + std::to_string(A.order()));
  DecompositionReport r;
  r.orbit_reps = m.orbit_reps();
  std::vector<std::pair<std::size_t, std::size_t>> ones;  // (row, column)
  for (const auto& w : r.orbit_reps) {
    const auto stab = Subgroup::of(A, m.action.stabilizer(w));
    auto match = tits_match(stab.group, m.cocycle_for(w), opt);
    const auto c0 = r.char0_labels.size(), cp = r.charp_labels.size();
    for (std::size_t i = 0; i < match.char0.size(); ++i) r.char0_labels.push_back({w, i, match.char0[i].dim});
    for (std::size_t j = 0; j < match.charp.size(); ++j) r.charp_labels.push_back({w, j, match.charp[j].dim});
    for (std::size_t i = 0; i < match.to_charp.size(); ++i) ones.emplace_back(cp + match.to_charp[i], c0 + i);
    r.matchings.push_back(std::move(match));
  }
  const auto rows = r.charp_labels.size(), cols = r.char0_labels.size();
  r.matrix.assign(rows, std::vector<long long>(cols, 0));
  for (const auto& [i, j] : ones) r.matrix[i][j] += 1;

  r.is_permutation = rows == cols;
  for (std::size_t i = 0; i < rows && r.is_permutation; ++i) {
    long long rs = 0, cs = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      rs += r.matrix[i][j];
      cs += r.matrix[j][i];
      if (r.matrix[i][j] != 0 && r.matrix[i][j] != 1) r.is_permutation = false;
    }
    if (rs != 1 || cs != 1) r.is_permutation = false;
  }
  r.dims_preserved = true;
  for (const auto& [i, j] : ones)
    if (r.charp_labels[i].dim_e != r.char0_labels[j].dim_e) r.dims_preserved = false;
  if (rows == cols) {
    if (rows == 0) {
      r.determinant = Rational(1);
    } else {
      Matrix<Rational> d(rows, cols, Rational(0));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) d(i, j) = Rational(r.matrix[i][j]);
      r.determinant = determinant(d);
    }
  }
  return r;
}

std::vector<std::size_t> linear_extension(const LabelPoset& p) {
  std::vector<std::size_t> order(p.labels.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& d = p.action.datum();
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return d.height(p.labels[a].rep) < d.height(p.labels[b].rep);
  });
  return order;
}

UnitriangularReport verify_unitriangular_char0(const LabelPoset& p, const std::vector<std::size_t>& order) {
  const auto n = p.labels.size();
  std::vector<std::size_t> pos(n, n);
  if (order.size() != n) throw InvalidInput("label order has the wrong length");
  for (std::size_t r = 0; r < n; ++r) {
    if (order[r] >= n || pos[order[r]] != n) throw InvalidInput("label order is not a permutation");
    pos[order[r]] = r;
  }
  UnitriangularReport u;
  // in characteristic zero [Delta(lambda,E)] = [L(lambda,E)]
  u.matrix.assign(n, std::vector<long long>(n, 0));
  for (std::size_t r = 0; r < n; ++r) u.matrix[r][order[r]] = 1;
  u.is_permutation = true;
  for (std::size_t c = 0; c < n; ++c) {
    long long s = 0;
    for (std::size_t r = 0; r < n; ++r) s += u.matrix[r][c];
    if (s != 1) u.is_permutation = false;
  }
  auto is_extension = [&](const std::vector<std::size_t>& at) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (p.less[i][j] && at[i] >= at[j]) return false;
    return true;
  };
  u.given_order_is_linear_extension = is_extension(pos);
  const auto ext = u.given_order_is_linear_extension ? order : linear_extension(p);
  std::vector<std::size_t> ext_pos(n);
  for (std::size_t r = 0; r < n; ++r) ext_pos[ext[r]] = r;
  u.reordered_is_identity = true;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = u.matrix[pos[ext[r]]][ext[c]];
      if (v != (r == c ? 1 : 0)) u.reordered_is_identity = false;
    }
  u.strict_pairs_below_diagonal = is_extension(ext_pos);
  return u;
}

}  // namespace dcrep

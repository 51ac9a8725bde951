#include "dcrep/clifford.hpp"

#include <numeric>
#include <regex>

namespace dcrep {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

}  // namespace

SymbolicScalar SymbolicScalar::parse(const std::string& s) {
  static const std::regex int_re(R"(\s*([+-]?\d+)\s*)");
  static const std::regex root_re(R"(\s*z(?:\^([+-]?\d+))?\s*)");
  std::smatch m;
  SymbolicScalar out;
  try {
    if (std::regex_match(s, m, int_re)) {
      out.value = std::stoll(m[1]);
    } else if (std::regex_match(s, m, root_re)) {
      out.is_root = true;
      out.exponent = m[1].matched ? std::stoll(m[1]) : 1;
    } else {
      throw InvalidInput("cannot parse scalar '" + s + "'");
    }
  } catch (const std::out_of_range&) {
    throw InvalidInput("scalar out of range: '" + s + "'");
  }
  if (!out.is_root && out.value == 0) throw InvalidInput("factor set value 0 is not invertible");
  return out;
}

SymbolicScalar SymbolicScalar::from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return parse(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse(j.get<std::string>());
  throw InvalidInput("factor set value must be a string or an integer");
}

std::string SymbolicScalar::str() const {
  if (is_root) return "z^" + std::to_string(exponent);
  return std::to_string(value);
}

long long SymbolicScalar::order(long long root_order) const {
  if (is_root) return root_order / std::gcd(root_order, mod(exponent, root_order));
  if (value == 1) return 1;
  if (value == -1) return 2;
  return 0;
}

GF realize_root(long long root_order, long long k, const GF& like) {
  const auto& f = like.field();
  if (root_order <= 0 || (f.q() - 1) % static_cast<std::uint64_t>(root_order) != 0)
    throw Unsupported("GF(" + std::to_string(f.q()) + ") has no primitive " + std::to_string(root_order) +
                      "-th root of unity");
  const GF z(f, f.root_of_unity(static_cast<std::uint64_t>(root_order)));
  return z.pow(Integer(mod(k, root_order)));
}

Rational realize_root(long long root_order, long long k, const Rational&) {
  if (root_order <= 0) throw InvalidInput("root_order must be positive");
  const long long r = mod(k, root_order);
  if (r == 0) return Rational(1);
  if (2 * r == root_order) return Rational(-1);
  throw Unsupported("z^" + std::to_string(k) + " with root_order " + std::to_string(root_order) + " is not rational");
}

Cyclotomic realize_root(long long root_order, long long k, const Cyclotomic& like) {
  const int n = like.field().n();
  if (root_order <= 0 || n % root_order != 0)
    throw Unsupported("Q(zeta_" + std::to_string(n) + ") has no primitive " + std::to_string(root_order) +
                      "-th root of unity");
  return Cyclotomic::zeta_power(like.field(), (n / root_order) * mod(k, root_order));
}

SymbolicFactorSet SymbolicFactorSet::trivial(std::size_t n) {
  SymbolicFactorSet s;
  s.values.assign(n, std::vector<SymbolicScalar>(n));
  return s;
}

SymbolicFactorSet SymbolicFactorSet::from_json(const nlohmann::json& j, std::size_t n) {
  auto s = trivial(n);
  if (j.is_null()) return s;
  if (!j.is_object()) throw InvalidInput("factor set must be a JSON object");
  s.root_order = j.value("root_order", 1LL);
  if (s.root_order <= 0) throw InvalidInput("root_order must be positive");
  if (j.contains("values")) {
    const auto& v = j.at("values");
    if (!v.is_array() || v.size() != n) throw InvalidInput("factor set table needs " + std::to_string(n) + " rows");
    for (std::size_t a = 0; a < n; ++a) {
      if (!v[a].is_array() || v[a].size() != n) throw InvalidInput("factor set row has wrong length");
      for (std::size_t b = 0; b < n; ++b) s.values[a][b] = SymbolicScalar::from_json(v[a][b]);
    }
  }
  if (j.contains("entries")) {
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw InvalidInput("factor set entry must be [a, b, value]");
      const auto a = e[0].get<long long>(), b = e[1].get<long long>();
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
        throw InvalidInput("factor set entry index out of range");
      s.values[a][b] = SymbolicScalar::from_json(e[2]);
    }
  }
  return s;
}

nlohmann::json SymbolicFactorSet::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : values) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& v : r) row.push_back(v.str());
    rows.push_back(row);
  }
  return {{"root_order", root_order}, {"values", rows}};
}

long long SymbolicFactorSet::value_exponent() const {
  long long e = 1;
  for (const auto& r : values)
    for (const auto& v : r) {
      const long long o = v.order(root_order);
      if (o == 0) throw Unsupported("factor set value " + v.str() + " is not a root of unity");
      e = std::lcm(e, o);
    }
  return e;
}

}  // namespace dcrep

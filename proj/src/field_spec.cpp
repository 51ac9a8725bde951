#include "dcrep/field_spec.hpp"

#include <cctype>
#include <regex>

namespace dcrep {

FieldSpec FieldSpec::parse(const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  static const std::regex q_re(R"(Q|QQ|rationals)");
  static const std::regex cyc_re(R"((?:cyclotomic|Q\(zeta_?|CF)\(?(\d+)\)?\)?)");
  static const std::regex gf_re(R"((?:GF|F_?)\(?(\d+)(?:\^(\d+))?\)?)");
  std::smatch m;
  FieldSpec out;
  if (std::regex_match(text, q_re)) {
    out = rationals();
  } else if (std::regex_match(text, m, cyc_re)) {
    out = cyclotomic(std::stoi(m[1]));
    (void)out.cyclotomic_field();
  } else if (std::regex_match(text, m, gf_re)) {
    const long long base = std::stoll(m[1]);
    const int k = m[2].matched ? std::stoi(m[2]) : 1;
    if (base > 1000000) throw InvalidInput("field size too large: " + raw);
    out = finite(static_cast<int>(base), k);
    (void)out.galois_field();
  } else {
    throw InvalidInput("unrecognised field spec '" + raw + "'");
  }
  return out;
}

FieldSpec FieldSpec::from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind")) throw InvalidInput("field spec must be a string or an object with 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  FieldSpec out;
  if (kind == "rationals") {
    out = rationals();
  } else if (kind == "cyclotomic") {
    out = cyclotomic(j.at("n").get<int>());
    (void)out.cyclotomic_field();
  } else if (kind == "finite") {
    out = finite(j.at("p").get<int>(), j.value("k", 1));
    const auto& f = out.galois_field();
    if (j.contains("modulus") && j.at("modulus").get<std::vector<int>>() != f.modulus())
      throw InvalidInput("field modulus does not match the stored table for " + out.str());
  } else {
    throw InvalidInput("unknown field kind '" + kind + "'");
  }
  return out;
}

std::string FieldSpec::str() const {
  switch (kind) {
    case Kind::rationals: return "Q";
    case Kind::cyclotomic: return "cyclotomic(" + std::to_string(n) + ")";
    case Kind::finite:
      return k == 1 ? "GF(" + std::to_string(p) + ")" : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
  }
  return "?";
}

nlohmann::json FieldSpec::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::rationals: j["kind"] = "rationals"; break;
    case Kind::cyclotomic:
      j["kind"] = "cyclotomic";
      j["n"] = n;
      j["modulus"] = cyclotomic_field().cyclotomic_polynomial();
      break;
    case Kind::finite:
      j["kind"] = "finite";
      j["p"] = p;
      j["k"] = k;
      j["modulus"] = galois_field().modulus();
      break;
  }
  return j;
}

const GaloisField& FieldSpec::galois_field() const {
  if (kind != Kind::finite) throw InvalidInput(str() + " is not a finite field");
  return dcrep::galois_field(p, k);
}

const CyclotomicField& FieldSpec::cyclotomic_field() const {
  if (kind != Kind::cyclotomic) throw InvalidInput(str() + " is not a cyclotomic field");
  return dcrep::cyclotomic_field(n);
}

}  // namespace dcrep

#pragma once

#include <string>

#include <json.hpp>

#include "dcrep/cyclotomic.hpp"
#include "dcrep/galois_field.hpp"

namespace dcrep {

/// Which exact field a computation runs over.
struct FieldSpec {
  enum class Kind { rationals, cyclotomic, finite };
  Kind kind = Kind::rationals;
  int n = 1;  // cyclotomic order
  int p = 0;  // finite: characteristic
  int k = 1;  // finite: degree

  static FieldSpec rationals() { return {}; }
  static FieldSpec cyclotomic(int n) { return {Kind::cyclotomic, n, 0, 1}; }
  static FieldSpec finite(int p, int k = 1) { return {Kind::finite, 1, p, k}; }

  /// Accepts "Q", "cyclotomic(n)", "GF(p)", "GF(p^k)", "F_p".
  static FieldSpec parse(const std::string& text);
  static FieldSpec from_json(const nlohmann::json& j);

  long long characteristic() const { return kind == Kind::finite ? p : 0; }
  std::string str() const;
  /// Includes the stored modulus for finite fields.
  nlohmann::json to_json() const;

  const GaloisField& galois_field() const;
  const CyclotomicField& cyclotomic_field() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

}  // namespace dcrep

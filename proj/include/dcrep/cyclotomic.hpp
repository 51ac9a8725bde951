#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dcrep/rational.hpp"

namespace dcrep {

/// Q(zeta_n) presented as Q[x]/(Phi_n). Supported for 1 <= n <= 64.
class CyclotomicField {
 public:
  explicit CyclotomicField(int n);

  int n() const { return n_; }
  int degree() const { return static_cast<int>(phi_.size()) - 1; }
  /// Integer coefficients of Phi_n, constant term first.
  const std::vector<long long>& cyclotomic_polynomial() const { return phi_; }

  /// Reduce an arbitrary-length coefficient vector modulo Phi_n.
  std::vector<Rational> reduce(std::vector<Rational> c) const;

 private:
  int n_;
  std::vector<long long> phi_;
};

const CyclotomicField& cyclotomic_field(int n);
std::vector<long long> cyclotomic_polynomial(int n);
int euler_phi(int n);

/// Element of Q(zeta_n), coefficients on 1, zeta, ..., zeta^{phi(n)-1}.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const CyclotomicField& f, std::vector<Rational> coeffs);
  static Cyclotomic from_int(const CyclotomicField& f, long long v);
  /// zeta_n^j for any integer j.
  static Cyclotomic zeta_power(const CyclotomicField& f, long long j);

  const CyclotomicField& field() const { return *f_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  Cyclotomic zero() const { return from_int(*f_, 0); }
  Cyclotomic one() const { return from_int(*f_, 1); }
  Cyclotomic from_int(long long v) const { return from_int(*f_, v); }
  bool same_field(const Cyclotomic& o) const { return f_ == o.f_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(); }
  bool is_integral() const;
  Cyclotomic inv() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inv(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.f_ == b.f_ && a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

  /// Human readable form such as "1 + 2*z - z^3" (z = zeta_n).
  std::string str() const;

 private:
  const CyclotomicField* f_ = nullptr;
  std::vector<Rational> c_;
};

}  // namespace dcrep

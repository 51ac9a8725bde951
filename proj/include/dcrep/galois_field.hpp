#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dcrep/rational.hpp"

namespace dcrep {

bool is_prime(long long n);
std::vector<unsigned long long> prime_divisors(unsigned long long n);
/// Smallest generator of (Z/p)^x.
int smallest_primitive_root(int p);

/// The finite field F_{p^k} = F_p[x]/(f) for the tabulated modulus f.
///
/// The modulus table covers p <= 97 and k <= 4. For k = 1 the modulus is
/// x - g with g the smallest primitive root mod p; for k >= 2 it is the first
/// monic primitive polynomial of degree k when the tail coefficients
/// (c_0, ..., c_{k-1}) are enumerated in increasing order of sum c_i p^i.
/// In all cases the class of x generates the multiplicative group, so
/// "z^j" always means generator()^j.
///
/// Elements are encoded as integers in [0, q): the code of
/// c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i.
class GaloisField {
 public:
  using code_type = std::uint32_t;

  GaloisField(int p, int k);

  int p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t q() const { return q_; }
  /// Monic modulus, coefficients from the constant term upwards.
  const std::vector<int>& modulus() const { return modulus_; }

  code_type add(code_type a, code_type b) const;
  code_type sub(code_type a, code_type b) const;
  code_type neg(code_type a) const;
  code_type mul(code_type a, code_type b) const;
  code_type inv(code_type a) const;
  code_type pow(code_type a, const Integer& e) const;

  code_type from_int(long long n) const;
  code_type generator() const { return generator_; }
  /// generator()^((q-1)/order); throws unless order divides q-1.
  code_type root_of_unity(std::uint64_t order) const;
  /// Discrete logarithm base generator() of a nonzero element.
  std::uint64_t log(code_type a) const;
  std::uint64_t multiplicative_order(code_type a) const;

  std::vector<int> digits(code_type a) const;
  code_type from_digits(const std::vector<int>& d) const;

  std::string str(code_type a) const;

 private:
  code_type poly_mul(code_type a, code_type b) const;

  int p_;
  int k_;
  std::uint64_t q_;
  std::vector<int> modulus_;
  code_type generator_ = 0;
  bool tables_ = false;
  std::vector<code_type> exp_;
  std::vector<std::uint32_t> log_;
};

/// Interned field for (p, k); the instance lives for the whole program.
const GaloisField& galois_field(int p, int k);

/// Element of a finite field. Trivially copyable; refers to an interned field.
class GF {
 public:
  using code_type = GaloisField::code_type;

  GF() = default;
  GF(const GaloisField& f, code_type code) : f_(&f), c_(code) {}
  GF(const GaloisField& f, long long n) = delete;
  static GF from_int(const GaloisField& f, long long n) { return GF(f, f.from_int(n)); }

  const GaloisField& field() const { return *f_; }
  code_type code() const { return c_; }

  GF zero() const { return GF(*f_, code_type{0}); }
  GF one() const { return GF(*f_, code_type{1}); }
  GF from_int(long long n) const { return GF(*f_, f_->from_int(n)); }
  bool same_field(const GF& o) const { return f_ == o.f_; }

  bool is_zero() const { return c_ == 0; }
  bool is_one() const { return c_ == 1; }
  GF inv() const { return GF(*f_, f_->inv(c_)); }
  GF pow(const Integer& e) const { return GF(*f_, f_->pow(c_, e)); }

  GF operator-() const { return GF(*f_, f_->neg(c_)); }
  GF& operator+=(const GF& o) { c_ = f_->add(c_, o.c_); return *this; }
  GF& operator-=(const GF& o) { c_ = f_->sub(c_, o.c_); return *this; }
  GF& operator*=(const GF& o) { c_ = f_->mul(c_, o.c_); return *this; }
  GF& operator/=(const GF& o) { c_ = f_->mul(c_, f_->inv(o.c_)); return *this; }
  friend GF operator+(GF a, const GF& b) { return a += b; }
  friend GF operator-(GF a, const GF& b) { return a -= b; }
  friend GF operator*(GF a, const GF& b) { return a *= b; }
  friend GF operator/(GF a, const GF& b) { return a /= b; }

  friend bool operator==(const GF& a, const GF& b) { return a.c_ == b.c_ && a.f_ == b.f_; }
  friend std::strong_ordering operator<=>(const GF& a, const GF& b) { return a.c_ <=> b.c_; }

  std::string str() const { return f_->str(c_); }

 private:
  const GaloisField* f_ = nullptr;
  code_type c_ = 0;
};

}  // namespace dcrep

#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "dcrep/error.hpp"

namespace dcrep {

using Integer = boost::multiprecision::cpp_int;

/// Element of Q with arbitrary precision numerator and denominator.
class Rational {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const Integer& n) : v_(n) {}
  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = value_type(num, den);
  }
  explicit Rational(value_type v) : v_(std::move(v)) {}

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }
  Rational from_int(long long n) const { return Rational(n); }
  bool same_field(const Rational&) const { return true; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inv() const {
    if (is_zero()) throw InvalidInput("division by zero in Q");
    return Rational(value_type(1) / v_);
  }

  Integer numerator() const { return boost::multiprecision::numerator(v_); }
  Integer denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }

  const value_type& value() const { return v_; }

  Rational operator-() const { return Rational(value_type(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw InvalidInput("division by zero in Q");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (b.v_ < a.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const { return v_.str(); }

 private:
  value_type v_;
};

}  // namespace dcrep

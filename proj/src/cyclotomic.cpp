#include "dcrep/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace dcrep {

int euler_phi(int n) {
  int count = 0;
  for (int i = 1; i <= n; ++i)
    if (std::gcd(i, n) == 1) ++count;
  return count;
}

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) throw InvalidInput("cyclotomic index must be positive");
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
      const long long c = num[i];  // den is monic
      quot[i - dd] = c;
      for (int j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = quot;
  }
  return num;
}

CyclotomicField::CyclotomicField(int n) : n_(n) {
  if (n < 1 || n > 64)
    throw InvalidInput("cyclotomic fields are limited to 1 <= n <= 64, got " + std::to_string(n));
  phi_ = dcrep::cyclotomic_polynomial(n);
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> c) const {
  const int d = degree();
  for (int i = static_cast<int>(c.size()) - 1; i >= d; --i) {
    if (c[i].is_zero()) continue;
    const Rational lead = c[i];
    for (int j = 0; j <= d; ++j) c[i - d + j] -= lead * Rational(phi_[j]);
  }
  c.resize(d, Rational());
  return c;
}

const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = table[n];
  if (!slot) slot = std::make_unique<CyclotomicField>(n);
  return *slot;
}

Cyclotomic::Cyclotomic(const CyclotomicField& f, std::vector<Rational> coeffs)
    : f_(&f), c_(f.reduce(std::move(coeffs))) {}

Cyclotomic Cyclotomic::from_int(const CyclotomicField& f, long long v) {
  return Cyclotomic(f, {Rational(v)});
}

Cyclotomic Cyclotomic::zeta_power(const CyclotomicField& f, long long j) {
  const long long n = f.n();
  const long long e = ((j % n) + n) % n;
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c[static_cast<std::size_t>(e)] = 1;
  return Cyclotomic(f, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_integral() const {
  for (const auto& x : c_)
    if (!x.is_integer()) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& x : out.c_) x = -x;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  std::vector<Rational> prod(c_.size() + o.c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = f_->reduce(std::move(prod));
  return *this;
}

Cyclotomic Cyclotomic::inv() const {
  if (is_zero()) throw InvalidInput("division by zero in Q(zeta)");
  // Solve (multiplication by *this) * y = 1 by Gauss-Jordan elimination.
  const int d = f_->degree();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
  Cyclotomic basis = one();
  const Cyclotomic zeta = zeta_power(*f_, 1);
  for (int j = 0; j < d; ++j) {
    const Cyclotomic col = *this * basis;
    for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    basis *= zeta;
  }
  m[0][d] = 1;
  for (int col = 0; col < d; ++col) {
    int piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw CheckFailure("singular multiplication map in Q(zeta)");
    std::swap(m[piv], m[col]);
    const Rational s = m[col][col].inv();
    for (auto& x : m[col]) x *= s;
    for (int r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (int c = col; c <= d; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> y(d);
  for (int i = 0; i < d; ++i) y[i] = m[i][d];
  return Cyclotomic(*f_, std::move(y));
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return a.c_.size() <=> b.c_.size();
}

std::string Cyclotomic::str() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
    const bool negative = c < Rational(0);
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (mono.empty()) {
      out += c.str();
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += c.str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dcrep

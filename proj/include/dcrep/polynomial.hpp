#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcrep/linalg.hpp"

namespace dcrep {

/// Univariate polynomial, coefficients from the constant term upwards, with no
/// trailing zeros. The zero polynomial has an empty coefficient list but still
/// remembers its field through `zero_`.
template <FieldElement T>
class Polynomial {
 public:
  explicit Polynomial(const T& like) : zero_(like.zero()) {}
  Polynomial(std::vector<T> coeffs, const T& like) : zero_(like.zero()), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial({c}, c); }
  static Polynomial x(const T& like) { return Polynomial({like.zero(), like.one()}, like); }
  /// x - r
  static Polynomial linear(const T& r) { return Polynomial({-r, r.one()}, r); }

  const std::vector<T>& coeffs() const { return c_; }
  const T& zero_element() const { return zero_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  const T& leading() const {
    if (c_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == zero_.one(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
  }

  T operator()(const T& x) const {
    T acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<T> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * zero_.from_int(static_cast<long long>(i)));
    return Polynomial(std::move(d), zero_);
  }

  Polynomial operator-() const {
    Polynomial out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial(a.zero_);
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out), a.zero_);
  }
  friend Polynomial operator*(Polynomial a, const T& s) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }

  /// Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw InvalidInput("polynomial division by zero");
    Polynomial r = *this;
    if (r.degree() < d.degree()) return {Polynomial(zero_), r};
    std::vector<T> q(c_.size() - d.c_.size() + 1, zero_);
    const T inv_lead = d.leading().inv();
    for (int i = r.degree(); i >= d.degree(); --i) {
      const T f = r.c_[i] * inv_lead;
      if (f.is_zero()) continue;
      q[i - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) r.c_[i - d.degree() + j] -= f * d.c_[j];
    }
    r.trim();
    return {Polynomial(std::move(q), zero_), r};
  }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return a.divmod(b).first; }
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return a.divmod(b).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      const std::string cs = c_[i].str();
      const bool unit = c_[i] == zero_.one();
      std::string term;
      if (i == 0) {
        term = cs;
      } else {
        term = unit ? "" : ((cs.find_first_of(" +") != std::string::npos ? "(" + cs + ")" : cs) + "*");
        term += i == 1 ? "x" : "x^" + std::to_string(i);
      }
      out += out.empty() ? term : " + " + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  T zero_;
  std::vector<T> c_;
};

template <FieldElement T>
Polynomial<T> gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// a^e mod m by square and multiply.
template <FieldElement T, class Exp>
Polynomial<T> powmod(Polynomial<T> a, Exp e, const Polynomial<T>& m) {
  Polynomial<T> acc = Polynomial<T>::constant(m.zero_element().one()) % m;
  a = a % m;
  while (e > 0) {
    if (e % 2 == 1) acc = (acc * a) % m;
    a = (a * a) % m;
    e /= 2;
  }
  return acc;
}

/// Evaluate p at a square matrix.
template <FieldElement T>
Matrix<T> evaluate(const Polynomial<T>& p, const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("polynomial evaluation at non-square matrix");
  Matrix<T> acc(m.rows(), m.cols(), m.zero_element());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += *it;
  }
  return acc;
}

/// Minimal monic p with p(step)(start) = 0, where step is a linear map given
/// as a callable on vectors. Krylov iteration with a tracked echelon basis.
template <FieldElement T, class Step>
Polynomial<T> krylov_minimal_polynomial(const Vec<T>& start, Step step, std::size_t bound) {
  const T z = start.front().zero();
  TrackedEchelon<T> ech(start.size(), z);
  Vec<T> v = start;
  for (std::size_t k = 0; k <= bound; ++k) {
    if (auto rel = ech.insert(v)) {
      // v_k = sum rel_i v_i  =>  x^k - sum rel_i x^i
      std::vector<T> c(k + 1, z);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*rel)[i];
      c[k] = z.one();
      return Polynomial<T>(std::move(c), z);
    }
    v = step(v);
  }
  throw CheckFailure("Krylov sequence did not become dependent within the bound");
}

/// Minimal polynomial of a square matrix: Krylov on the powers of m, viewed as
/// vectors of length n^2, then verified by evaluation.
template <FieldElement T>
Polynomial<T> minimal_polynomial(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("minimal polynomial of non-square matrix " + m.shape());
  const std::size_t n = m.rows();
  const T& z = m.zero_element();
  if (n == 0) return Polynomial<T>::constant(z.one());
  auto as_matrix = [&](const Vec<T>& v) {
    Matrix<T> out(n, n, z);
    for (std::size_t i = 0; i < n * n; ++i) out(i / n, i % n) = v[i];
    return out;
  };
  const auto p = krylov_minimal_polynomial<T>(
      flatten(Matrix<T>::identity(n, z)), [&](const Vec<T>& v) { return flatten(m * as_matrix(v)); }, n);
  if (!evaluate(p, m).is_zero()) throw CheckFailure("minimal polynomial does not annihilate the matrix");
  return p;
}

/// Companion matrix of a monic polynomial.
template <FieldElement T>
Matrix<T> companion_matrix(const Polynomial<T>& p) {
  if (!p.is_monic()) throw InvalidInput("companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  Matrix<T> c(n, n, p.zero_element());
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = p.zero_element().one();
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeffs()[i];
  return c;
}

}  // namespace dcrep

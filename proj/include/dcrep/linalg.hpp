#pragma once

#include <optional>
#include <vector>

#include "dcrep/matrix.hpp"

namespace dcrep {

template <FieldElement T>
struct Rref {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
template <FieldElement T>
Rref<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    const T s = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <FieldElement T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : m x = 0}, one vector per free column.
template <FieldElement T>
std::vector<Vec<T>> nullspace(const Matrix<T>& m) {
  const auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  const T& z = m.zero_element();
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<T> v(m.cols(), z);
    v[f] = z.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <FieldElement T>
struct LinearSolution {
  std::optional<Vec<T>> particular;
  std::vector<Vec<T>> kernel;
};

/// All solutions of m x = b.
template <FieldElement T>
LinearSolution<T> solve_linear(const Matrix<T>& m, const Vec<T>& b) {
  if (b.size() != m.rows())
    throw InvalidInput("solve_linear: right-hand side has length " + std::to_string(b.size()) +
                       " but matrix is " + m.shape());
  for (const auto& x : b)
    if (!x.same_field(m.zero_element())) throw InvalidInput("solve_linear: field mismatch");
  Matrix<T> aug(m.rows(), m.cols() + 1, m.zero_element());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto [r, pivots] = rref(aug);
  LinearSolution<T> out;
  out.kernel = nullspace(m);
  if (!pivots.empty() && pivots.back() == m.cols()) return out;
  Vec<T> x(m.cols(), m.zero_element());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = r(i, m.cols());
  out.particular = std::move(x);
  return out;
}

template <FieldElement T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw InvalidInput("determinant of non-square matrix");
  const T& z = m.zero_element();
  T det = z.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return z;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    const T s = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const T f = m(i, c) * s;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Inverse of a square matrix; throws CheckFailure when singular.
template <FieldElement T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, m.zero_element());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.zero_element().one();
  }
  const auto [r, pivots] = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1))
    throw CheckFailure("matrix is singular");
  Matrix<T> inv(n, n, m.zero_element());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

/// Incrementally built echelon basis of a subspace. Each stored row also
/// records its expression in terms of the vectors that were inserted, so a
/// dependent insertion yields the linear relation that killed it.
template <FieldElement T>
class TrackedEchelon {
 public:
  TrackedEchelon(std::size_t length, const T& like) : length_(length), zero_(like.zero()) {}

  std::size_t size() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Reduce v against the basis. Returns the residue and the coefficients c
  /// (over inserted vectors) such that residue = v - sum c_i * inserted_i.
  std::pair<Vec<T>, Vec<T>> reduce(Vec<T> v) const {
    if (v.size() != length_) throw InvalidInput("echelon: vector length mismatch");
    Vec<T> coeff(inserted_ + 1, zero_);
    for (const auto& row : rows_) {
      const T f = v[row.pivot];
      if (f.is_zero()) continue;
      for (std::size_t j = row.pivot; j < length_; ++j) v[j] -= f * row.vec[j];
      for (std::size_t j = 0; j < row.combo.size(); ++j) coeff[j] += f * row.combo[j];
    }
    coeff.resize(inserted_);
    return {std::move(v), std::move(coeff)};
  }

  /// Insert v. Returns std::nullopt when v was independent, otherwise the
  /// coefficients c with v = sum c_i * inserted_i.
  std::optional<Vec<T>> insert(const Vec<T>& v) {
    auto [res, coeff] = reduce(v);
    std::size_t piv = 0;
    while (piv < length_ && res[piv].is_zero()) ++piv;
    if (piv == length_) return coeff;
    // residue = v - sum coeff_i inserted_i; normalise and clear the pivot column
    const T s = res[piv].inv();
    Vec<T> combo(inserted_ + 1, zero_);
    for (std::size_t j = 0; j < inserted_; ++j) combo[j] = -coeff[j] * s;
    combo[inserted_] = s;
    for (auto& x : res) x *= s;
    for (auto& row : rows_) {
      const T f = row.vec[piv];
      if (f.is_zero()) continue;
      for (std::size_t j = piv; j < length_; ++j) row.vec[j] -= f * res[j];
      row.combo.resize(inserted_ + 1, zero_);
      for (std::size_t j = 0; j <= inserted_; ++j) row.combo[j] -= f * combo[j];
    }
    Row row{piv, std::move(res), std::move(combo)};
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->pivot < piv) ++pos;
    rows_.insert(pos, std::move(row));
    ++inserted_;
    return std::nullopt;
  }

  bool contains(const Vec<T>& v) const {
    const auto res = reduce(v).first;
    for (const auto& x : res)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  struct Row {
    std::size_t pivot;
    Vec<T> vec;
    Vec<T> combo;
  };
  std::size_t length_;
  T zero_;
  std::vector<Row> rows_;
  std::size_t inserted_ = 0;
};

/// Coordinates of v in the (independent) column basis; throws if v is outside the span.
template <FieldElement T>
Vec<T> coordinates(const std::vector<Vec<T>>& basis, const Vec<T>& v) {
  if (basis.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) throw CheckFailure("vector not in span of empty basis");
    return {};
  }
  const auto m = Matrix<T>::from_columns(basis, v.size(), v.front());
  auto sol = solve_linear(m, v);
  if (!sol.particular) throw CheckFailure("vector not in span");
  return *sol.particular;
}

/// Basis of {X : X * a_i = b_i * X for all i}, where a_i are d_a x d_a and
/// b_i are d_b x d_b; solutions are d_b x d_a matrices.
template <FieldElement T>
std::vector<Matrix<T>> intertwiners(const std::vector<Matrix<T>>& a, const std::vector<Matrix<T>>& b,
                                    std::size_t da, std::size_t db, const T& like) {
  if (a.size() != b.size()) throw InvalidInput("intertwiners: generator count mismatch");
  const std::size_t unknowns = db * da;
  Matrix<T> sys(a.size() * unknowns, unknowns, like);
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a[g].rows() != da || b[g].rows() != db) throw InvalidInput("intertwiners: dimension mismatch");
    // (X a)_{ij} - (b X)_{ij} = sum_k X_{ik} a_{kj} - sum_k b_{ik} X_{kj}
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        const std::size_t eq = g * unknowns + i * da + j;
        for (std::size_t k = 0; k < da; ++k) sys(eq, i * da + k) += a[g](k, j);
        for (std::size_t k = 0; k < db; ++k) sys(eq, k * da + j) -= b[g](i, k);
      }
  }
  std::vector<Matrix<T>> out;
  for (const auto& v : nullspace(sys)) {
    Matrix<T> x(db, da, like);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < da; ++j) x(i, j) = v[i * da + j];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace dcrep

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dcrep/error.hpp"

namespace dcrep {

/// Requirements on an exact field element type (Rational, GF, Cyclotomic).
template <class T>
concept FieldElement = requires(const T& a, const T& b, long long n) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.zero() } -> std::convertible_to<T>;
  { a.one() } -> std::convertible_to<T>;
  { a.from_int(n) } -> std::convertible_to<T>;
  { a.inv() } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.same_field(b) } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <FieldElement T>
using Vec = std::vector<T>;

/// Dense row-major matrix over an exact field. The zero element is stored so
/// that empty shapes still know their field.
template <FieldElement T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero.zero()), data_(rows * cols, zero.zero()) {}

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = like.one();
    return m;
  }

  /// Build from nested rows; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, const T& like) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, like);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// Matrix whose columns are the given vectors, each of length `rows`.
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows, const T& like) {
    Matrix m(rows, cols.size(), like);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero_element() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec<T> column(std::size_t j) const {
    Vec<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  /// Row-major entries.
  const std::vector<T>& data() const { return data_; }

  bool same_field(const Matrix& o) const { return zero_.same_field(o.zero_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  T trace() const {
    if (!is_square()) throw InvalidInput("trace of non-square matrix");
    T acc = zero_;
    for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
    return acc;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw InvalidInput("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
    if (!a.same_field(b)) throw InvalidInput("matrix product field mismatch");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  Vec<T> apply(const Vec<T>& v) const {
    if (v.size() != cols_) throw InvalidInput("matrix-vector shape mismatch");
    Vec<T> out(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  std::string str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      out += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
      out += "]";
    }
    return out + "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw InvalidInput("matrix shape mismatch: " + shape() + " vs " + o.shape());
    if (!same_field(o)) throw InvalidInput("matrix field mismatch");
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

/// Kronecker product a (x) b.
template <FieldElement T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols(), a.zero_element());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

/// Block diagonal sum.
template <FieldElement T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols(), a.zero_element());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  return out;
}

/// Flatten row-major.
template <FieldElement T>
Vec<T> flatten(const Matrix<T>& m) {
  return m.data();
}

}  // namespace dcrep

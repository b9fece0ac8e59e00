#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hopfrad/scalar.hpp"

namespace hopfrad {

using Vector = std::vector<Scalar>;

namespace vec {

Vector zeros(const Field& f, std::size_t n);
Vector unit(const Field& f, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& a);
/// a += c * b
void axpy(Vector& a, const Scalar& c, const Vector& b);
bool is_zero(const Vector& a);
std::string to_string(const Vector& a);

}  // namespace vec

/// Dense row-major matrix of exact scalars. Linear maps use the column
/// convention: column c holds the image of the c-th basis vector.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& f, std::size_t n);
  /// Each vector becomes a row. All must have length cols.
  static Matrix from_rows(const Field& f, const std::vector<Vector>& rows, std::size_t cols);
  /// Each vector becomes a column. All must have length rows.
  static Matrix from_columns(const Field& f, const std::vector<Vector>& cols, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  /// Flattened entries, row-major.
  const std::vector<Scalar>& data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;  ///< zero rows dropped
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, as rows in reduced row-echelon form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Some x with m x = b, if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace hopfrad

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fuzzyhom/execution.hpp"
#include "fuzzyhom/ring.hpp"

namespace fuzzyhom {

using Vector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers. Zero-row and
/// zero-column shapes are legal and flow through every operation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  /// Column vectors all of length `rows`.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> columns() const;

  Matrix select_rows(std::span<const std::size_t> rows) const;
  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  /// [this | rhs]; row counts must agree.
  Matrix hcat(const Matrix& rhs) const;

  bool is_zero() const;
  void reduce(const Ring& ring);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Matrix product over `ring`; rows are distributed across threads under
/// Execution::Parallel.
Matrix multiply(const Matrix& a, const Matrix& b, const Ring& ring,
                Execution exec = Execution::Parallel);
Vector multiply(const Matrix& a, const Vector& x, const Ring& ring);

Vector add(const Vector& a, const Vector& b, const Ring& ring);
Vector scale(const Integer& k, const Vector& v, const Ring& ring);
bool is_zero(const Vector& v);

}  // namespace fuzzyhom

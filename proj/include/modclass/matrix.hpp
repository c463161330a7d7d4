#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modclass/finite_field.hpp"

namespace modclass {

/// Dense row-major matrix over a finite field. Vectors are rows and act on
/// the right: v -> v * M.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Elem>& data() { return data_; }
  const std::vector<Elem>& data() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;
  Matrix transpose() const;
  /// Rows [first, first+count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  /// Stacks `below` under this matrix.
  Matrix stacked(const Matrix& below) const;

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  /// this += c * other
  void add_scaled(const Matrix& other, Elem c);
  Matrix scaled(Elem c) const;
  /// Applies f entrywise (field change or automorphism); result lives in `target`.
  template <typename F>
  Matrix map(FieldPtr target, F&& f) const {
    Matrix out(std::move(target), rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = f(data_[i]);
    return out;
  }

  /// Row vector times matrix.
  std::vector<Elem> apply(std::span<const Elem> v) const;

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
  }
  /// Lexicographic on (rows, cols, entries).
  bool operator<(const Matrix& o) const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

}  // namespace modclass

#include "modclass/matrix.hpp"

#include <algorithm>

#include "modclass/errors.hpp"
#include "modclass/kernels.hpp"

namespace modclass {

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool Matrix::is_identity() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != (i == j ? 1U : 0U)) return false;
    }
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix out(field_, count, cols_);
  std::copy(data_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_), out.data_.begin());
  return out;
}

Matrix Matrix::stacked(const Matrix& below) const {
  if (rows_ == 0 && cols_ == 0) return below;
  if (below.cols_ != cols_) throw MathError("stacking matrices of different widths");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const { return kernels::parallel::multiply(*this, other); }

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw MathError("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], other.data_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw MathError("matrix shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->sub(data_[i], other.data_[i]);
  return out;
}

void Matrix::add_scaled(const Matrix& other, Elem c) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw MathError("matrix shape mismatch");
  field_->axpy(data_, c, other.data_);
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  field_->scale(out.data_, c);
  return out;
}

std::vector<Elem> Matrix::apply(std::span<const Elem> v) const {
  std::vector<Elem> out(cols_, 0);
  for (std::size_t k = 0; k < rows_; ++k) field_->axpy(out, v[k], row(k));
  return out;
}

bool Matrix::operator<(const Matrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return data_ < o.data_;
}

}  // namespace modclass

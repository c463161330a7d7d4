#include "modclass/linalg.hpp"

#include "modclass/errors.hpp"
#include "modclass/kernels.hpp"

namespace modclass {

Echelon rref(Matrix m) {
  auto pivots = kernels::parallel::echelonize(m);
  Echelon e{m.row_block(0, pivots.size()), std::move(pivots)};
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix right_nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  const auto& f = *m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix basis(m.field(), m.cols() - e.rank(), m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(k, free) = 1;
    for (std::size_t i = 0; i < e.rank(); ++i) basis(k, e.pivots[i]) = f.neg(e.reduced(i, free));
    ++k;
  }
  return basis;
}

Matrix left_nullspace(const Matrix& m) { return right_nullspace(m.transpose()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = kernels::parallel::echelonize(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
  // x a = b  <=>  a^T x^T = b^T
  if (a.cols() != b.cols()) throw MathError("solve_left shape mismatch");
  const auto& f = *a.field();
  const std::size_t n = a.rows();
  const std::size_t eqs = a.cols();
  Matrix aug(a.field(), eqs, n + b.rows());
  for (std::size_t i = 0; i < eqs; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(j, i);
    for (std::size_t j = 0; j < b.rows(); ++j) aug(i, n + j) = b(j, i);
  }
  const auto pivots = kernels::parallel::echelonize(aug);
  Matrix x(a.field(), b.rows(), n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.rows(); ++j) x(j, pivots[r]) = aug(r, n + j);
  }
  (void)f;
  return x;
}

Matrix coordinates_in(const Matrix& basis, const Matrix& vectors) {
  auto x = solve_left(basis, vectors);
  if (!x) throw MathError("vector outside the given span");
  return *x;
}

void EchelonBasis::reduce(std::vector<Elem>& v) const {
  const auto& f = *field_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c != 0) f.axpy(v, f.neg(c), rows_[i]);
  }
}

bool EchelonBasis::contains(std::vector<Elem> v) const {
  reduce(v);
  for (auto x : v) {
    if (x != 0) return false;
  }
  return true;
}

bool EchelonBasis::add(std::vector<Elem> v) {
  if (v.size() != dim_) throw MathError("vector length mismatch");
  reduce(v);
  std::size_t piv = 0;
  while (piv < dim_ && v[piv] == 0) ++piv;
  if (piv == dim_) return false;
  field_->scale(v, field_->inv(v[piv]));
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

Matrix EchelonBasis::matrix() const {
  Matrix m(field_, rows_.size(), dim_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::copy(rows_[i].begin(), rows_[i].end(), m.row(i).begin());
  }
  kernels::parallel::echelonize(m);
  return m;
}

}  // namespace modclass

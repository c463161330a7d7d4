#include <omp.h>

#include "modclass/errors.hpp"
#include "modclass/kernels.hpp"

namespace modclass::kernels::parallel {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MathError("matrix product shape mismatch");
  const auto& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const bool wide = a.rows() * a.cols() * b.cols() >= kParallelThreshold * 8;
#pragma omp parallel for schedule(static) if (wide)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    auto dst = out.row(static_cast<std::size_t>(i));
    for (std::size_t k = 0; k < a.cols(); ++k) {
      f.axpy(dst, a(static_cast<std::size_t>(i), k), b.row(k));
    }
  }
  return out;
}

std::vector<std::size_t> echelonize(Matrix& m) {
  const auto& f = *m.field();
  const bool wide = m.rows() * m.cols() >= kParallelThreshold;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      auto a = m.row(piv);
      auto b = m.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    f.scale(m.row(rank), f.inv(m(rank, col)));
    const auto pivot_row = static_cast<std::ptrdiff_t>(rank);
#pragma omp parallel for schedule(static) if (wide)
    for (std::ptrdiff_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      const auto ur = static_cast<std::size_t>(r);
      const Elem c = m(ur, col);
      if (c != 0) f.axpy(m.row(ur), f.neg(c), m.row(rank));
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace modclass::kernels::parallel

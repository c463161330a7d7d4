#include "modclass/errors.hpp"
#include "modclass/kernels.hpp"

namespace modclass::kernels::serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MathError("matrix product shape mismatch");
  const auto& f = *a.field();
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) f.axpy(dst, a(i, k), b.row(k));
  }
  return out;
}

std::vector<std::size_t> echelonize(Matrix& m) {
  const auto& f = *m.field();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
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
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      const Elem c = m(r, col);
      if (c != 0) f.axpy(m.row(r), f.neg(c), m.row(rank));
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace modclass::kernels::serial

#pragma once

// Dense kernels. `serial` is the reference implementation kept for testing
// and benchmarking; `parallel` is the OpenMP version the library uses. Both
// must produce bit-identical results.

#include <cstddef>
#include <vector>

#include "modclass/matrix.hpp"

namespace modclass::kernels {

// Below this many entries the OpenMP kernels stay on one thread.
inline constexpr std::size_t kParallelThreshold = 1U << 14;

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
/// In-place reduced row echelon form; returns the pivot columns. Rows past
/// the rank are zero.
std::vector<std::size_t> echelonize(Matrix& m);
}  // namespace serial

namespace parallel {
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<std::size_t> echelonize(Matrix& m);
}  // namespace parallel

}  // namespace modclass::kernels

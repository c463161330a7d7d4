#pragma once

#include <optional>
#include <vector>

#include "modclass/matrix.hpp"

namespace modclass {

struct Echelon {
  Matrix reduced;                    // RREF, truncated to rank rows
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis (as rows) of { x : M x^T = 0 }.
Matrix right_nullspace(const Matrix& m);
/// Basis (as rows) of { v : v M = 0 }.
Matrix left_nullspace(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
/// Some x with x * a = b (rows of b solved independently), if it exists.
std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b);
/// Coordinates of each row of `vectors` in the row space basis `basis`
/// (rows independent). Throws if some row is outside the span.
Matrix coordinates_in(const Matrix& basis, const Matrix& vectors);

/// Incrementally built semi-echelon basis of a row space.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// Subtracts the span from v in place; v is zero afterwards iff it was in the span.
  void reduce(std::vector<Elem>& v) const;
  bool contains(std::vector<Elem> v) const;
  /// Adds v if independent; returns whether it was.
  bool add(std::vector<Elem> v);
  /// The basis in reduced row echelon form.
  Matrix matrix() const;

 private:
  FieldPtr field_;
  std::size_t dim_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace modclass

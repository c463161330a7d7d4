#pragma once

// KG-modules as matrix representations of the group generators, and the
// functors between them: extension and restriction of scalars, restriction
// and induction along subgroups, Frobenius twists, direct sums and Hom spaces.
//
// Modules are right modules: a vector is a row and g acts by v -> v * rho(g).

#include <vector>

#include "modclass/finite_field.hpp"
#include "modclass/matrix.hpp"
#include "modclass/perm_group.hpp"

namespace modclass {

class Rep {
 public:
  /// Checks shapes and invertibility; relations are checked by validate().
  Rep(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> generators);

  const GroupPtr& group() const { return group_; }
  const FieldPtr& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  const Matrix& generator(std::size_t k) const { return generators_[k]; }

  /// rho(g) for a group element index, via the group's generator factorization.
  Matrix element(int g) const;
  /// rho(g) for every element, indexed by element.
  std::vector<Matrix> element_matrices() const;

  /// rho(x) rho(s) == rho(x s) for every element x and generator s, which
  /// proves rho is a homomorphism. Throws MathError otherwise.
  void validate() const;

 private:
  GroupPtr group_;
  FieldPtr field_;
  std::size_t dim_;
  std::vector<Matrix> generators_;
};

/// Intertwiners M with rho_source(g) M = M rho_target(g).
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<Matrix> basis;
  std::size_t dim() const { return basis.size(); }
};

Rep trivial_module(const GroupPtr& g, const FieldPtr& k);
Rep regular_module(const GroupPtr& g, const FieldPtr& k);
/// Permutation module on the points the group acts on.
Rep permutation_module(const GroupPtr& g, const FieldPtr& k);

Rep extend_scalars(const Rep& v, const FieldPtr& larger);
Rep restrict_scalars(const Rep& v, const FieldPtr& smaller);

/// Rep of h.as_group().
Rep restrict_subgroup(const Rep& v, const Subgroup& h);
/// `v` is a module for h.as_group(); result is a module for h.parent().
Rep induce(const Rep& v, const Subgroup& h);

Rep frobenius_twist(const Rep& v, const FieldAutomorphism& sigma);
Rep direct_sum(const Rep& a, const Rep& b);
Rep zero_module(const GroupPtr& g, const FieldPtr& k);

/// New module whose basis is given by the rows of `basis` (invertible).
Rep change_basis(const Rep& v, const Matrix& basis);
/// Submodule spanned by the rows of `basis` (independent, invariant).
Rep sub_representation(const Rep& v, const Matrix& basis);
/// Quotient by the submodule spanned by the rows of `basis`.
Rep quotient_representation(const Rep& v, const Matrix& basis);

/// Smallest invariant subspace containing the seed vectors, as an RREF basis.
Matrix spin(const FieldPtr& field, const std::vector<std::vector<Elem>>& seeds,
           const std::vector<Matrix>& generators);

HomSpace hom_space(const Rep& source, const Rep& target);

/// Same group, field and generator matrices.
bool operator==(const Rep& a, const Rep& b);

}  // namespace modclass

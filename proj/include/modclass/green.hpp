#pragma once

// Relative projectivity, vertices, sources and the Green correspondence.

#include <cstdint>
#include <optional>

#include "modclass/perm_group.hpp"
#include "modclass/rep.hpp"

namespace modclass {

struct ProjectivityResult {
  bool projective = false;
  /// phi in End_{KQ}(V) whose relative trace to G is the identity.
  std::optional<Matrix> certificate;
};

/// Higman's criterion: V is Q-projective iff Tr_Q^G(phi) = Id for some
/// phi commuting with Q, where Tr_Q^G(phi) = sum over a right transversal T
/// of rho(t)^-1 phi rho(t). Exact linear feasibility test.
ProjectivityResult test_relatively_projective(const Rep& v, const Subgroup& q);
bool is_relatively_projective(const Rep& v, const Subgroup& q);

/// Vertex of an indecomposable module: the least p-subgroup representative
/// (in the order of p_subgroups_up_to_conjugacy) relative to which it is
/// projective. Throws MathError for decomposable input and ConsistencyError
/// when the minimal relatively projective subgroups are not all conjugate.
Subgroup vertex(const Rep& v, std::uint64_t seed = 0);

/// First component U of Res_Q(V), in decomposition order, with V | Ind_Q^G(U).
Rep source(const Rep& v, const Subgroup& q, std::uint64_t seed = 0);

/// The unique component of Res_H(V) whose vertex is H-conjugate to Q.
/// H must contain N_G(Q). For H = G this is V itself.
Rep green_correspondent(const Rep& v, const Subgroup& q, const Subgroup& h, std::uint64_t seed = 0);

/// Q as a subgroup of H.as_group(), for Q <= H.
Subgroup subgroup_within(const Subgroup& q, const Subgroup& h);

/// U^g for a module U of Q and g in N_G(Q): y acts as g y g^-1 did.
Rep conjugate_module(const Rep& u, const Subgroup& q, int g);

}  // namespace modclass

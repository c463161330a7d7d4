#include "modclass/green.hpp"

#include <algorithm>

#include "modclass/errors.hpp"
#include "modclass/linalg.hpp"
#include "modclass/meataxe.hpp"
#include "modclass/random.hpp"

namespace modclass {

ProjectivityResult test_relatively_projective(const Rep& v, const Subgroup& q) {
  if (!same_group(q.parent(), v.group())) throw MathError("subgroup of a different group");
  const std::size_t d = v.dim();
  const FieldPtr& field = v.field();
  if (d == 0) return {true, Matrix(field, 0, 0)};
  if (q.order() == v.group()->order()) return {true, Matrix::identity(field, d)};

  const Rep res = restrict_subgroup(v, q);
  const HomSpace end = hom_space(res, res);
  const Transversal t = right_transversal(q);
  std::vector<Matrix> rho, rho_inv;
  for (int r : t.reps) {
    rho.push_back(v.element(r));
    rho_inv.push_back(v.element(v.group()->inv(r)));
  }
  Matrix traces(field, end.dim(), d * d);
  for (std::size_t i = 0; i < end.dim(); ++i) {
    Matrix tr(field, d, d);
    for (std::size_t j = 0; j < rho.size(); ++j) tr.add_scaled(rho_inv[j] * end.basis[i] * rho[j], 1);
    std::copy(tr.data().begin(), tr.data().end(), traces.row(i).begin());
  }
  Matrix id(field, 1, d * d);
  for (std::size_t i = 0; i < d; ++i) id(0, i * d + i) = 1;
  const auto c = solve_left(traces, id);
  if (!c) return {false, std::nullopt};
  Matrix phi(field, d, d);
  for (std::size_t i = 0; i < end.dim(); ++i) phi.add_scaled(end.basis[i], (*c)(0, i));
  return {true, std::move(phi)};
}

bool is_relatively_projective(const Rep& v, const Subgroup& q) { return test_relatively_projective(v, q).projective; }

Subgroup vertex(const Rep& v, std::uint64_t seed) {
  if (v.dim() == 0 || !is_indecomposable(v, seed)) {
    throw MathError("vertex needs an indecomposable module; decompose it first");
  }
  const auto p = v.field()->characteristic();
  const auto candidates = p_subgroups_up_to_conjugacy(v.group(), p);
  std::vector<Subgroup> projective;
  for (const auto& q : candidates) {
    if (is_relatively_projective(v, q)) projective.push_back(q);
  }
  if (projective.empty()) throw ConsistencyError("module is not projective relative to a Sylow subgroup");
  const Subgroup& first = projective.front();
  for (std::size_t i = 1; i < projective.size(); ++i) {
    if (!conjugate_into(first, projective[i])) {
      throw ConsistencyError("relatively projective p-subgroups with no common conjugate vertex");
    }
  }
  return first;
}

Rep source(const Rep& v, const Subgroup& q, std::uint64_t seed) {
  Rng rng(seed);
  const Decomposition d = decompose(restrict_subgroup(v, q), rng.next());
  for (const auto& s : d.summands) {
    if (is_component(v, induce(s.module, q), rng.next())) return s.module;
  }
  throw ConsistencyError("no component of the restriction to the vertex induces back to a multiple of V");
}

Subgroup subgroup_within(const Subgroup& q, const Subgroup& h) {
  if (!q.is_subgroup_of(h)) throw MathError("not a subgroup of H");
  std::vector<int> inner;
  for (int x : q.elements()) inner.push_back(h.from_parent(x));
  std::sort(inner.begin(), inner.end());
  return Subgroup(h.as_group(), inner);
}

Rep green_correspondent(const Rep& v, const Subgroup& q, const Subgroup& h, std::uint64_t seed) {
  if (!normalizer(q).is_subgroup_of(h)) throw MathError("H must contain the normalizer of Q");
  if (h.order() == v.group()->order()) return v;
  Rng rng(seed);
  const Subgroup q_in_h = subgroup_within(q, h);
  const Decomposition d = decompose(restrict_subgroup(v, h), rng.next());
  std::optional<Rep> found;
  std::size_t count = 0;
  for (const auto& s : d.summands) {
    const Subgroup vx = vertex(s.module, rng.next());
    if (vx.order() == q.order() && are_conjugate(vx, q_in_h)) {
      count += s.multiplicity;
      found = s.module;
    }
  }
  if (count != 1) throw ConsistencyError("restriction to H has " + std::to_string(count) + " components with vertex Q");
  return *found;
}

Rep conjugate_module(const Rep& u, const Subgroup& q, int g) {
  const auto& parent = *q.parent();
  const Subgroup qg = q.conjugate(g);
  if (!(qg == q)) throw MathError("conjugating element does not normalize Q");
  const auto& own = *q.as_group();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < own.generator_count(); ++k) {
    const int y = q.to_parent(own.generator_element(k));
    const int x = parent.mul(parent.mul(g, y), parent.inv(g));
    gens.push_back(u.element(q.from_parent(x)));
  }
  return {q.as_group(), u.field(), u.dim(), std::move(gens)};
}

}  // namespace modclass

#include "modclass/rep.hpp"

#include <algorithm>

#include "modclass/errors.hpp"
#include "modclass/linalg.hpp"

namespace modclass {

Rep::Rep(GroupPtr group, FieldPtr field, std::size_t dim, std::vector<Matrix> generators)
    : group_(std::move(group)), field_(std::move(field)), dim_(dim), generators_(std::move(generators)) {
  if (generators_.size() != group_->generator_count()) {
    throw MathError("module needs one matrix per group generator");
  }
  for (const auto& m : generators_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw MathError("generator matrix has wrong shape");
    if (m.field() != field_) throw MathError("generator matrix over the wrong field");
    if (rank(m) != dim_) throw MathError("generator matrix is not invertible");
  }
}

Matrix Rep::element(int g) const {
  std::vector<int> word;
  const auto& steps = group_->factorization();
  for (int x = g; steps[static_cast<std::size_t>(x)].parent >= 0; x = steps[static_cast<std::size_t>(x)].parent) {
    word.push_back(steps[static_cast<std::size_t>(x)].gen);
  }
  Matrix m = Matrix::identity(field_, dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = m * generators_[static_cast<std::size_t>(*it)];
  return m;
}

std::vector<Matrix> Rep::element_matrices() const {
  std::vector<Matrix> all(group_->order());
  const auto& steps = group_->factorization();
  for (int x : group_->bfs_order()) {
    const auto& s = steps[static_cast<std::size_t>(x)];
    all[static_cast<std::size_t>(x)] =
        s.parent < 0 ? Matrix::identity(field_, dim_)
                     : all[static_cast<std::size_t>(s.parent)] * generators_[static_cast<std::size_t>(s.gen)];
  }
  return all;
}

void Rep::validate() const {
  const auto all = element_matrices();
  for (int x = 0; x < static_cast<int>(group_->order()); ++x) {
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const int y = group_->mul(x, group_->generator_element(k));
      if (!(all[static_cast<std::size_t>(x)] * generators_[k] == all[static_cast<std::size_t>(y)])) {
        throw MathError("matrices do not satisfy the group relations");
      }
    }
  }
}

bool operator==(const Rep& a, const Rep& b) {
  return same_group(a.group(), b.group()) && a.field() == b.field() && a.dim() == b.dim() &&
         a.generators() == b.generators();
}

Rep trivial_module(const GroupPtr& g, const FieldPtr& k) {
  std::vector<Matrix> gens(g->generator_count(), Matrix::identity(k, 1));
  return {g, k, 1, std::move(gens)};
}

Rep zero_module(const GroupPtr& g, const FieldPtr& k) {
  std::vector<Matrix> gens(g->generator_count(), Matrix(k, 0, 0));
  return {g, k, 0, std::move(gens)};
}

Rep regular_module(const GroupPtr& g, const FieldPtr& k) {
  const std::size_t n = g->order();
  std::vector<Matrix> gens;
  for (std::size_t s = 0; s < g->generator_count(); ++s) {
    Matrix m(k, n, n);
    for (int x = 0; x < static_cast<int>(n); ++x) {
      m(static_cast<std::size_t>(x), static_cast<std::size_t>(g->mul(x, g->generator_element(s)))) = 1;
    }
    gens.push_back(std::move(m));
  }
  return {g, k, n, std::move(gens)};
}

Rep permutation_module(const GroupPtr& g, const FieldPtr& k) {
  const std::size_t n = g->degree();
  std::vector<Matrix> gens;
  for (const auto& perm : g->generators()) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, perm[i]) = 1;
    gens.push_back(std::move(m));
  }
  return {g, k, n, std::move(gens)};
}

Rep extend_scalars(const Rep& v, const FieldPtr& larger) {
  const FieldEmbedding e = embed(v.field(), larger);
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) gens.push_back(m.map(larger, [&](Elem x) { return e(x); }));
  return {v.group(), larger, v.dim(), std::move(gens)};
}

Rep restrict_scalars(const Rep& v, const FieldPtr& smaller) {
  const FieldEmbedding e = embed(smaller, v.field());
  const auto& big = *v.field();
  const std::size_t d = e.relative_degree();
  const auto& basis = e.relative_basis();
  const std::size_t n = v.dim() * d;
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) {
    Matrix r(smaller, n, n);
    for (std::size_t i = 0; i < v.dim(); ++i) {
      for (std::size_t j = 0; j < v.dim(); ++j) {
        const Elem a = m(i, j);
        if (a == 0) continue;
        // (c basis[k]) a has coordinates c * coords(basis[k] a)
        for (std::size_t k = 0; k < d; ++k) {
          const auto coords = e.coordinates(big.mul(basis[k], a));
          for (std::size_t l = 0; l < d; ++l) r(i * d + k, j * d + l) = coords[l];
        }
      }
    }
    gens.push_back(std::move(r));
  }
  return {v.group(), smaller, n, std::move(gens)};
}

Rep restrict_subgroup(const Rep& v, const Subgroup& h) {
  if (!same_group(h.parent(), v.group())) throw MathError("not a subgroup of the module's group");
  const auto& hg = *h.as_group();
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < hg.generator_count(); ++k) {
    gens.push_back(v.element(h.to_parent(hg.generator_element(k))));
  }
  return {h.as_group(), v.field(), v.dim(), std::move(gens)};
}

Rep induce(const Rep& v, const Subgroup& h) {
  if (!same_group(v.group(), h.as_group())) throw MathError("module is not a module for this subgroup");
  const auto& g = *h.parent();
  const Transversal t = right_transversal(h);
  const std::size_t index = t.reps.size();
  const std::size_t d = v.dim();
  const auto sub_elements = v.element_matrices();
  std::vector<Matrix> gens;
  for (std::size_t s = 0; s < g.generator_count(); ++s) {
    const int gen = g.generator_element(s);
    Matrix m(v.field(), index * d, index * d);
    for (std::size_t i = 0; i < index; ++i) {
      // t_i g = h t_j
      const int tg = g.mul(t.reps[i], gen);
      const auto j = static_cast<std::size_t>(t.coset_of[static_cast<std::size_t>(tg)]);
      const int hh = g.mul(tg, g.inv(t.reps[j]));
      const Matrix& block = sub_elements[static_cast<std::size_t>(h.from_parent(hh))];
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) m(i * d + a, j * d + b) = block(a, b);
      }
    }
    gens.push_back(std::move(m));
  }
  return {h.parent(), v.field(), index * d, std::move(gens)};
}

Rep frobenius_twist(const Rep& v, const FieldAutomorphism& sigma) {
  if (sigma.field() != v.field()) throw MathError("automorphism of a different field");
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) gens.push_back(m.map(v.field(), [&](Elem x) { return sigma(x); }));
  return {v.group(), v.field(), v.dim(), std::move(gens)};
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!same_group(a.group(), b.group()) || a.field() != b.field()) throw MathError("direct sum of unrelated modules");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> gens;
  for (std::size_t s = 0; s < a.generators().size(); ++s) {
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.generator(s)(i, j);
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
      for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b.generator(s)(i, j);
    }
    gens.push_back(std::move(m));
  }
  return {a.group(), a.field(), n, std::move(gens)};
}

Rep change_basis(const Rep& v, const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw MathError("basis change matrix is singular");
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) gens.push_back(basis * m * *inv);
  return {v.group(), v.field(), v.dim(), std::move(gens)};
}

Rep sub_representation(const Rep& v, const Matrix& basis) {
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) gens.push_back(coordinates_in(basis, basis * m));
  return {v.group(), v.field(), basis.rows(), std::move(gens)};
}

Rep quotient_representation(const Rep& v, const Matrix& basis) {
  const Echelon e = rref(basis);
  const auto& f = *v.field();
  std::vector<bool> is_pivot(v.dim(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < v.dim(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  std::vector<Matrix> gens;
  for (const auto& m : v.generators()) {
    Matrix q(v.field(), free.size(), free.size());
    for (std::size_t i = 0; i < free.size(); ++i) {
      std::vector<Elem> row(m.row(free[i]).begin(), m.row(free[i]).end());
      for (std::size_t r = 0; r < e.rank(); ++r) {
        const Elem c = row[e.pivots[r]];
        if (c != 0) f.axpy(row, f.neg(c), e.reduced.row(r));
      }
      for (std::size_t j = 0; j < free.size(); ++j) q(i, j) = row[free[j]];
    }
    gens.push_back(std::move(q));
  }
  return {v.group(), v.field(), free.size(), std::move(gens)};
}

Matrix spin(const FieldPtr& field, const std::vector<std::vector<Elem>>& seeds,
           const std::vector<Matrix>& generators) {
  if (seeds.empty()) throw MathError("spin needs at least one seed");
  const std::size_t n = seeds.front().size();
  EchelonBasis basis(field, n);
  std::vector<std::vector<Elem>> queue;
  for (const auto& s : seeds) {
    if (basis.add(s)) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size() && !basis.full(); ++i) {
    for (const auto& g : generators) {
      auto w = g.apply(queue[i]);
      if (basis.add(w)) queue.push_back(std::move(w));
    }
  }
  return basis.matrix();
}

HomSpace hom_space(const Rep& source, const Rep& target) {
  if (!same_group(source.group(), target.group()) || source.field() != target.field()) {
    throw MathError("Hom between modules of different groups or fields");
  }
  HomSpace hs;
  hs.source_dim = source.dim();
  hs.target_dim = target.dim();
  const std::size_t ds = source.dim();
  const std::size_t dt = target.dim();
  if (ds == 0 || dt == 0) return hs;
  const FieldPtr& field = source.field();
  const auto& f = *field;
  const std::size_t ngens = source.generators().size();

  // Spin basis of the source: each vector is a seed or (parent * generator).
  struct Node {
    std::size_t seed;
    std::size_t parent;
    std::size_t gen;
    bool is_seed;
  };
  std::vector<std::vector<Elem>> vecs;
  std::vector<Node> nodes;
  std::vector<std::size_t> seed_nodes;
  std::vector<std::pair<std::size_t, std::size_t>> relations;  // (node, generator) not in the tree
  EchelonBasis span(field, ds);
  for (std::size_t i = 0; i < ds && !span.full(); ++i) {
    std::vector<Elem> e(ds, 0);
    e[i] = 1;
    if (!span.add(e)) continue;
    const std::size_t seed = seed_nodes.size();
    seed_nodes.push_back(vecs.size());
    vecs.push_back(std::move(e));
    nodes.push_back({seed, 0, 0, true});
    for (std::size_t j = vecs.size() - 1; j < vecs.size(); ++j) {
      for (std::size_t g = 0; g < ngens; ++g) {
        auto w = source.generator(g).apply(vecs[j]);
        if (span.add(w)) {
          vecs.push_back(std::move(w));
          nodes.push_back({seed, j, g, false});
        } else {
          relations.emplace_back(j, g);
        }
      }
    }
  }
  const std::size_t r = seed_nodes.size();

  Matrix b(field, ds, ds);
  for (std::size_t j = 0; j < ds; ++j) std::copy(vecs[j].begin(), vecs[j].end(), b.row(j).begin());
  const Matrix binv = *inverse(b);

  // Image of node j is w_{seed(j)} * paths[j].
  std::vector<Matrix> paths(ds);
  for (std::size_t j = 0; j < ds; ++j) {
    paths[j] = nodes[j].is_seed ? Matrix::identity(field, dt)
                                : paths[nodes[j].parent] * target.generator(nodes[j].gen);
  }

  const std::size_t unknowns = r * dt;
  EchelonBasis constraints(field, unknowns);
  for (const auto& [j, g] : relations) {
    if (constraints.full()) break;
    const auto image = source.generator(g).apply(vecs[j]);
    const auto coords = binv.apply(image);
    // C = sum_i coords_i Y_i - Y_j * target(g), Y_i nonzero only in block seed(i)
    Matrix c(field, unknowns, dt);
    for (std::size_t i = 0; i < ds; ++i) {
      if (coords[i] == 0) continue;
      const std::size_t off = nodes[i].seed * dt;
      for (std::size_t a = 0; a < dt; ++a) f.axpy(c.row(off + a), coords[i], paths[i].row(a));
    }
    const Matrix pj = paths[j] * target.generator(g);
    const std::size_t off = nodes[j].seed * dt;
    for (std::size_t a = 0; a < dt; ++a) f.axpy(c.row(off + a), f.neg(1), pj.row(a));
    for (std::size_t col = 0; col < dt && !constraints.full(); ++col) {
      std::vector<Elem> v(unknowns);
      bool nonzero = false;
      for (std::size_t a = 0; a < unknowns; ++a) {
        v[a] = c(a, col);
        nonzero = nonzero || v[a] != 0;
      }
      if (nonzero) constraints.add(std::move(v));
    }
  }

  const Matrix solutions = right_nullspace(constraints.size() == 0 ? Matrix(field, 0, unknowns)
                                                                   : constraints.matrix());
  for (std::size_t s = 0; s < solutions.rows(); ++s) {
    Matrix images(field, ds, dt);
    for (std::size_t j = 0; j < ds; ++j) {
      const std::size_t off = nodes[j].seed * dt;
      std::span<const Elem> w(solutions.row(s).data() + off, dt);
      const auto row = paths[j].apply(w);
      std::copy(row.begin(), row.end(), images.row(j).begin());
    }
    hs.basis.push_back(binv * images);
  }
  return hs;
}

}  // namespace modclass

#include <gtest/gtest.h>

#include "modclass/errors.hpp"
#include "modclass/linalg.hpp"
#include "modclass/meataxe.hpp"
#include "modclass/rep.hpp"
#include "support.hpp"

using namespace modclass;

namespace {

Rep sign_module(const GroupPtr& s3, const FieldPtr& k) {
  // Catalog S3 generators: a transposition, then a 3-cycle.
  Matrix t(k, 1, 1), c(k, 1, 1);
  t(0, 0) = k->neg(1);
  c(0, 0) = 1;
  return Rep(s3, k, 1, {t, c});
}

Rep c7_cubic(const FieldPtr& gf2) { return oracle::cyclic(catalog_group("C7"), oracle::companion(gf2, {1, 1, 0})); }

void expect_intertwiners(const HomSpace& h, const Rep& a, const Rep& b) {
  for (const auto& m : h.basis) {
    ASSERT_EQ(m.rows(), a.dim());
    ASSERT_EQ(m.cols(), b.dim());
    for (std::size_t k = 0; k < a.generators().size(); ++k) {
      EXPECT_EQ(oracle::mul(a.generator(k), m), oracle::mul(m, b.generator(k)));
    }
  }
}

}  // namespace

TEST(Rep, TrivialModule) {
  auto gf2 = make_field(2, 1);
  for (const char* name : {"S3", "C7"}) {
    const Rep t = trivial_module(catalog_group(name), gf2);
    EXPECT_EQ(t.dim(), 1u);
    for (const auto& m : t.generators()) EXPECT_TRUE(m.is_identity());
    EXPECT_EQ(hom_space(t, t).dim(), 1u);
  }
}

TEST(Rep, RegularModule) {
  const Rep r = regular_module(catalog_group("C3"), make_field(2, 1));
  EXPECT_EQ(r.dim(), 3u);
  auto s3 = catalog_group("S3");
  const Rep r6 = regular_module(s3, make_field(3, 1));
  EXPECT_EQ(r6.dim(), 6u);
  r6.validate();
  const auto mats = r6.element_matrices();
  for (int g = 1; g < 6; ++g) {
    Elem tr = 0;
    for (std::size_t i = 0; i < 6; ++i) tr = r6.field()->add(tr, mats[static_cast<std::size_t>(g)](i, i));
    EXPECT_EQ(tr, 0u);
  }
}

TEST(Rep, ValidateCatchesBrokenRelations) {
  auto gf3 = make_field(3, 1);
  Matrix two(gf3, 1, 1);
  two(0, 0) = 2;
  // A 7-cycle cannot act by an element of order 2.
  const Rep bad(catalog_group("C7"), gf3, 1, {two});
  EXPECT_THROW(bad.validate(), MathError);
  Matrix singular(gf3, 1, 1);
  EXPECT_THROW(Rep(catalog_group("C7"), gf3, 1, {singular}), MathError);
}

TEST(Rep, ExtendScalars) {
  auto s3 = catalog_group("S3");
  const Rep t4 = extend_scalars(trivial_module(s3, make_field(2, 1)), make_field(2, 2));
  EXPECT_EQ(t4, trivial_module(s3, make_field(2, 2)));
  EXPECT_THROW(extend_scalars(trivial_module(s3, make_field(2, 2)), make_field(2, 3)), MathError);
  Rng rng(1);
  const Rep v = oracle::random_module(s3, make_field(2, 1), rng);
  EXPECT_EQ(extend_scalars(v, make_field(2, 4)).dim(), v.dim());
}

TEST(Rep, RestrictScalars) {
  auto s3 = catalog_group("S3");
  auto gf2 = make_field(2, 1), gf4 = make_field(2, 2);
  const Rep r = restrict_scalars(trivial_module(s3, gf4), gf2);
  EXPECT_EQ(r.dim(), 2u);
  r.validate();
  // Res(W (x) K) is two copies of the trivial module: the action is the identity.
  for (const auto& m : r.generators()) EXPECT_TRUE(m.is_identity());
  EXPECT_THROW(restrict_scalars(trivial_module(s3, gf4), make_field(3, 1)), MathError);
}

TEST(Rep, RestrictScalarsOfSeventhRootIsTheCubicSimple) {
  auto gf2 = make_field(2, 1), gf8 = make_field(2, 3);
  auto c7 = catalog_group("C7");
  Matrix z(gf8, 1, 1);
  z(0, 0) = gf8->primitive();  // order 7
  const Rep r = restrict_scalars(Rep(c7, gf8, 1, {z}), gf2);
  ASSERT_EQ(r.dim(), 3u);
  r.validate();
  // Minimal polynomial of the root over GF(2): product of its conjugates.
  const auto& f = *gf8;
  const Elem a = z(0, 0), b = f.mul(a, a), c = f.mul(b, b);
  const Elem s1 = f.add(f.add(a, b), c);
  const Elem s2 = f.add(f.add(f.mul(a, b), f.mul(a, c)), f.mul(b, c));
  const Elem s3 = f.mul(f.mul(a, b), c);
  ASSERT_LT(s1, 2u);
  ASSERT_LT(s2, 2u);
  ASSERT_LT(s3, 2u);
  const Rep comp = oracle::cyclic(c7, oracle::companion(gf2, {s3, s2, s1}));
  EXPECT_EQ(oracle::hom_dim(r, comp), 3u);  // nonzero Hom between simples of the same dim
  EXPECT_TRUE(is_simple(r));
}

TEST(Rep, RestrictToSubgroups) {
  auto s3 = catalog_group("S3");
  auto gf2 = make_field(2, 1);
  Rng rng(2);
  const Rep v = oracle::random_module(s3, gf2, rng);
  const Rep triv = restrict_subgroup(v, Subgroup::trivial(s3));
  EXPECT_EQ(triv.dim(), v.dim());
  for (const auto& m : triv.element_matrices()) EXPECT_TRUE(m.is_identity());
  const Subgroup whole = Subgroup::whole(s3);
  const Rep same = restrict_subgroup(v, whole);
  for (int x = 0; x < 6; ++x) EXPECT_EQ(same.element(whole.from_parent(x)), v.element(x));

  const Subgroup c2 = p_subgroups_up_to_conjugacy(s3, 2).back();
  const Rep res = restrict_subgroup(regular_module(s3, gf2), c2);
  res.validate();
  const Rep reg_c2 = regular_module(c2.as_group(), gf2);
  // Three free orbits of C2 on six points: End of 3 copies of KC2 has dim 9 * 2.
  EXPECT_EQ(oracle::hom_dim(res, res), 18u);
  EXPECT_EQ(oracle::hom_dim(reg_c2, res), 6u);
  const Decomposition d = decompose(res);
  ASSERT_EQ(d.summands.size(), 1u);
  EXPECT_EQ(d.summands[0].multiplicity, 3u);
  EXPECT_TRUE(is_isomorphic(d.summands[0].module, reg_c2));
}

TEST(Rep, Induction) {
  auto s3 = catalog_group("S3");
  auto gf2 = make_field(2, 1);
  Rng rng(3);
  const Rep v = oracle::random_module(s3, gf2, rng, 6);
  const Subgroup whole = Subgroup::whole(s3);
  const Rep ind_whole = induce(restrict_subgroup(v, whole), whole);
  EXPECT_TRUE(is_isomorphic(ind_whole, v));

  for (const auto& q : p_subgroups_up_to_conjugacy(s3, 3)) {
    const Rep w = trivial_module(q.as_group(), gf2);
    EXPECT_EQ(induce(w, q).dim(), 6 / q.order());
  }

  const Subgroup c2 = p_subgroups_up_to_conjugacy(s3, 2).back();
  const Rep ind = induce(trivial_module(c2.as_group(), gf2), c2);
  ind.validate();
  ASSERT_EQ(ind.dim(), 3u);
  for (const auto& m : ind.generators()) {
    // A permutation matrix: one 1 per row and column.
    for (std::size_t i = 0; i < 3; ++i) {
      int row = 0, col = 0;
      for (std::size_t j = 0; j < 3; ++j) {
        row += m(i, j) != 0;
        col += m(j, i) != 0;
      }
      EXPECT_EQ(row, 1);
      EXPECT_EQ(col, 1);
    }
  }
  const Rep perm = permutation_module(s3, gf2);
  const HomSpace h = hom_space(ind, perm);
  EXPECT_EQ(h.dim(), oracle::hom_dim(ind, perm));
  EXPECT_TRUE(oracle::has_invertible(h.basis));
}

TEST(Rep, FrobeniusTwist) {
  auto gf4 = make_field(2, 2);
  auto c3 = catalog_group("C3");
  Matrix w(gf4, 1, 1);
  w(0, 0) = gf4->generator();
  const Rep omega(c3, gf4, 1, {w});
  omega.validate();
  EXPECT_EQ(frobenius_twist(omega, FieldAutomorphism(gf4, 0)), omega);
  const Rep twisted = frobenius_twist(omega, FieldAutomorphism(gf4, 1));
  EXPECT_EQ(twisted.generator(0)(0, 0), gf4->mul(w(0, 0), w(0, 0)));
  EXPECT_EQ(oracle::hom_dim(omega, twisted), 0u);
  const Rep prime = extend_scalars(regular_module(c3, make_field(2, 1)), gf4);
  EXPECT_EQ(frobenius_twist(prime, FieldAutomorphism(gf4, 1)), prime);
  EXPECT_THROW(frobenius_twist(omega, FieldAutomorphism(make_field(2, 3), 1)), MathError);
}

TEST(Rep, HomSpaceExamples) {
  auto s3 = catalog_group("S3");
  auto gf3 = make_field(3, 1);
  EXPECT_EQ(hom_space(trivial_module(s3, gf3), sign_module(s3, gf3)).dim(), 0u);
  sign_module(s3, gf3).validate();
  const Rep w = c7_cubic(make_field(2, 1));
  w.validate();
  const HomSpace end = hom_space(w, w);
  EXPECT_EQ(end.dim(), 3u);
  expect_intertwiners(end, w, w);
}

TEST(Rep, HomSpaceMatchesKroneckerSystem) {
  Rng rng(4);
  for (const char* name : {"S3", "C3", "A4", "D8"}) {
    auto g = catalog_group(name);
    for (auto [p, n] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}}) {
      auto k = make_field(p, n);
      for (int t = 0; t < 3; ++t) {
        const Rep a = oracle::random_module(g, k, rng, 12), b = oracle::random_module(g, k, rng, 12);
        const HomSpace h = hom_space(a, b);
        EXPECT_EQ(h.dim(), oracle::hom_dim(a, b)) << name << " GF(" << p << "^" << n << ")";
        expect_intertwiners(h, a, b);
        std::vector<std::vector<Elem>> flat;
        for (const auto& m : h.basis) flat.push_back(m.data());
        if (!flat.empty()) EXPECT_EQ(oracle::rank(k, flat), h.dim());
      }
    }
  }
}

TEST(Rep, DirectSums) {
  auto gf2 = make_field(2, 1);
  auto c7 = catalog_group("C7");
  const Rep w = c7_cubic(gf2);
  EXPECT_EQ(direct_sum(w, zero_module(c7, gf2)), w);
  const Rep r = regular_module(c7, gf2);
  EXPECT_EQ(direct_sum(w, r).dim(), 10u);
  EXPECT_EQ(hom_space(direct_sum(w, w), direct_sum(w, w)).dim(), 4 * 3u);
}

TEST(Rep, SubAndQuotient) {
  auto c3 = catalog_group("C3");
  auto gf2 = make_field(2, 1);
  const Rep reg = regular_module(c3, gf2);
  Matrix ones(gf2, 1, 3);
  for (std::size_t j = 0; j < 3; ++j) ones(0, j) = 1;
  const Rep fixed = sub_representation(reg, ones);
  EXPECT_EQ(fixed, trivial_module(c3, gf2));
  const Rep q = quotient_representation(reg, ones);
  EXPECT_EQ(q.dim(), 2u);
  q.validate();
  EXPECT_EQ(hom_space(q, q).dim(), 2u);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modclass/errors.hpp"
#include "modclass/linalg.hpp"
#include "modclass/meataxe.hpp"
#include "support.hpp"

using namespace modclass;

namespace {

Rep c3_two_dim(const FieldPtr& gf2) { return oracle::cyclic(catalog_group("C3"), oracle::companion(gf2, {1, 1})); }
Rep c7_cubic(const FieldPtr& gf2) { return oracle::cyclic(catalog_group("C7"), oracle::companion(gf2, {1, 1, 0})); }
Rep c7_other_cubic(const FieldPtr& gf2) {
  return oracle::cyclic(catalog_group("C7"), oracle::companion(gf2, {1, 0, 1}));
}

std::vector<std::size_t> dims(const std::vector<Rep>& v) {
  std::vector<std::size_t> d;
  for (const auto& r : v) d.push_back(r.dim());
  std::sort(d.begin(), d.end());
  return d;
}

bool invariant(const Rep& v, const Matrix& basis) {
  for (const auto& g : v.generators()) {
    if (oracle::rank(basis.stacked(basis * g)) != oracle::rank(basis)) return false;
  }
  return true;
}

// Isomorphism types as (dim, multiplicity) with an explicit pairing check
// between two decompositions.
bool same_types(const Decomposition& a, const Decomposition& b) {
  if (a.summands.size() != b.summands.size()) return false;
  std::vector<bool> used(b.summands.size(), false);
  for (const auto& s : a.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < b.summands.size() && !matched; ++j) {
      if (used[j] || b.summands[j].multiplicity != s.multiplicity) continue;
      if (is_isomorphic(s.module, b.summands[j].module)) used[j] = matched = true;
    }
    if (!matched) return false;
  }
  return true;
}

void expect_valid_decomposition(const Rep& v, const Decomposition& d) {
  std::size_t total = 0;
  for (const auto& s : d.summands) total += s.multiplicity * s.module.dim();
  ASSERT_EQ(total, v.dim());
  ASSERT_EQ(oracle::rank(d.basis_change), v.dim());
  const Matrix inv = *inverse(d.basis_change);
  for (std::size_t k = 0; k < v.generators().size(); ++k) {
    const Matrix conj = oracle::mul(oracle::mul(d.basis_change, v.generator(k)), inv);
    std::size_t offset = 0;
    for (const auto& s : d.summands) {
      for (std::size_t c = 0; c < s.multiplicity; ++c) {
        for (std::size_t i = 0; i < v.dim(); ++i) {
          for (std::size_t j = 0; j < v.dim(); ++j) {
            const bool in_rows = i >= offset && i < offset + s.module.dim();
            const bool in_cols = j >= offset && j < offset + s.module.dim();
            if (in_rows && in_cols) {
              ASSERT_EQ(conj(i, j), s.module.generator(k)(i - offset, j - offset));
            } else if (in_rows || in_cols) {
              ASSERT_EQ(conj(i, j), 0u);
            }
          }
        }
        offset += s.module.dim();
      }
    }
  }
  for (const auto& s : d.summands) {
    const HomSpace end = hom_space(s.module, s.module);
    if (std::pow(s.module.field()->order(), end.dim()) <= 4096) {
      EXPECT_FALSE(oracle::has_nontrivial_idempotent(end.basis));
    }
  }
}

}  // namespace

TEST(Meataxe, SimplicityExamples) {
  auto gf2 = make_field(2, 1);
  EXPECT_TRUE(is_simple(trivial_module(catalog_group("S3"), gf2)));
  const Rep reg = regular_module(catalog_group("C3"), gf2);
  const auto r = test_simple(reg);
  ASSERT_FALSE(r.simple);
  ASSERT_TRUE(r.submodule.has_value());
  EXPECT_TRUE(r.submodule->rows() == 1 || r.submodule->rows() == 2);
  EXPECT_TRUE(invariant(reg, *r.submodule));
  // The all-ones vector is fixed, so the regular module is not simple.
  Matrix ones(gf2, 1, 3);
  for (std::size_t j = 0; j < 3; ++j) ones(0, j) = 1;
  EXPECT_EQ(ones * reg.generator(0), ones);
  EXPECT_TRUE(is_simple(c7_cubic(gf2)));
  EXPECT_THROW(is_simple(zero_module(catalog_group("C3"), gf2)), MathError);
}

TEST(Meataxe, SimplicityAnswerIsSeedIndependent) {
  Rng rng(5);
  for (const char* name : {"S3", "A4", "D8", "Q8"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1), make_field(2, 2)}) {
      const Rep v = oracle::random_module(g, k, rng, 12);
      const bool first = is_simple(v, 0);
      for (std::uint64_t seed = 1; seed < 6; ++seed) EXPECT_EQ(is_simple(v, seed), first);
    }
  }
}

TEST(Meataxe, CompositionFactorExamples) {
  auto gf2 = make_field(2, 1);
  EXPECT_EQ(dims(composition_factors(regular_module(catalog_group("C3"), gf2))), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(dims(composition_factors(regular_module(catalog_group("C7"), gf2))),
            (std::vector<std::size_t>{1, 3, 3}));
  const auto single = composition_factors(c7_cubic(gf2));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0], c7_cubic(gf2));
}

TEST(Meataxe, IsomorphismExamples) {
  auto gf2 = make_field(2, 1), gf3 = make_field(3, 1);
  auto s3 = catalog_group("S3");
  const Rep w = c7_cubic(gf2);
  EXPECT_TRUE(is_isomorphic(w, w));
  Matrix t(gf3, 1, 1), c(gf3, 1, 1);
  t(0, 0) = 2;
  c(0, 0) = 1;
  EXPECT_FALSE(is_isomorphic(trivial_module(s3, gf3), Rep(s3, gf3, 1, {t, c})));
  EXPECT_FALSE(is_isomorphic(w, c7_other_cubic(gf2)));
  EXPECT_EQ(oracle::hom_dim(w, c7_other_cubic(gf2)), 0u);
  EXPECT_FALSE(is_isomorphic(w, regular_module(catalog_group("C7"), gf2)));
}

TEST(Meataxe, IsomorphismCertificatesAndOracle) {
  Rng rng(6);
  for (const char* name : {"S3", "C3", "D8", "A4"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      for (int t = 0; t < 4; ++t) {
        const Rep a = oracle::random_module(g, k, rng, 8);
        const Rep b = change_basis(a, oracle::random_invertible(k, a.dim(), rng));
        const auto r = test_isomorphic(a, b, t);
        ASSERT_TRUE(r.isomorphic);
        EXPECT_EQ(oracle::rank(*r.intertwiner), a.dim());
        for (std::size_t s = 0; s < a.generators().size(); ++s) {
          EXPECT_EQ(oracle::mul(a.generator(s), *r.intertwiner), oracle::mul(*r.intertwiner, b.generator(s)));
        }
        const Rep c = oracle::random_module(g, k, rng, 8);
        if (c.dim() != a.dim()) continue;
        const HomSpace h = hom_space(a, c);
        if (std::pow(k->order(), h.dim()) <= 4096) {
          EXPECT_EQ(is_isomorphic(a, c, t), oracle::has_invertible(h.basis)) << name;
        }
      }
    }
  }
}

TEST(Meataxe, IndecomposabilityExamples) {
  auto gf2 = make_field(2, 1);
  EXPECT_TRUE(is_indecomposable(c7_cubic(gf2)));
  EXPECT_TRUE(is_indecomposable(regular_module(catalog_group("C2"), gf2)));
  EXPECT_FALSE(is_indecomposable(direct_sum(c7_cubic(gf2), c7_cubic(gf2))));
  EXPECT_THROW(is_indecomposable(zero_module(catalog_group("C2"), gf2)), MathError);
}

TEST(Meataxe, IndecomposabilityMatchesIdempotentSearch) {
  Rng rng(7);
  int checked = 0;
  for (const char* name : {"S3", "C3", "D8", "A4", "Q8", "C7"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      for (int t = 0; t < 4; ++t) {
        const Rep v = oracle::random_module(g, k, rng, 10);
        const HomSpace end = hom_space(v, v);
        if (std::pow(k->order(), end.dim()) > 4096) continue;
        ++checked;
        EXPECT_EQ(is_indecomposable(v, t), !oracle::has_nontrivial_idempotent(end.basis)) << name;
      }
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(Meataxe, AbsoluteProperties) {
  auto gf2 = make_field(2, 1), gf4 = make_field(2, 2);
  const Rep triv = trivial_module(catalog_group("C3"), gf2);
  EXPECT_TRUE(is_absolutely_simple(triv));
  EXPECT_TRUE(is_absolutely_indecomposable(triv));
  EXPECT_FALSE(is_absolutely_simple(c3_two_dim(gf2)));
  EXPECT_FALSE(is_absolutely_indecomposable(c3_two_dim(gf2)));
  EXPECT_EQ(residue_degree(c3_two_dim(gf2)), 2u);
  Matrix w(gf4, 1, 1);
  w(0, 0) = gf4->generator();
  EXPECT_TRUE(is_absolutely_simple(Rep(catalog_group("C3"), gf4, 1, {w})));
  const Rep reg_c2 = regular_module(catalog_group("C2"), gf2);
  EXPECT_TRUE(is_absolutely_indecomposable(reg_c2));
  EXPECT_EQ(residue_degree(reg_c2), 1u);
  EXPECT_FALSE(is_simple(reg_c2));
}

TEST(Meataxe, DecompositionExamples) {
  auto gf2 = make_field(2, 1), gf4 = make_field(2, 2), gf8 = make_field(2, 3);
  const Rep w = c7_cubic(gf2);
  const Decomposition dw = decompose(w);
  ASSERT_EQ(dw.summands.size(), 1u);
  EXPECT_EQ(dw.summands[0].multiplicity, 1u);

  const Rep ext = extend_scalars(c3_two_dim(gf2), gf4);
  const Decomposition d = decompose(ext);
  expect_valid_decomposition(ext, d);
  ASSERT_EQ(d.summands.size(), 2u);
  EXPECT_EQ(d.summands[0].module.dim(), 1u);
  EXPECT_EQ(d.summands[1].module.dim(), 1u);
  EXPECT_FALSE(is_isomorphic(d.summands[0].module, d.summands[1].module));

  const Rep ext8 = extend_scalars(w, gf8);
  const Decomposition d8 = decompose(ext8);
  expect_valid_decomposition(ext8, d8);
  ASSERT_EQ(d8.summands.size(), 3u);
  // One Frobenius orbit: twisting the first summand reaches each of the others.
  const Rep& first = d8.summands[0].module;
  for (const auto& s : d8.summands) {
    EXPECT_EQ(s.multiplicity, 1u);
    bool reached = false;
    for (const auto& sigma : automorphisms(gf8)) reached = reached || is_isomorphic(frobenius_twist(first, sigma), s.module);
    EXPECT_TRUE(reached);
  }
}

TEST(Meataxe, DecompositionsAreValidOnRandomModules) {
  Rng rng(8);
  for (const char* name : {"S3", "D8", "A4", "Q8"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1), make_field(2, 2)}) {
      const Rep v = oracle::random_module(g, k, rng, 14);
      expect_valid_decomposition(v, decompose(v, 3));
    }
  }
}

TEST(Meataxe, KrullSchmidtDeterminism) {
  Rng rng(9);
  for (const char* name : {"S3", "A4", "D8"}) {
    auto g = catalog_group(name);
    const Rep v = oracle::random_module(g, make_field(2, 1), rng, 12);
    const Decomposition base = decompose(v, 0);
    for (std::uint64_t seed = 1; seed < 10; ++seed) {
      const Decomposition d = decompose(v, seed);
      EXPECT_TRUE(same_types(base, d)) << name << " seed " << seed;
      // Canonical forms make the summand list itself reproducible.
      ASSERT_EQ(d.summands.size(), base.summands.size());
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        EXPECT_EQ(d.summands[i].module.dim(), base.summands[i].module.dim());
      }
    }
  }
}

TEST(Meataxe, CanonicalFormIsBasisIndependent) {
  Rng rng(10);
  for (const char* name : {"S3", "A4", "C7", "Q8"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      for (const auto& s : simple_modules(g, k).modules) {
        const CanonicalForm a = canonical_form(s);
        const CanonicalForm b = canonical_form(change_basis(s, oracle::random_invertible(k, s.dim(), rng)), 5);
        EXPECT_TRUE(a.exact);
        EXPECT_EQ(a.module, b.module);
        EXPECT_EQ(change_basis(s, a.basis), a.module);
      }
    }
  }
}

TEST(Meataxe, SimpleModuleExamples) {
  auto gf2 = make_field(2, 1), gf3 = make_field(3, 1);
  const auto c7 = simple_modules(catalog_group("C7"), gf2);
  EXPECT_EQ(dims(c7.modules), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_EQ(c7.end_degrees, (std::vector<std::size_t>{1, 3, 3}));
  const auto s3_3 = simple_modules(catalog_group("S3"), gf3);
  EXPECT_EQ(dims(s3_3.modules), (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(s3_3.end_degrees, (std::vector<std::size_t>{1, 1}));
  const auto s3_2 = simple_modules(catalog_group("S3"), gf2);
  EXPECT_EQ(dims(s3_2.modules), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(s3_2.end_degrees, (std::vector<std::size_t>{1, 1}));
}

TEST(Meataxe, SimpleSetIsCompleteAndReproducible) {
  Rng rng(11);
  for (const char* name : {"S3", "A4", "D8", "Q8", "C7"}) {
    auto g = catalog_group(name);
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      const SimpleSet set = simple_modules(g, k, 0);
      const SimpleSet again = simple_modules(g, k, 17);
      EXPECT_EQ(set.modules, again.modules);
      for (std::size_t i = 0; i < set.modules.size(); ++i) {
        EXPECT_TRUE(is_simple(set.modules[i]));
        EXPECT_EQ(set.end_degrees[i], oracle::hom_dim(set.modules[i], set.modules[i]));
        for (std::size_t j = i + 1; j < set.modules.size(); ++j) {
          EXPECT_EQ(oracle::hom_dim(set.modules[i], set.modules[j]), 0u);
        }
      }
      for (int t = 0; t < 5; ++t) {
        const Rep v = oracle::random_module(g, k, rng, 14);
        for (const auto& f : composition_factors(v, t)) {
          std::size_t hits = 0;
          for (const auto& s : set.modules) hits += is_isomorphic(f, s);
          EXPECT_EQ(hits, 1u);
        }
      }
    }
  }
}

TEST(Meataxe, EndomorphismRingsOfSimplesCommute) {
  for (const char* name : {"S3", "A4", "C7", "Q8", "C3"}) {
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      for (const auto& s : simple_modules(catalog_group(name), k).modules) {
        const HomSpace end = hom_space(s, s);
        for (const auto& a : end.basis)
          for (const auto& b : end.basis) EXPECT_EQ(oracle::mul(a, b), oracle::mul(b, a));
      }
    }
  }
}

TEST(Meataxe, ExtensionSplitsIntoGcdManySimples) {
  auto check = [](const Rep& w, std::size_t m) {
    const auto p = w.field()->characteristic();
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const Decomposition d = decompose(extend_scalars(w, make_field(p, n)));
      EXPECT_EQ(d.summands.size(), std::gcd<std::size_t>(m, n)) << "n=" << n;
      std::vector<std::size_t> ends;
      for (const auto& s : d.summands) {
        EXPECT_EQ(s.multiplicity, 1u);
        EXPECT_TRUE(is_simple(s.module));
        ends.push_back(end_degree(s.module));
      }
      EXPECT_TRUE(std::all_of(ends.begin(), ends.end(), [&](std::size_t e) { return e == ends.front(); }));
      EXPECT_EQ(ends.front(), m / std::gcd<std::size_t>(m, n));
    }
  };
  for (const char* name : {"C7", "C3", "A4", "S3", "Q8"}) {
    for (auto k : {make_field(2, 1), make_field(3, 1)}) {
      const auto set = simple_modules(catalog_group(name), k);
      for (std::size_t i = 0; i < set.modules.size(); ++i) check(set.modules[i], set.end_degrees[i]);
    }
  }
}

TEST(Meataxe, ComponentTest) {
  auto gf2 = make_field(2, 1);
  auto c7 = catalog_group("C7");
  const Rep reg = regular_module(c7, gf2);
  EXPECT_TRUE(is_component(c7_cubic(gf2), reg));
  EXPECT_TRUE(is_component(trivial_module(c7, gf2), reg));
  const Rep reg_c2 = regular_module(catalog_group("C2"), gf2);
  EXPECT_FALSE(is_component(trivial_module(catalog_group("C2"), gf2), reg_c2));
  EXPECT_TRUE(is_component(reg_c2, direct_sum(reg_c2, trivial_module(catalog_group("C2"), gf2))));
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "modclass/errors.hpp"
#include "modclass/finite_field.hpp"
#include "support.hpp"

using namespace modclass;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {7, 2}};

}  // namespace

TEST(FiniteField, PrimeFieldOverTwoHasPolynomialX) {
  auto f = make_field(2, 1);
  EXPECT_EQ(f->order(), 2u);
  EXPECT_EQ(f->min_poly(), (std::vector<std::uint32_t>{0, 1}));
}

TEST(FiniteField, EightElementFieldUsesXCubedPlusXPlusOne) {
  EXPECT_EQ(make_field(2, 3)->min_poly(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
}

TEST(FiniteField, NineElementFieldUsesXSquaredPlusOne) {
  EXPECT_EQ(make_field(3, 2)->min_poly(), (std::vector<std::uint32_t>{1, 0, 1}));
}

TEST(FiniteField, DefiningPolynomialIsLeastIrreducible) {
  // Enumerate monic polynomials of degree n in the ordering "top coefficient
  // below the leading one first" and take the first irreducible one.
  for (auto [p, n] : kFields) {
    if (n == 1) continue;
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < n; ++i) count *= p;
    std::vector<std::uint32_t> expected;
    for (std::uint64_t idx = 0; idx < count && expected.empty(); ++idx) {
      std::vector<std::uint32_t> poly(n + 1, 0);
      poly[n] = 1;
      std::uint64_t r = idx;
      for (std::uint32_t i = 0; i < n; ++i) {
        poly[i] = static_cast<std::uint32_t>(r % p);  // constant term varies fastest
        r /= p;
      }
      if (oracle::irreducible_mod_p(poly, p)) expected = poly;
    }
    EXPECT_EQ(make_field(p, n)->min_poly(), expected) << "GF(" << p << "^" << n << ")";
  }
}

TEST(FiniteField, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 1), MathError);
  EXPECT_THROW(make_field(2, 0), MathError);
  EXPECT_THROW(make_field(1, 3), MathError);
}

TEST(FiniteField, Interned) { EXPECT_EQ(make_field(3, 2), make_field(3, 2)); }

TEST(FiniteField, SmallArithmeticFacts) {
  auto f2 = make_field(2, 1);
  EXPECT_EQ(f2->add(1, 1), 0u);
  auto f4 = make_field(2, 2);
  const Elem x = f4->generator();
  const std::vector<std::uint32_t> x_plus_one{1, 1};
  EXPECT_EQ(f4->mul(x, x), f4->from_coeffs(x_plus_one));
}

TEST(FiniteField, MultiplicationMatchesSchoolbookProduct) {
  for (auto [p, n] : kFields) {
    auto f = make_field(p, n);
    const Elem q = f->order();
    const Elem step = q > 128 ? q / 61 + 1 : 1;
    for (Elem a = 0; a < q; a += step) {
      for (Elem b = 0; b < q; b += step) {
        ASSERT_EQ(f->mul(a, b), oracle::slow_mul(*f, a, b)) << f->name() << " " << a << "*" << b;
      }
    }
  }
}

TEST(FiniteField, AdditionIsCoefficientwise) {
  for (auto [p, n] : kFields) {
    auto f = make_field(p, n);
    std::mt19937 gen(1);
    for (int t = 0; t < 500; ++t) {
      const Elem a = gen() % f->order(), b = gen() % f->order();
      auto ca = f->coeffs(a), cb = f->coeffs(b);
      for (std::uint32_t i = 0; i < n; ++i) ca[i] = (ca[i] + cb[i]) % p;
      ASSERT_EQ(f->add(a, b), f->from_coeffs(ca));
      ASSERT_EQ(f->sub(f->add(a, b), b), a);
    }
  }
}

TEST(FiniteField, InverseAndGroupOrder) {
  for (auto [p, n] : kFields) {
    auto f = make_field(p, n);
    for (Elem a = 1; a < f->order(); ++a) {
      ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
      ASSERT_EQ(f->pow(a, f->order() - 1), 1u);
    }
    EXPECT_EQ(oracle::mult_order(*f, f->primitive()), f->order() - 1u) << f->name();
  }
}

TEST(FiniteField, FieldElementInterface) {
  auto f8 = make_field(2, 3);
  std::mt19937 gen(7);
  for (int t = 0; t < 50; ++t) {
    FieldElement a(f8, 1 + gen() % 7);
    EXPECT_EQ(field_arith(a, field_arith(a, a, FieldOp::inv), FieldOp::mul), FieldElement(f8, 1));
  }
  FieldElement zero(f8, 0);
  EXPECT_THROW(zero.inverse(), MathError);
  FieldElement one(make_field(2, 1), 1);
  EXPECT_EQ(one + one, FieldElement(make_field(2, 1), 0));
}

TEST(FiniteField, EmbeddingOfPrimeField) {
  auto e = embed(make_field(2, 1), make_field(2, 2));
  EXPECT_EQ(e(1), 1u);
  EXPECT_EQ(e(0), 0u);
}

TEST(FiniteField, EmbeddingGeneratorIsRootOfSourcePolynomial) {
  for (auto [p, n] : kFields) {
    for (std::uint32_t m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      auto k = make_field(p, m), l = make_field(p, n);
      auto e = embed(k, l);
      // Evaluate k's min_poly at the image by Horner with brute-force products.
      const Elem r = e.image_of_generator();
      Elem acc = 0;
      const auto& mp = k->min_poly();
      for (std::size_t i = mp.size(); i-- > 0;) acc = l->add(oracle::slow_mul(*l, acc, r), l->from_int(mp[i]));
      EXPECT_EQ(acc, 0u) << k->name() << " -> " << l->name();
    }
  }
}

TEST(FiniteField, EmbeddingIsRingMorphism) {
  for (auto [p, n] : kFields) {
    for (std::uint32_t m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      auto k = make_field(p, m), l = make_field(p, n);
      auto e = embed(k, l);
      std::set<Elem> image;
      for (Elem a = 0; a < k->order(); ++a) {
        image.insert(e(a));
        for (Elem b = 0; b < k->order(); ++b) {
          ASSERT_EQ(e(k->add(a, b)), l->add(e(a), e(b)));
          ASSERT_EQ(e(k->mul(a, b)), l->mul(e(a), e(b)));
        }
      }
      EXPECT_EQ(image.size(), k->order());
    }
  }
}

TEST(FiniteField, EmbeddingsCommuteAlongTowers) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> towers = {
      {2, 1, 2, 4}, {2, 2, 4, 8}, {2, 1, 3, 6}, {2, 2, 6, 12}, {2, 3, 6, 12}, {3, 1, 2, 4}, {5, 1, 2, 4}};
  for (auto [p, m, k, n] : towers) {
    auto fm = make_field(p, m), fk = make_field(p, k), fn = make_field(p, n);
    auto mk = embed(fm, fk), kn = embed(fk, fn), mn = embed(fm, fn);
    for (Elem a = 0; a < fm->order(); ++a) ASSERT_EQ(mn(a), kn(mk(a))) << p << "^" << m << "<" << k << "<" << n;
  }
}

TEST(FiniteField, NonSubfieldEmbeddingFails) {
  EXPECT_THROW(embed(make_field(2, 2), make_field(2, 3)), MathError);
  EXPECT_THROW(embed(make_field(2, 1), make_field(3, 2)), MathError);
}

TEST(FiniteField, RelativeCoordinatesReconstruct) {
  auto k = make_field(2, 2), l = make_field(2, 6);
  auto e = embed(k, l);
  const auto& basis = e.relative_basis();
  ASSERT_EQ(basis.size(), 3u);
  for (Elem x = 0; x < l->order(); ++x) {
    const auto c = e.coordinates(x);
    Elem back = 0;
    for (std::size_t i = 0; i < c.size(); ++i) back = l->add(back, l->mul(e(c[i]), basis[i]));
    ASSERT_EQ(back, x);
  }
}

TEST(FiniteField, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(make_field(2, 1)).size(), 1u);
  EXPECT_EQ(automorphisms(make_field(2, 3)).size(), 3u);
  auto f9 = make_field(3, 2);
  FieldAutomorphism frob(f9, 1);
  for (Elem a = 0; a < 9; ++a) {
    EXPECT_EQ(frob(frob(a)), a);
    EXPECT_EQ(frob(a), oracle::slow_mul(*f9, oracle::slow_mul(*f9, a, a), a));
  }
}

TEST(FiniteField, AutomorphismsFormCyclicGroup) {
  for (auto [p, n] : kFields) {
    auto f = make_field(p, n);
    auto autos = automorphisms(f);
    ASSERT_EQ(autos.size(), n);
    EXPECT_EQ(autos[0].power(), 0u);
    // Distinct as maps, and closed under composition with powers adding mod n.
    std::set<std::vector<Elem>> tables;
    for (const auto& s : autos) {
      std::vector<Elem> t;
      for (Elem a = 0; a < f->order(); ++a) t.push_back(s(a));
      tables.insert(t);
      for (const auto& u : autos) {
        const auto c = s.then(u);
        EXPECT_EQ(c.power(), (s.power() + u.power()) % n);
        for (Elem a = 0; a < f->order(); a += 1 + f->order() / 50) ASSERT_EQ(c(a), u(s(a)));
      }
    }
    EXPECT_EQ(tables.size(), n);
  }
}

TEST(FiniteField, FrobeniusFixesExactlyPrimeField) {
  for (auto [p, n] : kFields) {
    auto f = make_field(p, n);
    std::size_t fixed = 0;
    for (Elem a = 0; a < f->order(); ++a) {
      if (f->frobenius(a, 1) == a) {
        ++fixed;
        EXPECT_LT(a, p);  // packed prime-field elements are 0..p-1
      }
    }
    EXPECT_EQ(fixed, p);
  }
}

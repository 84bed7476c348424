#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hypdiv/json_io.hpp"

namespace hypdiv {
namespace {

using namespace testing;

const GaloisContext& ctx25() {
  static const GaloisContext ctx = make_context(F5(), 2);
  return ctx;
}

bool entries_in_base(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!restrict_to(m(i, j), F5())) return false;
  return true;
}

TEST(Galois, BaseObjectsFixed) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    const Triple t = random_triple(x4p4x2p2(), F5(), rng);
    EXPECT_EQ(galois_image(t, ctx25()), t.embed(ctx25().ambient));
    EXPECT_TRUE(class_rational_mod_conj(t, ctx25()));
    EXPECT_TRUE(class_rational(t, ctx25()));
  }
  const OrthMatrix a = generator(GeneratorKind::reduction, el(F5(), 3));
  EXPECT_EQ(galois_image(a, ctx25()), a.embed(ctx25().ambient));
}

TEST(Galois, Equivariance) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 200; ++i) {
    const Triple t = random_triple(x4p4x2p2(), F25(), rng);
    EXPECT_EQ(gram(galois_image(t, ctx25())), galois_image(gram(t), ctx25()));
    EXPECT_EQ(b_canonical(galois_image(t, ctx25())), galois_image(b_canonical(t), ctx25()));
    EXPECT_EQ(galois_image(galois_image(t, ctx25()), ctx25()), t);
  }
}

TEST(Galois, ForeignFieldRejected) {
  std::mt19937_64 rng(1);
  const Triple t = random_triple(x4p4x2p2(), F25(), rng);
  try {
    galois_image(t, make_context(F5(), 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_in_ambient);
  }
}

TEST(ModConj, MovedRepresentativeKeepsRationalGram) {
  std::mt19937_64 rng(33);
  int moved = 0;
  for (int i = 0; i < 40; ++i) {
    const Triple t = act(random_orthogonal_word(F25(), rng, 4), rank3_f5());
    if (entries_in_base(t.matrix())) continue;
    ++moved;
    EXPECT_TRUE(entries_in_base(gram(t).entries()));
    EXPECT_TRUE(class_rational_mod_conj(t, ctx25()));
    const RationalityVerdict v = class_rationality(t, ctx25());
    EXPECT_TRUE(v.rational);
    ASSERT_TRUE(v.relation.witness.has_value());
    EXPECT_TRUE(maps_onto(*v.relation.witness, t, galois_image(t, ctx25())));
  }
  EXPECT_GT(moved, 0);
}

TEST(ModConj, IrrationalGram) {
  std::mt19937_64 rng(34);
  int found = 0;
  for (int i = 0; i < 40 && found < 5; ++i) {
    const Triple other = random_triple(x4p4x2p2(), F25(), rng);
    if (entries_in_base(gram(other).entries())) continue;
    ++found;
    EXPECT_FALSE(class_rational_mod_conj(other, ctx25()));
    EXPECT_FALSE(class_rational(other, ctx25()));
    EXPECT_EQ(same_class(other, galois_image(other, ctx25()), {1}).kind, ClassKind::distinct);
  }
  EXPECT_GT(found, 0);
}

TEST(Rationality, CriterionAndImplication) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 100; ++i) {
    const Triple t = i % 2 ? random_triple(x4p4x2p2(), F25(), rng)
                           : act(random_orthogonal_word(F25(), rng, 3), random_triple(x4p4x2p2(), F5(), rng));
    const bool mod_conj = class_rational_mod_conj(t, ctx25());
    const ClassRelation r = same_class(t, galois_image(t, ctx25()), {1});
    EXPECT_EQ(mod_conj, r.kind != ClassKind::distinct);
    if (class_rational(t, ctx25())) EXPECT_TRUE(mod_conj);
  }
}

TEST(Rationality, InvariantUnderBaseTransforms) {
  std::mt19937_64 rng(36);
  for (int i = 0; i < 40; ++i) {
    const Triple t = random_triple(x4p4x2p2(), F25(), rng);
    const Triple s = act(random_orthogonal_word(F5(), rng, 4), t);
    EXPECT_EQ(class_rational_mod_conj(s, ctx25()), class_rational_mod_conj(t, ctx25()));
    EXPECT_EQ(class_rational(s, ctx25()), class_rational(t, ctx25()));
  }
}

TEST(Caveat, ZeroBudget) {
  const CaveatReport r = find_caveat_example(x4m1(F5()), ctx25(), 0, 0);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.searched, 0u);
}

TEST(Caveat, FrozenOutcomes) {
  const CaveatReport none = find_caveat_example(x4m1(F5()), ctx25(), 10000, 0);
  EXPECT_FALSE(none.witness.has_value());
  EXPECT_EQ(none.searched, 10000u);
  EXPECT_EQ(none.gram_rational_samples, 6068u);
  EXPECT_EQ(none.violations, 0u);

  const CaveatReport hit = find_caveat_example(x4p4x2p2(), ctx25(), 10000, 0);
  ASSERT_TRUE(hit.witness.has_value());
  EXPECT_EQ(hit.searched, 2u);
  EXPECT_EQ(triple_to_json(*hit.witness).dump(),
            R"({"field":{"p":5,"m":2,"modulus":[2,0,1]},"u":[[3,0],[0,2],[0,0]],"v":[[3,0],[0,0],[2,0]],)"
            R"("w":[[4,0],[0,2],[1,0]]})");
  ASSERT_TRUE(hit.relation.has_value());
  EXPECT_EQ(hit.relation->kind, ClassKind::conjugate_only);
  EXPECT_TRUE(class_rational_mod_conj(*hit.witness, ctx25()));
  EXPECT_FALSE(class_rational(*hit.witness, ctx25()));
}

TEST(Caveat, DeterministicPerSeed) {
  const Curve c = random_sextic(7);
  const GaloisContext ctx = make_context(F7(), 2);
  const CaveatReport a = find_caveat_example(c, ctx, 300, 5), b = find_caveat_example(c, ctx, 300, 5);
  EXPECT_EQ(a.searched, b.searched);
  EXPECT_EQ(a.gram_rational_samples, b.gram_rational_samples);
  EXPECT_EQ(a.witness.has_value(), b.witness.has_value());
  if (a.witness) EXPECT_EQ(*a.witness, *b.witness);
}

}  // namespace
}  // namespace hypdiv

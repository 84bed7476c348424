#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace hypdiv {
namespace {

using namespace testing;

void expect_witnesses(const ClassRelation& r, const Triple& t1, const Triple& t2) {
  if (r.witness) {
    EXPECT_TRUE(r.witness->is_proper());
    EXPECT_TRUE(maps_onto(*r.witness, t1, t2));
  }
  if (r.conjugate_witness) {
    EXPECT_TRUE(r.conjugate_witness->is_proper());
    EXPECT_TRUE(maps_onto(*r.conjugate_witness, t1, conjugate(t2)));
  }
  const bool eq = r.kind == ClassKind::equal || r.kind == ClassKind::equal_and_self_conjugate;
  const bool cj = r.kind == ClassKind::conjugate_only || r.kind == ClassKind::equal_and_self_conjugate;
  EXPECT_EQ(r.witness.has_value(), eq);
  EXPECT_EQ(r.conjugate_witness.has_value(), cj);
}

TEST(Reduction, Examples) {
  const Curve c = x4m1(Q());
  const Triple r = reduction_step(tB(), q(1));
  EXPECT_EQ(r, make_triple(c, poly(Q(), {-2}), poly(Q(), {-1, 0, -1}), poly(Q(), {1, 0, 1})));
  EXPECT_EQ(b_canonical(r), tA());
  EXPECT_EQ(reduction_step(tB(), q(0)), tB());
}

TEST(Swap, Examples) {
  const Curve c = x4m1(Q());
  EXPECT_EQ(swap_step(tB()), make_triple(c, poly(Q(), {-1, 0, -1}), poly(Q(), {-1, 0, 1}), Polynomial(Q())));
  EXPECT_EQ(swap_step(tA()), conjugate(tA()));
  EXPECT_EQ(swap_step(swap_step(tB())), tB());
}

TEST(SameClass, RationalExample) {
  const ClassRelation r = same_class(tA(), tB());
  EXPECT_EQ(r.kind, ClassKind::equal_and_self_conjugate);
  expect_witnesses(r, tA(), tB());
  EXPECT_EQ(same_class(tB(), tA()).kind, ClassKind::equal_and_self_conjugate);
}

TEST(SameClass, RationalOrbits) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const Triple t = random_triple(x4m1(Q()), Q(), rng, 4);
    const OrthMatrix a = random_orthogonal_word(Q(), rng, 4);
    const Triple s = act(a, t);
    const ClassRelation r = same_class(t, s);
    EXPECT_NE(r.kind, ClassKind::distinct);
    EXPECT_NE(r.kind, ClassKind::conjugate_only);
    expect_witnesses(r, t, s);
  }
}

TEST(SameClass, CurveMismatch) {
  std::mt19937_64 rng(3);
  const Triple t1 = random_triple(x4m1(F5()), F5(), rng), t2 = random_triple(x4p4x2p2(), F5(), rng);
  try {
    same_class(t1, t2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::descriptor_mismatch);
  }
}

TEST(SameClass, ProperImagesAreEqual) {
  std::mt19937_64 rng(5);
  for (const Curve& c : {x4m1(F5()), x4p4x2p2(), random_sextic(3)}) {
    for (int i = 0; i < 60; ++i) {
      const Triple t = random_triple(c, c.field(), rng);
      const Triple s = act(random_orthogonal_word(c.field(), rng, 5), t);
      const ClassRelation r = same_class(t, s, {1});
      EXPECT_TRUE(r.kind == ClassKind::equal || r.kind == ClassKind::equal_and_self_conjugate);
      expect_witnesses(r, t, s);
    }
  }
}

TEST(SameClass, ImproperImagesAreConjugate) {
  std::mt19937_64 rng(6);
  int conjugate_only = 0;
  for (int i = 0; i < 80; ++i) {
    const Triple t = random_triple(x4p4x2p2(), F5(), rng);
    const Triple s = act(generator(GeneratorKind::epsilon, F5()), t);
    const ClassRelation r = same_class(t, s, {1});
    EXPECT_TRUE(r.kind == ClassKind::conjugate_only || r.kind == ClassKind::equal_and_self_conjugate);
    conjugate_only += r.kind == ClassKind::conjugate_only ? 1 : 0;
    expect_witnesses(r, t, s);
  }
  EXPECT_GT(conjugate_only, 0);
}

TEST(SameClass, AgreesWithOrbitOracle) {
  std::mt19937_64 rng(7);
  for (const Curve& c : {x4m1(F5()), x4p4x2p2()}) {
    std::vector<Triple> pool;
    for (int i = 0; i < 12; ++i) pool.push_back(random_triple(c, F5(), rng));
    for (int i = 0; i < 4; ++i) pool.push_back(act(random_orthogonal_word(F5(), rng, 4, true), pool[i]));
    for (const auto& t1 : pool)
      for (const auto& t2 : pool) {
        const ClassRelation r = same_class(t1, t2, {1});
        EXPECT_EQ(r.kind, orbit_oracle(t1, t2)) << t1 << " vs " << t2;
        expect_witnesses(r, t1, t2);
      }
  }
}

TEST(SameClass, GramSeparatesClasses) {
  std::mt19937_64 rng(8);
  for (const Curve& c : {x4p4x2p2(), random_sextic(4)}) {
    for (int i = 0; i < 150; ++i) {
      const Triple t1 = random_triple(c, c.field(), rng);
      const Triple t2 = i % 3 == 0 ? act(random_orthogonal_word(c.field(), rng, 3, true), t1)
                                   : random_triple(c, c.field(), rng);
      const ClassRelation r = same_class(t1, t2);
      EXPECT_EQ(r.kind == ClassKind::distinct, gram(t1) != gram(t2)) << t1 << " vs " << t2;
      EXPECT_EQ(same_class(t2, t1).kind, r.kind);
    }
  }
}

TEST(Kinds, Names) {
  for (ClassKind k : {ClassKind::equal, ClassKind::equal_and_self_conjugate, ClassKind::conjugate_only,
                      ClassKind::distinct})
    EXPECT_EQ(parse_kind(kind_name(k)), k);
  EXPECT_EQ(kind_name(ClassKind::conjugate_only), "conjugate-only");
  EXPECT_THROW(parse_kind("same"), Error);
}

}  // namespace
}  // namespace hypdiv

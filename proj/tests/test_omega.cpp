#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

namespace hypdiv {
namespace {

using namespace testing;

Matrix3 m3(Field f, std::initializer_list<FieldElement> e) {
  Matrix3 m;
  auto it = e.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = embed(*it++, f);
  return m;
}

TEST(Omega, Values) {
  EXPECT_TRUE(same_matrix(omega(Q()), m3(Q(), {q(0), q(-1, 2), q(0), q(-1, 2), q(0), q(0), q(0), q(0), q(1)})));
  const Field f = F5();
  EXPECT_TRUE(same_matrix(omega(f), m3(f, {el(f, 0), el(f, 2), el(f, 0), el(f, 2), el(f, 0), el(f, 0), el(f, 0),
                                           el(f, 0), el(f, 1)})));
  EXPECT_TRUE(same_matrix(omega(f), omega(f).transpose()));
  EXPECT_TRUE(inverse(omega(f)).has_value());
}

TEST(Orthogonality, Classification) {
  const Field f = Q();
  EXPECT_EQ(is_orthogonal(Matrix3(identity_matrix(3, f))), Orthogonality::proper);
  EXPECT_EQ(is_orthogonal(m3(f, {q(1), q(0), q(0), q(0), q(1), q(0), q(0), q(0), q(-1)})), Orthogonality::improper);
  EXPECT_EQ(is_orthogonal(m3(f, {q(2), q(0), q(0), q(0), q(2), q(0), q(0), q(0), q(1)})),
            Orthogonality::not_orthogonal);
  try {
    make_orth(m3(f, {q(2), q(0), q(0), q(0), q(2), q(0), q(0), q(0), q(1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_orthogonal);
  }
}

TEST(Generators, Matrices) {
  const OrthMatrix s = generator(GeneratorKind::b_scale, q(2));
  EXPECT_TRUE(same_matrix(s.entries(), m3(Q(), {q(2), q(0), q(0), q(0), q(1, 2), q(0), q(0), q(0), q(1)})));
  EXPECT_TRUE(s.is_proper());
  const OrthMatrix r = generator(GeneratorKind::reduction, q(1));
  EXPECT_TRUE(same_matrix(r.entries(), m3(Q(), {q(1), q(1), q(-2), q(0), q(1), q(0), q(0), q(-1), q(1)})));
  EXPECT_TRUE(r.is_proper());
  const OrthMatrix w = generator(GeneratorKind::plain_swap, Q());
  EXPECT_TRUE(same_matrix(w.entries(), m3(Q(), {q(0), q(1), q(0), q(1), q(0), q(0), q(0), q(0), q(-1)})));
  EXPECT_TRUE(w.is_proper());
  EXPECT_FALSE(generator(GeneratorKind::epsilon, Q()).is_proper());
  try {
    generator(GeneratorKind::so3_scale, q(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_scale);
  }
}

TEST(Generators, AllOrthogonal) {
  for (const Field f : {F5(), F25(), Field::finite(7, 2)}) {
    for (const auto& a : elements(f)) {
      for (auto kind : {GeneratorKind::b_shift, GeneratorKind::so3_swap, GeneratorKind::reduction}) {
        const OrthMatrix m = generator(kind, a);
        EXPECT_TRUE(m.is_proper());
        EXPECT_EQ(m * m.inverse(), identity_orth(f));
      }
      if (!a.is_zero()) EXPECT_TRUE(generator(GeneratorKind::b_scale, a).is_proper());
    }
  }
}

TEST(Action, Examples) {
  EXPECT_EQ(act(identity_orth(Q()), tA()), tA());
  EXPECT_EQ(act(generator(GeneratorKind::epsilon, Q()), tA()), conjugate(tA()));
  EXPECT_EQ(act(generator(GeneratorKind::plain_swap, Q()), tA()), conjugate(tA()));
}

TEST(Action, Compatibility) {
  std::mt19937_64 rng(21);
  const Curve c = x4p4x2p2();
  for (int i = 0; i < 200; ++i) {
    const OrthMatrix a = random_orthogonal_word(F25(), rng, 3, true), b = random_orthogonal_word(F25(), rng, 3, true);
    const Triple t = random_triple(c, F5(), rng);
    EXPECT_EQ(act(a * b, t), act(a, act(b, t)));
  }
}

TEST(Action, MovesIntoExtension) {
  std::mt19937_64 rng(1);
  const OrthMatrix a = generator(GeneratorKind::so3_swap, FieldElement::from_index(F25(), 7));
  const Triple t = act(a, rank3_f5());
  EXPECT_EQ(t.field(), F25());
}

TEST(Enumerate, Orders) {
  EXPECT_EQ(enumerate_so3(F5()).size(), 120u);
  EXPECT_EQ(enumerate_so3(Field::prime(3)).size(), 24u);
  EXPECT_EQ(enumerate_so3(F7()).size(), 336u);
  try {
    enumerate_so3(Field::prime(17));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::field_too_large);
  }
  try {
    enumerate_so3(Q());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::rationals_unsupported);
  }
}

TEST(Enumerate, GroupStructure) {
  for (const Field f : {Field::prime(3), F5()}) {
    const auto& g = enumerate_so3(f);
    std::set<std::vector<std::uint64_t>> keys;
    for (const auto& a : g) keys.insert(matrix_key(a));
    EXPECT_EQ(keys.size(), g.size());
    EXPECT_TRUE(keys.count(matrix_key(identity_orth(f))));
    for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(matrix_key(g[i - 1]), matrix_key(g[i]));
    for (const auto& a : g) {
      EXPECT_TRUE(a.is_proper());
      EXPECT_TRUE(keys.count(matrix_key(a.inverse())));
    }
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int i = 0; i < 500; ++i) EXPECT_TRUE(keys.count(matrix_key(g[pick(rng)] * g[pick(rng)])));
    for (const auto& a : elements(f)) {
      EXPECT_TRUE(keys.count(matrix_key(generator(GeneratorKind::reduction, a))));
      EXPECT_TRUE(keys.count(matrix_key(generator(GeneratorKind::b_shift, a))));
      if (!a.is_zero()) EXPECT_TRUE(keys.count(matrix_key(generator(GeneratorKind::b_scale, a))));
    }
    EXPECT_TRUE(keys.count(matrix_key(generator(GeneratorKind::plain_swap, f))));
    for (int i = 0; i < 100; ++i) EXPECT_TRUE(keys.count(matrix_key(random_b_word(f, rng, 5))));
  }
}

}  // namespace
}  // namespace hypdiv

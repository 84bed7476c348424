#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace hypdiv {
namespace {

using namespace testing;

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return Errc::parse_error;
}

TEST(Curve, Construction) {
  EXPECT_EQ(x4m1(Q()).genus(), 1);
  EXPECT_EQ(x4p4x2p2().genus(), 1);
  EXPECT_EQ(random_sextic(1).genus(), 2);
  // (X-1)^2 (X^2+1)
  EXPECT_EQ(code_of([] { make_curve(poly(Q(), {1, -2, 2, -2, 1})); }), Errc::not_squarefree);
  EXPECT_EQ(code_of([] { make_curve(poly(Q(), {1, 0, 0, 1})); }), Errc::wrong_degree_parity);
  EXPECT_EQ(code_of([] { make_curve(poly(Q(), {1, 0, 1})); }), Errc::wrong_degree_parity);
  EXPECT_EQ(code_of([] { make_curve({q(1), q(0), q(0), q(0), q(0)}, Q()); }), Errc::zero_leading_coefficient);
  EXPECT_EQ(code_of([] { Field::prime(2); }), Errc::characteristic_two);
}

TEST(Curve, InfinityPoints) {
  const InfinityData a = infinity_points(x4m1(Q()));
  EXPECT_EQ(a.status, SqrtStatus::square_in_base);
  EXPECT_EQ(a.roots[0], q(1));
  EXPECT_EQ(a.roots[1], q(-1));
  EXPECT_EQ(infinity_points(x4p4x2p2()).status, SqrtStatus::square_in_base);
  const InfinityData b = infinity_points(make_curve(poly(F5(), {1, 0, 0, 0, 2})));
  EXPECT_EQ(b.status, SqrtStatus::square_in_quadratic_extension);
  EXPECT_EQ(b.roots[0] * b.roots[0], embed(el(F5(), 2), b.root_field));
  EXPECT_EQ(b.roots[1], -b.roots[0]);
}

TEST(Lambda, Examples) {
  const Field f = F5();
  LinearForm form(3);
  form << el(f, 3), el(f, 0), el(f, 1);
  EXPECT_EQ(lambda_to_poly(form, f, 1), poly(f, {3, 0, 1}));
  EXPECT_EQ(poly_to_form(poly(Q(), {-1, 0, 1}), 1), (LinearForm(3) << q(-1), q(0), q(1)).finished());
  EXPECT_TRUE(is_zero_matrix(poly_to_form(Polynomial(Q()), 1)));
  EXPECT_EQ(code_of([] { poly_to_form(poly(Q(), {0, 0, 0, 1}), 1); }), Errc::degree_too_high);
  LinearForm shorty(2);
  shorty << q(1), q(2);
  EXPECT_EQ(code_of([&] { lambda_to_poly(shorty, Q(), 1); }), Errc::length_mismatch);
}

TEST(Lambda, LinearRoundTrip) {
  std::mt19937_64 rng(2);
  const Field f = F25();
  for (int i = 0; i < 200; ++i) {
    LinearForm s(4), t(4);
    for (int k = 0; k < 4; ++k) s(k) = random_element(f, rng), t(k) = random_element(f, rng);
    const FieldElement a = random_element(f, rng);
    EXPECT_EQ(poly_to_form(lambda_to_poly(s, f), 2), s);
    EXPECT_EQ(lambda_to_poly(s * a + t, f), a * lambda_to_poly(s, f) + lambda_to_poly(t, f));
  }
}

TEST(Triple, Validation) {
  EXPECT_NO_THROW(tA());
  EXPECT_NO_THROW(tB());
  EXPECT_NO_THROW(rank3_f5());
  const Curve c = x4m1(Q());
  EXPECT_EQ(code_of([&] { make_triple(c, poly(Q(), {1}), poly(Q(), {2}), poly(Q(), {0, 0, 1})); }),
            Errc::not_on_curve);
  EXPECT_EQ(code_of([&] { make_triple(c, Polynomial(Q()), poly(Q(), {1}), poly(Q(), {0, 0, 1})); }),
            Errc::zero_form);
  LinearForm a(2);
  a << q(1), q(0);
  EXPECT_EQ(code_of([&] { make_triple(c, a, a, a); }), Errc::length_mismatch);
}

TEST(Triple, Canonical) {
  const Curve c = x4m1(Q());
  const Triple t = make_triple(c, poly(Q(), {-2}), poly(Q(), {-1, 0, -1}), poly(Q(), {1, 0, 1}));
  EXPECT_EQ(b_canonical(t), tA());
  EXPECT_EQ(b_canonical(tA()), tA());
  EXPECT_EQ(b_canonical(tB()), tB());
  const CanonicalForm cf = b_canonical_with_word(t);
  EXPECT_EQ(act(b_word_matrix(cf.word), t), tA());
}

TEST(Triple, CanonicalIsBInvariant) {
  std::mt19937_64 rng(8);
  for (const Curve& c : {x4p4x2p2(), random_sextic(3)}) {
    for (int i = 0; i < 200; ++i) {
      const Triple t = random_triple(c, c.field(), rng);
      const Triple canon = b_canonical(t);
      EXPECT_EQ(b_canonical(canon), canon);
      EXPECT_EQ(b_canonical(act(random_b_word(c.field(), rng, 4), t)), canon);
      const CanonicalForm cf = b_canonical_with_word(t);
      EXPECT_EQ(act(b_word_matrix(cf.word), t), canon);
    }
  }
}

TEST(Triple, Conjugate) {
  EXPECT_EQ(conjugate(tA()), make_triple(x4m1(Q()), poly(Q(), {1}), poly(Q(), {1}), poly(Q(), {0, 0, -1})));
  EXPECT_EQ(conjugate(tB()), tB());
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Triple t = random_triple(x4p4x2p2(), F25(), rng);
    EXPECT_EQ(conjugate(conjugate(t)), t);
  }
}

TEST(Triple, DivisorData) {
  const DivisorData a = divisor_data(tA());
  EXPECT_EQ(a.U_monic, poly(Q(), {1}));
  EXPECT_EQ(a.infinity_multiplicity, 2);
  EXPECT_EQ(a.infinity_sign, InfinitySign::plus);
  const DivisorData b = divisor_data(tB());
  EXPECT_EQ(b.U_monic, poly(Q(), {-1, 0, 1}));
  EXPECT_EQ(b.infinity_multiplicity, 0);
  EXPECT_EQ(b.infinity_sign, InfinitySign::none);
  const DivisorData c = divisor_data(rank3_f5());
  EXPECT_EQ(c.U_monic, poly(F5(), {1, 0, 1}));
  EXPECT_EQ(c.infinity_multiplicity, 0);
  EXPECT_EQ(divisor_data(conjugate(tA())).infinity_sign, InfinitySign::minus);
}

TEST(Triple, Support) {
  const Curve c5 = x4m1(F5());
  const Triple t = make_triple(c5, poly(F5(), {-1, 0, 1}), poly(F5(), {-1, 0, -1}), Polynomial(F5()));
  const Support s = support(t, 1);
  ASSERT_EQ(s.affine.size(), 2u);
  EXPECT_EQ(s.affine[0].x, el(F5(), 1));
  EXPECT_EQ(s.affine[1].x, el(F5(), 4));
  EXPECT_TRUE(s.affine[0].y.is_zero());
  EXPECT_TRUE(s.complete);
  const Triple inf = make_triple(c5, poly(F5(), {1}), poly(F5(), {1}), poly(F5(), {0, 0, 1}));
  const Support si = support(inf, 1);
  EXPECT_TRUE(si.affine.empty());
  EXPECT_EQ(si.infinity_multiplicity, 2);
  EXPECT_EQ(si.infinity_sign, InfinitySign::plus);
  // X^2 + 3 has no root mod 5.
  const Triple irr = make_triple(x4p4x2p2(), poly(F5(), {3, 0, 1}), poly(F5(), {4, 0, 4}), poly(F5(), {2}));
  EXPECT_FALSE(support(irr, 1).complete);
  const Support s2 = support(irr, 2);
  EXPECT_TRUE(s2.complete);
  for (const auto& p : s2.affine) EXPECT_EQ(p.y * p.y, x4p4x2p2().F()(p.x));
  EXPECT_EQ(code_of([] { support(tA(), 1); }), Errc::rationals_unsupported);
}

TEST(Triple, SupportPointsLieOnCurve) {
  std::mt19937_64 rng(6);
  const Curve c = random_sextic(2);
  for (int i = 0; i < 50; ++i) {
    const Triple t = random_triple(c, F7(), rng);
    for (const auto& p : support(t, 2).affine) EXPECT_EQ(p.y * p.y, c.F()(p.x));
  }
}

}  // namespace
}  // namespace hypdiv

#include <gtest/gtest.h>

#include "fixtures.hpp"

namespace hypdiv {
namespace {

using namespace testing;

TEST(PolyArith, Examples) {
  const auto [quo, rem] = divmod(poly(Q(), {-1, 0, 0, 0, 1}), poly(Q(), {-1, 0, 1}));
  EXPECT_EQ(quo, poly(Q(), {1, 0, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(poly(Q(), {-1, 0, 1}), poly(Q(), {1, 2, 1})), poly(Q(), {1, 1}));
  EXPECT_EQ(poly(F5(), {3, 0, 1}) * poly(F5(), {3, 0, 1}), poly(F5(), {4, 0, 1, 0, 1}));
  EXPECT_EQ(Polynomial(Q()).degree(), -1);
}

TEST(PolyArith, DivmodRoundTrip) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 6);
  for (const Field f : {F7(), F25(), Q()}) {
    for (int i = 0; i < 500; ++i) {
      std::vector<FieldElement> a, b;
      for (int k = deg(rng); k >= 0; --k) a.push_back(random_element(f, rng));
      for (int k = deg(rng); k >= 0; --k) b.push_back(random_element(f, rng));
      b.push_back(random_nonzero(f, rng));
      const Polynomial pa(f, a), pb(f, b);
      const auto [quo, rem] = divmod(pa, pb);
      EXPECT_EQ(quo * pb + rem, pa);
      EXPECT_LT(rem.degree(), pb.degree());
    }
  }
}

TEST(PolyArith, DivisionByZero) {
  try {
    divmod(poly(F5(), {1, 1}), Polynomial(F5()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::division_by_zero);
  }
}

TEST(Squarefree, Examples) {
  EXPECT_TRUE(is_squarefree(poly(Q(), {-1, 0, 0, 0, 1})));
  EXPECT_FALSE(is_squarefree(poly(Q(), {1, -2, 1})));
  EXPECT_TRUE(is_squarefree(poly(F5(), {2, 0, 4, 0, 1})));
  try {
    is_squarefree(Polynomial(F5()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_polynomial);
  }
}

// A repeated root of a degree-d polynomial over GF(5) lies in GF(5^k) for
// some k <= d; look for one directly.
bool has_repeated_root(const Polynomial& f) {
  for (int k = 1; k <= std::max(1, f.degree()); ++k) {
    const Field ext = Field::finite(5, k);
    const Polynomial g = f.embed(ext);
    const Polynomial d = g.derivative();
    for (const auto& a : elements(ext))
      if (g(a).is_zero() && d(a).is_zero()) return true;
  }
  return false;
}

TEST(Squarefree, AgreesWithRootSearch) {
  int checked = 0;
  for (int d = 1; d <= 4; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= 5;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<FieldElement> c;
      std::uint64_t rest = idx;
      for (int i = 0; i < d; ++i, rest /= 5) c.push_back(el(F5(), static_cast<std::int64_t>(rest % 5)));
      c.push_back(el(F5(), 1));
      const Polynomial f(F5(), c);
      EXPECT_EQ(is_squarefree(f), !has_repeated_root(f)) << f;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 5 + 25 + 125 + 625);
}

TEST(Roots, Examples) {
  EXPECT_EQ(roots_in_field(poly(F5(), {-1, 0, 1}), F5()), (std::vector<FieldElement>{el(F5(), 1), el(F5(), 4)}));
  EXPECT_TRUE(roots_in_field(poly(F5(), {-2, 0, 1}), F5()).empty());
  EXPECT_EQ(roots_in_field(poly(Q(), {1, -2, 1}), Q()), (std::vector<FieldElement>{q(1), q(1)}));
  EXPECT_EQ(roots_in_field(poly(F5(), {-2, 0, 1}), F25()).size(), 2u);
  EXPECT_EQ(roots_in_field(Polynomial(Q(), {q(-1, 4), q(0), q(1)}), Q()),
            (std::vector<FieldElement>{q(-1, 2), q(1, 2)}));
}

}  // namespace
}  // namespace hypdiv

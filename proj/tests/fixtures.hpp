#pragma once

#include <random>

#include "hypdiv/galois.hpp"

namespace hypdiv::testing {

inline Field Q() { return Field::rationals(); }
inline Field F5() { return Field::prime(5); }
inline Field F7() { return Field::prime(7); }
inline Field F25() { return Field::finite(5, 2); }

inline FieldElement q(long n, long d = 1) { return FieldElement::from_rational(Q(), mpq_class(n, d)); }
inline FieldElement el(Field f, std::int64_t n) { return FieldElement::from_int(f, n); }

inline Polynomial poly(Field f, std::initializer_list<std::int64_t> c) { return Polynomial(f, c); }

// X^4 - 1 over Q and GF(5); X^4 + 4X^2 + 2 over GF(5).
inline Curve x4m1(Field f) { return make_curve(poly(f, {-1, 0, 0, 0, 1})); }
inline Curve x4p4x2p2() { return make_curve(poly(F5(), {2, 0, 4, 0, 1})); }

/// First squarefree sextic over GF(7) drawn from the seeded stream with at
/// least four x in GF(7) where F(x) is a square, so point triples exist.
inline Curve random_sextic(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<FieldElement> c;
    for (int i = 0; i < 6; ++i) c.push_back(random_element(F7(), rng));
    c.push_back(random_nonzero(F7(), rng));
    const Polynomial f(F7(), c);
    if (!is_squarefree(f)) continue;
    int usable = 0;
    for (const auto& x : elements(F7())) usable += is_square(f(x)) ? 1 : 0;
    if (usable >= 4) return make_curve(f);
  }
}

inline Triple tA() {
  const Curve c = x4m1(Q());
  return make_triple(c, poly(Q(), {1}), poly(Q(), {1}), poly(Q(), {0, 0, 1}));
}

inline Triple tB() {
  const Curve c = x4m1(Q());
  return make_triple(c, poly(Q(), {-1, 0, 1}), poly(Q(), {-1, 0, -1}), Polynomial(Q()));
}

// (X^2+1, 4X^2+3, X) on X^4+4X^2+2 over GF(5); its forms are independent.
inline Triple rank3_f5() {
  const Curve c = x4p4x2p2();
  return make_triple(c, poly(F5(), {1, 0, 1}), poly(F5(), {3, 0, 4}), poly(F5(), {0, 1}));
}

/// A random element of L(C) over `f`: points on the curve for finite
/// fields, moved by a random word; over Q a word applied to tA or tB.
inline Triple random_triple(const Curve& curve, Field f, std::mt19937_64& rng, int word = 3) {
  if (!f.is_finite()) {
    const Triple base = std::bernoulli_distribution(0.5)(rng) ? tA() : tB();
    return act(random_orthogonal_word(f, rng, word), base);
  }
  for (int attempt = 0; attempt < 100; ++attempt)
    if (auto t = sample_point_triple(curve, f, rng)) return act(random_orthogonal_word(f, rng, word), *t);
  throw Error(Errc::budget_exhausted, "no point triple found");
}

inline bool maps_onto(const OrthMatrix& a, const Triple& from, const Triple& to) {
  const Triple image = act(a, from);
  const Field f = common_field(image.field(), to.field());
  return image.embed(f) == to.embed(f);
}

}  // namespace hypdiv::testing

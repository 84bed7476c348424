#include "hypdiv/galois.hpp"

#include <algorithm>

namespace hypdiv {

GaloisContext make_context(Field base, int m) {
  if (!base.is_finite()) throw Error(Errc::not_finite_field, "Galois contexts need a finite base field");
  if (m < 1) throw Error(Errc::length_mismatch, "extension degree must be at least 1");
  return {base, extension(base, m), base.order()};
}

namespace {

Field ambient_of(Field f, const GaloisContext& ctx) {
  if (!f || !embeds_into(f, ctx.ambient)) throw Error(Errc::not_in_ambient, "entries do not lie in " + ctx.ambient.name());
  return ctx.ambient;
}

}  // namespace

Triple galois_image(const Triple& t, const GaloisContext& ctx) {
  if (!embeds_into(t.curve().field(), ctx.base))
    throw Error(Errc::not_in_ambient, "curve is not defined over " + ctx.base.name());
  const Field f = ambient_of(t.field(), ctx);
  return make_triple(t.curve(), power_map(t.embed(f).matrix(), ctx.q));
}

GramForm galois_image(const GramForm& s, const GaloisContext& ctx) {
  const Field f = ambient_of(s.field(), ctx);
  return make_gram(power_map(s.embed(f).entries(), ctx.q), f);
}

OrthMatrix galois_image(const OrthMatrix& a, const GaloisContext& ctx) {
  const Field f = ambient_of(a.field(), ctx);
  return make_orth(power_map(a.embed(f).entries(), ctx.q));
}

bool class_rational_mod_conj(const Triple& t, const GaloisContext& ctx) {
  const GramForm s = gram(t.embed(ambient_of(t.field(), ctx)));
  return galois_image(s, ctx) == s;
}

RationalityVerdict class_rationality(const Triple& t, const GaloisContext& ctx) {
  const Triple a = t.embed(ambient_of(t.field(), ctx));
  ClassRelation rel = same_class(a, galois_image(a, ctx), SearchDomain{1});
  const bool rational = rel.kind == ClassKind::equal || rel.kind == ClassKind::equal_and_self_conjugate;
  return {rational, std::move(rel)};
}

bool class_rational(const Triple& t, const GaloisContext& ctx) { return class_rationality(t, ctx).rational; }

std::optional<Triple> sample_twisted_triple(const Curve& curve, const GaloisContext& ctx, std::mt19937_64& rng) {
  const Field k = ctx.base;
  if ((ctx.ambient.degree() / k.degree()) % 2 != 0) return std::nullopt;
  FieldElement c = random_nonzero(k, rng);
  while (is_square(c)) c = random_nonzero(k, rng);
  const Polynomial F = curve.F().embed(k);
  const FieldElement cinv = c.inverse();
  std::vector<FieldElement> pool;
  for (const auto& x : elements(k))
    if (is_square(F(x) * cinv)) pool.push_back(x);
  const int need = curve.genus() + 1;
  if (static_cast<int>(pool.size()) < need) return std::nullopt;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<FieldElement> xs(pool.begin(), pool.begin() + need), ys;
  std::bernoulli_distribution flip(0.5);
  Polynomial U = Polynomial::constant(FieldElement::one(k));
  for (const auto& x : xs) {
    const FieldElement y = *sqrt_in_field(F(x) * cinv);
    ys.push_back(flip(rng) ? -y : y);
    U = U * Polynomial(k, {-x, FieldElement::one(k)});
  }
  const Polynomial W0 = interpolate(xs, ys, k);
  auto [V, rem] = divmod(c * (W0 * W0) - F, U);
  if (!rem.is_zero()) throw Error(Errc::not_on_curve, "twisted interpolation failed");
  const Field K = ctx.ambient;
  const FieldElement root = *sqrt_in_field(embed(c, K));
  const int g = curve.genus();
  return make_triple(curve, embed_matrix(poly_to_form(U, g), K), embed_matrix(poly_to_form(V, g), K),
                     embed_matrix(poly_to_form(W0, g), K) * root);
}

CaveatReport find_caveat_example(const Curve& curve, const GaloisContext& ctx, std::uint64_t budget,
                                 std::uint64_t seed) {
  CaveatReport report;
  report.seed = seed;
  report.budget = budget;
  std::mt19937_64 rng(seed);
  const Field K = ctx.ambient;
  for (std::uint64_t i = 0; i < budget; ++i) {
    std::optional<Triple> t;
    if (i % 2 == 1) {
      t = sample_twisted_triple(curve, ctx, rng);
      if (t) t = act(random_orthogonal_word(ctx.base, rng, 4), *t);
    }
    if (!t) {
      t = sample_point_triple(curve, K, rng);
      if (t) t = act(random_orthogonal_word(K, rng, 4), *t);
    }
    report.searched = i + 1;
    if (!t) continue;
    const bool mod_conj = class_rational_mod_conj(*t, ctx);
    if (!mod_conj) {
      // Rationality implies a rational Gram matrix; test the implication on
      // this sample too.
      if (class_rational(*t, ctx)) ++report.violations;
      continue;
    }
    ++report.gram_rational_samples;
    RationalityVerdict v = class_rationality(*t, ctx);
    if (!v.rational && v.relation.kind == ClassKind::conjugate_only) {
      report.witness = *t;
      report.relation = std::move(v.relation);
      break;
    }
  }
  return report;
}

}  // namespace hypdiv

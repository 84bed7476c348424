#include "hypdiv/triple.hpp"

#include <algorithm>
#include <ostream>

namespace hypdiv {

bool operator==(const Triple& a, const Triple& b) {
  return a.curve_ == b.curve_ && a.field_ == b.field_ && same_matrix(a.rows_, b.rows_);
}

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << "(" << t.U() << ", " << t.V() << ", " << t.W() << ")";
}

Triple Triple::embed(Field target) const {
  if (target == field_) return *this;
  return Triple(curve_, embed_matrix(rows_, target), target);
}

Triple make_triple(const Curve& curve, const TripleMatrix& rows) {
  if (rows.cols() != curve.form_length())
    throw Error(Errc::length_mismatch, "forms have " + std::to_string(rows.cols()) + " coefficients, expected " +
                                           std::to_string(curve.form_length()));
  Field f = field_of(rows);
  f = f ? common_field(curve.field(), f) : curve.field();
  TripleMatrix typed = embed_matrix(rows, f);
  if (is_zero_matrix(typed.row(0)) || is_zero_matrix(typed.row(1)))
    throw Error(Errc::zero_form, "u and v must be nonzero");
  const Polynomial U = lambda_to_poly(typed.row(0), f), V = lambda_to_poly(typed.row(1), f),
                   W = lambda_to_poly(typed.row(2), f);
  if (W * W - U * V != curve.F().embed(f)) throw Error(Errc::not_on_curve, "W^2 - UV differs from F");
  return Triple(curve, std::move(typed), f);
}

Triple make_triple(const Curve& curve, const LinearForm& u, const LinearForm& v, const LinearForm& w) {
  if (u.size() != v.size() || u.size() != w.size()) throw Error(Errc::length_mismatch, "forms of unequal length");
  TripleMatrix rows(3, u.size());
  rows.row(0) = u;
  rows.row(1) = v;
  rows.row(2) = w;
  return make_triple(curve, rows);
}

Triple make_triple(const Curve& curve, const Polynomial& U, const Polynomial& V, const Polynomial& W) {
  const int g = curve.genus();
  return make_triple(curve, poly_to_form(U, g), poly_to_form(V, g), poly_to_form(W, g));
}

CanonicalForm b_canonical_with_word(const Triple& t) {
  const Field f = t.field();
  const Polynomial U = t.U();
  const FieldElement scale = U.leading().inverse();
  LinearForm u = t.u() * scale;
  LinearForm v = t.v() * U.leading();
  const LinearForm w = t.w();
  const FieldElement shift = w(U.degree());
  const LinearForm new_w = w - u * shift;
  v = v + u * (shift * shift) - w * (FieldElement::from_int(f, 2) * shift);
  return {make_triple(t.curve(), u, v, new_w), {scale, shift}};
}

Triple b_canonical(const Triple& t) { return b_canonical_with_word(t).triple; }

Triple conjugate(const Triple& t) {
  const LinearForm w = -t.w();
  return make_triple(t.curve(), t.u(), t.v(), w);
}

namespace {

InfinitySign sign_at_infinity(const Triple& canonical, int multiplicity) {
  if (multiplicity == 0) return InfinitySign::none;
  const int g = canonical.curve().genus();
  const FieldElement top = canonical.w()(g + 1);
  const InfinityData inf = infinity_points(canonical.curve());
  const Field k = canonical.field();
  FieldElement plus;
  if (embeds_into(inf.root_field, k)) {
    plus = embed(inf.roots[0], k);
  } else {
    // Roots computed in a different quadratic extension; order them in k.
    plus = principal_root(top);
  }
  if (top == plus) return InfinitySign::plus;
  if (top == -plus) return InfinitySign::minus;
  throw Error(Errc::not_on_curve, "top coefficient of W is not a square root of f_{2g+2}");
}

}  // namespace

DivisorData divisor_data(const Triple& t) {
  const Triple c = b_canonical(t);
  const Polynomial U = c.U();
  const int mult = c.curve().genus() + 1 - U.degree();
  return {U, c.W(), mult, sign_at_infinity(c, mult)};
}

Support support(const Triple& t, int extension_degree) {
  if (!t.field().is_finite()) throw Error(Errc::rationals_unsupported, "support needs a finite field");
  if (extension_degree < 1) throw Error(Errc::length_mismatch, "extension degree must be at least 1");
  const DivisorData d = divisor_data(t);
  const Field target = extension(t.field(), extension_degree);
  Support out{target, {}, d.infinity_multiplicity, d.infinity_sign, false};
  const std::vector<FieldElement> roots = roots_in_field(d.U_monic, target);
  int counted = 0;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    out.affine.push_back({roots[i], d.W_repr(roots[i]), static_cast<int>(j - i)});
    counted += static_cast<int>(j - i);
    i = j;
  }
  out.complete = counted == d.U_monic.degree();
  return out;
}

Polynomial interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys, Field field) {
  Polynomial result(field);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = Polynomial::constant(FieldElement::one(field));
    FieldElement denom = FieldElement::one(field);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial(field, {-xs[j], FieldElement::one(field)});
      denom = denom * (xs[i] - xs[j]);
    }
    result = result + (ys[i] / denom) * basis;
  }
  return result;
}

std::optional<Triple> sample_point_triple(const Curve& curve, Field field, std::mt19937_64& rng, bool weierstrass) {
  const Polynomial F = curve.F().embed(field);
  const int need = curve.genus() + 1;
  // Candidate x values: every element for small fields, random draws otherwise.
  std::vector<FieldElement> pool;
  if (field.is_finite() && field.order() <= 4096) {
    for (const auto& x : elements(field)) {
      const FieldElement fx = F(x);
      if (weierstrass ? fx.is_zero() : is_square(fx)) pool.push_back(x);
    }
    if (static_cast<int>(pool.size()) < need) return std::nullopt;
    std::shuffle(pool.begin(), pool.end(), rng);
  } else {
    for (int attempt = 0; attempt < 2000 && static_cast<int>(pool.size()) < need; ++attempt) {
      const FieldElement x = random_element(field, rng);
      const FieldElement fx = F(x);
      if (weierstrass ? !fx.is_zero() : !is_square(fx)) continue;
      if (std::find(pool.begin(), pool.end(), x) == pool.end()) pool.push_back(x);
    }
    if (static_cast<int>(pool.size()) < need) return std::nullopt;
  }
  std::vector<FieldElement> xs(pool.begin(), pool.begin() + need), ys;
  std::bernoulli_distribution flip(0.5);
  Polynomial U = Polynomial::constant(FieldElement::one(field));
  for (const auto& x : xs) {
    FieldElement y = *sqrt_in_field(F(x));
    ys.push_back(flip(rng) ? -y : y);
    U = U * Polynomial(field, {-x, FieldElement::one(field)});
  }
  const Polynomial W = interpolate(xs, ys, field);
  auto [V, rem] = divmod(W * W - F, U);
  if (!rem.is_zero()) throw Error(Errc::not_on_curve, "interpolated W does not satisfy W^2 = F mod U");
  return make_triple(curve, U, V, W);
}

}  // namespace hypdiv

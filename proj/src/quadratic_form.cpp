#include "hypdiv/quadratic_form.hpp"

#include <array>

namespace hypdiv {

GramForm GramForm::embed(Field target) const {
  if (target == field_) return *this;
  return GramForm(embed_matrix(s_, target), target);
}

GramForm make_gram(const Matrix& entries, Field field) {
  if (entries.rows() != entries.cols()) throw Error(Errc::not_symmetric, "Gram matrix must be square");
  Field f = field_of(entries);
  f = f ? common_field(field, f) : field;
  Matrix s = embed_matrix(entries, f);
  for (Index i = 0; i < s.rows(); ++i)
    for (Index j = i + 1; j < s.cols(); ++j)
      if (s(i, j) != s(j, i)) throw Error(Errc::not_symmetric, "Gram matrix is not symmetric");
  return GramForm(std::move(s), f);
}

GramForm gram(const Triple& t) {
  const Field f = t.field();
  const TripleMatrix& m = t.matrix();
  return make_gram(m.transpose() * omega(f) * m, f);
}

Polynomial lambda_of_form(const GramForm& s) {
  const Field f = s.field();
  const Index n = s.size();
  std::vector<FieldElement> c(n > 0 ? 2 * n - 1 : 0, FieldElement::zero(f));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) c[i + j] = c[i + j] + s.entries()(i, j);
  return Polynomial(f, std::move(c));
}

RankRadical rank_radical(const GramForm& s) {
  return {exact_rank(s.entries()), kernel_basis(s.entries(), s.field())};
}

bool in_qc(const GramForm& s, const Curve& curve) {
  if (s.size() != curve.form_length()) return false;
  if (!embeds_into(curve.field(), s.field()) && !embeds_into(s.field(), curve.field())) return false;
  const Field f = common_field(curve.field(), s.field());
  if (lambda_of_form(s).embed(f) != curve.F().embed(f)) return false;
  const Index r = exact_rank(s.entries());
  return r == 2 || r == 3;
}

namespace {

FieldElement half(Field f) { return FieldElement::from_int(f, 2).inverse(); }

enum class Extend { finite_only, always };

// u, v with α ℓ1² + 2β ℓ1ℓ2 + γ ℓ2² = -u v, over the field of the inputs or a
// quadratic extension of it.
struct Split {
  LinearForm u, v;
  Field field;
};

Split split_binary(FieldElement alpha, FieldElement beta, FieldElement gamma, LinearForm l1, LinearForm l2,
                   Extend extend) {
  Field f = alpha.field();
  if (alpha.is_zero()) {
    const FieldElement two = FieldElement::from_int(f, 2);
    return {-l2, l1 * (two * beta) + l2 * gamma, f};
  }
  FieldElement delta = beta * beta - alpha * gamma;
  std::optional<FieldElement> root = sqrt_in_field(delta);
  if (!root) {
    if (!f.is_finite() && extend == Extend::finite_only)
      throw Error(Errc::factorization_needs_extension, "the binary form does not split over " + f.name());
    const Field big = adjoin_sqrt(delta);
    alpha = embed(alpha, big), beta = embed(beta, big), delta = embed(delta, big);
    l1 = embed_matrix(l1, big), l2 = embed_matrix(l2, big);
    root = sqrt_in_field(delta);
    f = big;
  }
  const FieldElement inv = alpha.inverse();
  const FieldElement rho1 = (-beta + *root) * inv, rho2 = (-beta - *root) * inv;
  return {(l1 - l2 * rho1) * (-alpha), l1 - l2 * rho2, f};
}

// Coordinates (a, b) with r = a u + b v, read off at two columns where u, v
// are independent.
std::array<FieldElement, 2> coordinates(const LinearForm& r, const LinearForm& u, const LinearForm& v,
                                        std::array<Index, 2> cols) {
  const FieldElement det = u(cols[0]) * v(cols[1]) - u(cols[1]) * v(cols[0]);
  const FieldElement inv = det.inverse();
  return {(r(cols[0]) * v(cols[1]) - r(cols[1]) * v(cols[0])) * inv,
          (u(cols[0]) * r(cols[1]) - u(cols[1]) * r(cols[0])) * inv};
}

std::array<Index, 2> independent_columns(const LinearForm& u, const LinearForm& v) {
  for (Index i = 0; i < u.size(); ++i)
    for (Index j = i + 1; j < u.size(); ++j)
      if (!(u(i) * v(j) - u(j) * v(i)).is_zero()) return {i, j};
  throw Error(Errc::degenerate_result, "factors are proportional");
}

// A with A (u, v, 0) = t, filling the third column so that A is orthogonal.
Matrix3 from_normal_form(const TripleMatrix& t, const LinearForm& u, const LinearForm& v) {
  const auto cols = independent_columns(u, v);
  const auto [a, b] = coordinates(t.row(0), u, v, cols);
  const auto [c, d] = coordinates(t.row(1), u, v, cols);
  const auto [e, f] = coordinates(t.row(2), u, v, cols);
  const FieldElement two = FieldElement::from_int(a.field(), 2);
  Matrix3 m;
  m << a, b, two * (a * f - e * b), c, d, two * (d * e - c * f), e, f, a * d - b * c;
  return m;
}

OrthMatrix descend(const OrthMatrix& a, Field base) {
  if (a.field() == base) return a;
  if (auto m = restrict_matrix(a.entries(), base)) return make_orth(*m);
  return a;
}

}  // namespace

OrthMatrix recover_transform(const Triple& t1, const Triple& t2) {
  if (!(t1.curve() == t2.curve())) throw Error(Errc::descriptor_mismatch, "triples lie on different curves");
  const Field k = common_field(t1.field(), t2.field());
  const Triple a = t1.embed(k), b = t2.embed(k);
  const GramForm s = gram(a);
  if (s != gram(b)) throw Error(Errc::gram_mismatch, "the triples have different Gram matrices");
  const Echelon e = row_reduce(a.matrix());
  OrthMatrix result = identity_orth(k);
  if (e.pivots.size() == 3) {
    Matrix3 m1, m2;
    for (int j = 0; j < 3; ++j) {
      m1.col(j) = a.matrix().col(e.pivots[j]);
      m2.col(j) = b.matrix().col(e.pivots[j]);
    }
    result = make_orth(m2 * *inverse(m1));
  } else {
    const Index p1 = e.pivots[0], p2 = e.pivots[1];
    const Split split = split_binary(s.entries()(p1, p1), s.entries()(p1, p2), s.entries()(p2, p2),
                                     e.reduced.row(0), e.reduced.row(1), Extend::finite_only);
    const Matrix3 m1 = from_normal_form(a.embed(split.field).matrix(), split.u, split.v);
    const Matrix3 m2 = from_normal_form(b.embed(split.field).matrix(), split.u, split.v);
    result = descend(make_orth(m2 * *inverse(m1)), k);
  }
  if (act(result, a) != b.embed(common_field(result.field(), k)))
    throw Error(Errc::gram_mismatch, "recovered transform does not map t1 to t2");
  return result;
}

namespace {

// A nonsingular principal block of size `rank`, first in lexicographic order.
std::vector<Index> principal_block(const Matrix& s, Index rank) {
  const Index n = s.rows();
  std::vector<Index> idx(rank);
  for (Index i = 0; i < rank; ++i) idx[i] = i;
  while (true) {
    Matrix block(rank, rank);
    for (Index i = 0; i < rank; ++i)
      for (Index j = 0; j < rank; ++j) block(i, j) = s(idx[i], idx[j]);
    if (exact_rank(block) == rank) return idx;
    Index i = rank - 1;
    while (i >= 0 && idx[i] == n - rank + i) --i;
    if (i < 0) throw Error(Errc::not_in_qc, "no nonsingular principal block");
    ++idx[i];
    for (Index j = i + 1; j < rank; ++j) idx[j] = idx[j - 1] + 1;
  }
}

FieldElement bilinear(const Matrix3& n, const Vector& x, const Vector& y) { return (x.transpose() * n * y)(0, 0); }

// First projective point (1, a, b), then (0, 1, b), then (0, 0, 1) in index
// order with N(y) = 0; for each a the smaller root b is taken.
std::optional<Vector> isotropic_vector(const Matrix3& n, Field f) {
  const FieldElement one = FieldElement::one(f), zero = FieldElement::zero(f), two = FieldElement::from_int(f, 2);
  Vector y(3);
  auto solve_last = [&](const FieldElement& qa, const FieldElement& qb, const FieldElement& qc)
      -> std::optional<FieldElement> {
    // qa b^2 + qb b + qc = 0
    if (qa.is_zero()) {
      if (qb.is_zero()) return qc.is_zero() ? std::optional(zero) : std::nullopt;
      return -qc / qb;
    }
    const auto r = sqrt_in_field(qb * qb - FieldElement::from_int(f, 4) * qa * qc);
    if (!r) return std::nullopt;
    const FieldElement b1 = (-qb + *r) / (two * qa), b2 = (-qb - *r) / (two * qa);
    return precedes(b2, b1) ? b2 : b1;
  };
  for (std::uint64_t i = 0; i < f.order(); ++i) {
    const FieldElement a = FieldElement::from_index(f, i);
    const auto b = solve_last(n(2, 2), two * (n(0, 2) + a * n(1, 2)), n(0, 0) + two * a * n(0, 1) + a * a * n(1, 1));
    if (b) {
      y << one, a, *b;
      return y;
    }
  }
  if (const auto b = solve_last(n(2, 2), two * n(1, 2), n(1, 1))) {
    y << zero, one, *b;
    return y;
  }
  if (n(2, 2).is_zero()) {
    y << zero, zero, one;
    return y;
  }
  return std::nullopt;
}

}  // namespace

Triple decompose(const GramForm& s, const Curve& curve, int extension_budget, const std::optional<Vector>& hint) {
  if (!in_qc(s, curve)) throw Error(Errc::not_in_qc, "the form is not in Q(C)");
  const Field k = s.field();
  const Matrix& sm = s.entries();
  const Index rank = exact_rank(sm);
  const std::vector<Index> block = principal_block(sm, rank);
  Matrix m(rank, rank), l(rank, sm.cols());
  for (Index i = 0; i < rank; ++i) {
    l.row(i) = sm.row(block[i]);
    for (Index j = 0; j < rank; ++j) m(i, j) = sm(block[i], block[j]);
  }
  // S = l* m^{-1} l, so S(x) = N(l x) with N = m^{-1}.
  const Matrix n = *inverse(m);
  if (rank == 2) {
    if (k.is_finite() && extension_budget < 1) throw Error(Errc::budget_exhausted, "extension budget below 1");
    const Split split = split_binary(n(0, 0), n(0, 1), n(1, 1), l.row(0), l.row(1), Extend::always);
    if (split.field != k && k.is_finite() && extension_budget < 2)
      throw Error(Errc::budget_exhausted, "splitting the form needs a quadratic extension");
    LinearForm w(sm.cols());
    w.fill(FieldElement::zero(split.field));
    return make_triple(curve, split.u, split.v, w);
  }
  const Matrix3 n3 = n;
  Vector y;
  if (hint) {
    if (hint->size() != sm.cols()) throw Error(Errc::length_mismatch, "hint has the wrong length");
    y = l * embed_matrix(*hint, k);
    if (is_zero_matrix(y) || !bilinear(n3, y, y).is_zero())
      throw Error(Errc::rationals_need_hint, "hint is not an isotropic vector outside the radical");
  } else if (k.is_finite()) {
    // Ternary forms over finite fields are isotropic.
    y = *isotropic_vector(n3, k);
  } else {
    throw Error(Errc::rationals_need_hint, "rank 3 over " + k.name() + " needs an isotropic hint");
  }
  Vector z(3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) z(j) = FieldElement::from_int(k, i == j ? 1 : 0);
    if (!bilinear(n3, y, z).is_zero()) break;
  }
  const FieldElement two = FieldElement::from_int(k, 2);
  z = z - y * (bilinear(n3, z, z) / (two * bilinear(n3, y, z)));
  z = z * (-half(k) / bilinear(n3, y, z));
  Matrix pair(2, 3);
  pair.row(0) = (n3 * y).transpose();
  pair.row(1) = (n3 * z).transpose();
  Vector r = kernel_basis(pair, k).col(0);
  const FieldElement c = bilinear(n3, r, r);
  Field f = k;
  std::optional<FieldElement> root = sqrt_in_field(c);
  if (!root) {
    if (k.is_finite() && extension_budget < 2)
      throw Error(Errc::budget_exhausted, "the complement needs a square root outside the base field");
    f = adjoin_sqrt(c);
    root = sqrt_in_field(embed(c, f));
  }
  Matrix3 q;
  q.col(0) = embed_matrix(y, f);
  q.col(1) = embed_matrix(z, f);
  q.col(2) = embed_matrix(r, f) * root->inverse();
  const TripleMatrix t = *inverse(q) * embed_matrix(l, f);
  return make_triple(curve, t);
}

}  // namespace hypdiv

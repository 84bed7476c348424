#include "hypdiv/equivalence.hpp"

#include <algorithm>

#include "hypdiv/quadratic_form.hpp"

namespace hypdiv {

std::string_view kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::equal: return "equal";
    case ClassKind::equal_and_self_conjugate: return "equal-and-self-conjugate";
    case ClassKind::conjugate_only: return "conjugate-only";
    case ClassKind::distinct: return "distinct";
  }
  return "distinct";
}

ClassKind parse_kind(std::string_view name) {
  for (ClassKind k : {ClassKind::equal, ClassKind::equal_and_self_conjugate, ClassKind::conjugate_only,
                      ClassKind::distinct})
    if (kind_name(k) == name) return k;
  throw Error(Errc::parse_error, "unknown class relation '" + std::string(name) + "'");
}

ClassKind combine_kind(bool equal, bool conjugate) {
  if (equal && conjugate) return ClassKind::equal_and_self_conjugate;
  if (equal) return ClassKind::equal;
  if (conjugate) return ClassKind::conjugate_only;
  return ClassKind::distinct;
}

Triple reduction_step(const Triple& t, const FieldElement& a) {
  const Field f = common_field(t.field(), a.field());
  const FieldElement x = embed(a, f);
  const TripleMatrix m = t.embed(f).matrix();
  if (is_zero_matrix(m.row(0) + m.row(1) * (x * x) - m.row(2) * (FieldElement::from_int(f, 2) * x)))
    throw Error(Errc::degenerate_result, "U + a^2 V - 2aW vanishes for a = " + to_string(x));
  return act(generator(GeneratorKind::reduction, x), t);
}

Triple swap_step(const Triple& t) { return act(generator(GeneratorKind::plain_swap, t.field()), t); }

namespace {

// β2^{-1} β1 m when b_canonical(m t1) = b_canonical(t2) = β2 t2.
std::optional<OrthMatrix> witness_via(const OrthMatrix& m, const Triple& t1, const CanonicalForm& c2) {
  const Field f = common_field(m.field(), t1.field());
  const TripleMatrix rows = m.embed(f).entries() * t1.embed(f).matrix();
  if (is_zero_matrix(rows.row(0))) return std::nullopt;
  const CanonicalForm c1 = b_canonical_with_word(make_triple(t1.curve(), rows));
  const Field g = common_field(f, c2.triple.field());
  if (c1.triple.embed(g) != c2.triple.embed(g)) return std::nullopt;
  return b_word_matrix(c2.word).inverse() * b_word_matrix(c1.word) * m;
}

std::optional<OrthMatrix> try_candidates(const std::vector<FieldElement>& as, const Triple& t1, const Triple& t2) {
  std::optional<CanonicalForm> c2;
  for (const auto& a : as) {
    const Field f = common_field(a.field(), t2.field());
    if (!c2 || c2->triple.field() != f) c2 = b_canonical_with_word(t2.embed(f));
    if (auto w = witness_via(generator(GeneratorKind::reduction, a), t1, *c2)) return w;
  }
  const CanonicalForm c = b_canonical_with_word(t2);
  return witness_via(generator(GeneratorKind::plain_swap, t1.field()), t1, c);
}

std::vector<FieldElement> quadratic_roots(const Polynomial& g) {
  const Field f = g.field();
  if (g.degree() == 1) return {-g.coeff(0) / g.coeff(1)};
  if (g.degree() != 2) return {};
  const FieldElement two = FieldElement::from_int(f, 2);
  const FieldElement b = g.coeff(1) / g.coeff(2), c = g.coeff(0) / g.coeff(2);
  FieldElement disc = b * b - FieldElement::from_int(f, 4) * c;
  std::optional<FieldElement> r = sqrt_in_field(disc);
  FieldElement bb = b;
  if (!r) {
    const Field big = adjoin_sqrt(disc);
    bb = embed(b, big), disc = embed(disc, big);
    r = sqrt_in_field(disc);
  }
  const FieldElement h = embed(two, bb.field()).inverse();
  FieldElement x = (-bb + *r) * h, y = (-bb - *r) * h;
  if (precedes(y, x)) std::swap(x, y);
  if (x == y) return {x};
  return {x, y};
}

// Candidates a with U1 + a^2 V1 - 2a W1 proportional to U2: common roots of
// the 2x2 minors, each of degree at most 2 in a.
std::vector<FieldElement> solve_for_a(const Triple& t1, const Triple& t2) {
  const Field f = t1.field();
  const Index n = t1.matrix().cols();
  const FieldElement m2 = FieldElement::from_int(f, -2);
  std::vector<Polynomial> p;
  for (Index i = 0; i < n; ++i)
    p.push_back(Polynomial(f, {t1.u()(i), m2 * t1.w()(i), t1.v()(i)}));
  Polynomial g(f);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) g = gcd(g, t2.u()(j) * p[i] - t2.u()(i) * p[j]);
  if (g.is_zero()) throw Error(Errc::search_exhausted, "constraint polynomials vanish identically");
  return quadratic_roots(g);
}

}  // namespace

ClassRelation same_class(const Triple& t1, const Triple& t2, SearchDomain search) {
  if (!(t1.curve() == t2.curve())) throw Error(Errc::descriptor_mismatch, "triples lie on different curves");
  const Field k = common_field(t1.field(), t2.field());
  ClassRelation out;
  if (k.is_finite()) {
    if (search.extension_degree < 1) throw Error(Errc::length_mismatch, "extension degree must be at least 1");
    out.search_field = extension(k, search.extension_degree);
  } else {
    out.search_field = k;
  }
  const Field f = out.search_field;
  const Triple a = t1.embed(f), b = t2.embed(f), bc = conjugate(b);
  if (gram(a) != gram(b)) return out;
  if (f.is_finite()) {
    const std::vector<FieldElement> as = elements(f);
    out.witness = try_candidates(as, a, b);
    out.conjugate_witness = try_candidates(as, a, bc);
  } else {
    out.witness = try_candidates(solve_for_a(a, b), a, b);
    out.conjugate_witness = try_candidates(solve_for_a(a, bc), a, bc);
  }
  out.kind = combine_kind(out.witness.has_value(), out.conjugate_witness.has_value());
  return out;
}

ClassKind orbit_oracle(const Triple& t1, const Triple& t2) {
  if (!(t1.curve() == t2.curve())) throw Error(Errc::descriptor_mismatch, "triples lie on different curves");
  const Field f = common_field(t1.field(), t2.field());
  const Triple a = t1.embed(f);
  const Triple c2 = b_canonical(t2.embed(f)), c2bar = b_canonical(conjugate(t2.embed(f)));
  bool equal = false, conj = false;
  for (const auto& m : enumerate_so3(f)) {
    const Triple c = b_canonical(act(m, a));
    equal = equal || c == c2;
    conj = conj || c == c2bar;
    if (equal && conj) break;
  }
  return combine_kind(equal, conj);
}

}  // namespace hypdiv

#include "hypdiv/polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace hypdiv {

Polynomial::Polynomial(Field f, std::vector<FieldElement> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = c.typed(f);
  trim();
}

Polynomial::Polynomial(Field f, std::initializer_list<std::int64_t> coeffs) : field_(f) {
  for (auto c : coeffs) coeffs_.push_back(FieldElement::from_int(f, c));
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::monomial(const FieldElement& c, int k) {
  std::vector<FieldElement> v(k + 1, FieldElement::zero(c.field()));
  v[k] = c;
  return Polynomial(c.field(), std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return FieldElement::zero(field_);
  return coeffs_[i];
}

FieldElement Polynomial::leading() const {
  if (is_zero()) throw Error(Errc::zero_polynomial, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(FieldElement::from_int(field_, i) * coeffs_[i]);
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::embed(Field target) const {
  if (target == field_) return *this;
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto& a : coeffs_) c.push_back(hypdiv::embed(a, target));
  return Polynomial(target, std::move(c));
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  const Field target = x.is_typed() ? x.field() : field_;
  FieldElement acc = FieldElement::zero(target);
  for (int i = degree(); i >= 0; --i) acc = acc * x + hypdiv::embed(coeffs_[i], target);
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(Errc::descriptor_mismatch, "polynomials over different fields");
  std::vector<FieldElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.field_ != b.field_) throw Error(Errc::descriptor_mismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  std::vector<FieldElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const FieldElement& s, const Polynomial& a) {
  std::vector<FieldElement> c;
  c.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) c.push_back(s * x);
  return Polynomial(a.field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const FieldElement& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one() || i == 0) os << c;
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (f.field() != g.field()) throw Error(Errc::descriptor_mismatch, "polynomials over different fields");
  const Field k = f.field();
  if (f.degree() < g.degree()) return {Polynomial(k), f};
  std::vector<FieldElement> rem = f.coeffs();
  std::vector<FieldElement> quot(f.degree() - g.degree() + 1, FieldElement::zero(k));
  const FieldElement lead_inv = g.leading().inverse();
  const int dg = g.degree();
  for (int i = f.degree(); i >= dg; --i) {
    const FieldElement c = rem[i] * lead_inv;
    quot[i - dg] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dg; ++j) rem[i - dg + j] = rem[i - dg + j] - c * g.coeffs()[j];
  }
  rem.resize(dg);
  return {Polynomial(k, std::move(quot)), Polynomial(k, std::move(rem))};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool is_squarefree(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "squarefree test of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

int root_multiplicity(const Polynomial& f, const FieldElement& r) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "multiplicity in the zero polynomial");
  const Field k = r.field();
  Polynomial g = f.embed(k);
  const Polynomial lin(k, {-r, FieldElement::one(k)});
  int mult = 0;
  for (;;) {
    auto [q, rem] = divmod(g, lin);
    if (!rem.is_zero()) return mult;
    ++mult;
    g = std::move(q);
  }
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<FieldElement> rational_roots(const Polynomial& f, Field target) {
  // Clear denominators, then strip the power of X.
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : f.coeffs()) ints.push_back(mpz_class(c.rational() * lcm));
  std::vector<FieldElement> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  const Field q = Field::rationals();
  std::set<mpq_class> candidates;
  if (low + 1 < ints.size()) {
    for (const auto& num : positive_divisors(ints[low]))
      for (const auto& den : positive_divisors(ints.back())) {
        mpq_class c(num, den);
        c.canonicalize();
        candidates.insert(c);
        candidates.insert(-c);
      }
  }
  if (low > 0) candidates.insert(mpq_class(0));
  for (const auto& c : candidates) {
    const int mult = root_multiplicity(f, FieldElement::from_rational(q, c));
    for (int i = 0; i < mult; ++i) roots.push_back(FieldElement::from_rational(target, c));
  }
  return roots;
}

}  // namespace

std::vector<FieldElement> roots_in_field(const Polynomial& f, Field target) {
  if (f.is_zero()) throw Error(Errc::zero_polynomial, "roots of the zero polynomial");
  if (target.kind() == Field::Kind::number_field)
    throw Error(Errc::not_supported, "root finding over number fields");
  if (target.kind() == Field::Kind::rationals) return rational_roots(f, target);
  if (target.order() > (std::uint64_t{1} << 22))
    throw Error(Errc::field_too_large, target.name() + " is too large for exhaustive root search");
  const Polynomial g = f.embed(target);
  std::vector<FieldElement> roots;
  int found = 0;
  for (std::uint64_t idx = 0; idx < target.order() && found < g.degree(); ++idx) {
    const FieldElement x = FieldElement::from_index(target, idx);
    if (!g(x).is_zero()) continue;
    const int mult = root_multiplicity(g, x);
    for (int i = 0; i < mult; ++i) roots.push_back(x);
    found += mult;
  }
  return roots;
}

}  // namespace hypdiv

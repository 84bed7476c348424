#include "hypdiv/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace hypdiv {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::descriptor_mismatch: return "DescriptorMismatch";
    case Errc::invalid_field: return "InvalidField";
    case Errc::not_finite_field: return "NotFiniteField";
    case Errc::not_supported: return "NotSupported";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::wrong_degree_parity: return "WrongDegreeParity";
    case Errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case Errc::characteristic_two: return "CharacteristicTwo";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::degree_too_high: return "DegreeTooHigh";
    case Errc::not_on_curve: return "NotOnCurve";
    case Errc::zero_form: return "ZeroForm";
    case Errc::rationals_unsupported: return "RationalsUnsupported";
    case Errc::not_orthogonal: return "NotOrthogonal";
    case Errc::zero_scale: return "ZeroScale";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::degenerate_result: return "DegenerateResult";
    case Errc::search_exhausted: return "SearchExhausted";
    case Errc::gram_mismatch: return "GramMismatch";
    case Errc::factorization_needs_extension: return "FactorizationNeedsExtension";
    case Errc::not_in_qc: return "NotInQC";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::rationals_need_hint: return "RationalsNeedHint";
    case Errc::not_in_ambient: return "NotInAmbient";
    case Errc::parse_error: return "ParseError";
    case Errc::not_symmetric: return "NotSymmetric";
  }
  return "Unknown";
}

namespace detail {

struct FieldData {
  Field::Kind kind = Field::Kind::rationals;
  std::int64_t p = 0;
  int m = 1;
  std::vector<std::int64_t> fp_modulus;
  std::vector<mpq_class> q_modulus;
  std::uint64_t order = 0;
  std::string name;
  std::string key;
};

}  // namespace detail

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw Error(Errc::division_by_zero, "element is not invertible");
  return mod(s0, p);
}

std::string poly_name(const std::vector<std::int64_t>& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::string poly_name(const std::vector<mpq_class>& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first && c[i] > 0) os << "+";
    first = false;
    if (c[i] != 1 || i == 0) os << c[i].get_str();
    if (i >= 1) os << "T";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<detail::FieldData>>& registry() {
  static std::map<std::string, std::unique_ptr<detail::FieldData>> r;
  return r;
}

// Remainder of a by monic b over F_p; vectors lowest degree first.
std::vector<std::int64_t> poly_rem_mod_p(std::vector<std::int64_t> a, std::span<const std::int64_t> b,
                                         std::int64_t p) {
  const int db = static_cast<int>(b.size()) - 1;
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    const std::int64_t c = a[k];
    if (c == 0) continue;
    for (int i = 0; i <= db; ++i) a[k - db + i] = mod(a[k - db + i] - c * b[i], p);
  }
  a.resize(std::min<std::size_t>(a.size(), static_cast<std::size_t>(db)));
  return a;
}

std::uint64_t checked_order(std::int64_t p, int m) {
  unsigned __int128 q = 1;
  for (int i = 0; i < m; ++i) {
    q *= static_cast<unsigned __int128>(p);
    if (q > (static_cast<unsigned __int128>(1) << 62))
      throw Error(Errc::invalid_field, "field order exceeds 2^62");
  }
  return static_cast<std::uint64_t>(q);
}

void check_characteristic(std::int64_t p) {
  if (p == 2) throw Error(Errc::characteristic_two, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(Errc::invalid_field, "p = " + std::to_string(p) + " is not prime");
  if (p >= (std::int64_t{1} << 31)) throw Error(Errc::invalid_field, "p must be below 2^31");
}

}  // namespace

Field intern_field(detail::FieldData&& d) {
  std::lock_guard lock(registry_mutex());
  auto& r = registry();
  auto it = r.find(d.key);
  if (it == r.end()) {
    auto key = d.key;
    it = r.emplace(key, std::make_unique<detail::FieldData>(std::move(d))).first;
  }
  return Field(it->second.get());
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible_mod_p(std::span<const std::int64_t> monic, std::int64_t p) {
  const int deg = static_cast<int>(monic.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    std::vector<std::int64_t> divisor(d + 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
        rest /= static_cast<std::uint64_t>(p);
      }
      divisor[d] = 1;
      auto r = poly_rem_mod_p(std::vector<std::int64_t>(monic.begin(), monic.end()), divisor, p);
      if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

Field Field::rationals() {
  detail::FieldData d;
  d.kind = Kind::rationals;
  d.name = "Q";
  d.key = "Q";
  return intern_field(std::move(d));
}

Field Field::prime(std::int64_t p) {
  check_characteristic(p);
  detail::FieldData d;
  d.kind = Kind::prime_field;
  d.p = p;
  d.m = 1;
  d.order = static_cast<std::uint64_t>(p);
  d.name = "GF(" + std::to_string(p) + ")";
  d.key = d.name;
  return intern_field(std::move(d));
}

Field Field::finite(std::int64_t p, int m) {
  check_characteristic(p);
  if (m < 1 || m > kMaxExtensionDegree)
    throw Error(Errc::invalid_field, "extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");
  if (m == 1) return prime(p);
  static std::mutex mutex;
  static std::map<std::pair<std::int64_t, int>, Field> defaults;
  {
    std::lock_guard lock(mutex);
    auto it = defaults.find({p, m});
    if (it != defaults.end()) return it->second;
  }
  const std::uint64_t count = checked_order(p, m);
  std::vector<std::int64_t> c(m + 1);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int i = 0; i < m; ++i) {
      c[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
      rest /= static_cast<std::uint64_t>(p);
    }
    c[m] = 1;
    if (is_irreducible_mod_p(c, p)) {
      const Field f = finite(p, c);
      std::lock_guard lock(mutex);
      defaults.emplace(std::make_pair(p, m), f);
      return f;
    }
  }
  throw Error(Errc::invalid_field, "no irreducible polynomial found");
}

Field Field::finite(std::int64_t p, std::vector<std::int64_t> modulus) {
  check_characteristic(p);
  for (auto& c : modulus) c = mod(c, p);
  const int m = static_cast<int>(modulus.size()) - 1;
  if (m < 1 || modulus.back() != 1) throw Error(Errc::invalid_field, "modulus must be monic of degree >= 1");
  if (m == 1) return prime(p);
  if (m > kMaxExtensionDegree) throw Error(Errc::invalid_field, "extension degree too large");
  const std::uint64_t order = checked_order(p, m);
  if (!is_irreducible_mod_p(modulus, p)) throw Error(Errc::invalid_field, "modulus is reducible over GF(p)");
  detail::FieldData d;
  d.kind = Kind::extension_field;
  d.p = p;
  d.m = m;
  d.order = order;
  d.name = "GF(" + std::to_string(p) + "^" + std::to_string(m) + "; " + poly_name(modulus) + ")";
  d.key = d.name;
  d.fp_modulus = std::move(modulus);
  return intern_field(std::move(d));
}

Field Field::number_field(std::vector<mpq_class> modulus) {
  if (modulus.size() != 3 || modulus[2] != 1)
    throw Error(Errc::invalid_field, "number fields must be given by a monic quadratic");
  for (auto& c : modulus) c.canonicalize();
  mpq_class disc = modulus[1] * modulus[1] - 4 * modulus[0];
  const bool square = disc >= 0 && mpz_perfect_square_p(disc.get_num_mpz_t()) != 0 &&
                      mpz_perfect_square_p(disc.get_den_mpz_t()) != 0;
  if (square) throw Error(Errc::invalid_field, "modulus has a rational root");
  detail::FieldData d;
  d.kind = Kind::number_field;
  d.m = 2;
  d.name = "Q[T]/(" + poly_name(modulus) + ")";
  d.key = d.name;
  d.q_modulus = std::move(modulus);
  return intern_field(std::move(d));
}

Field::Kind Field::kind() const { return data_->kind; }
bool Field::is_finite() const {
  return data_->kind == Kind::prime_field || data_->kind == Kind::extension_field;
}
std::int64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->m; }
std::uint64_t Field::order() const {
  if (!is_finite()) throw Error(Errc::not_finite_field, "order of an infinite field");
  return data_->order;
}
const std::vector<std::int64_t>& Field::fp_modulus() const { return data_->fp_modulus; }
const std::vector<mpq_class>& Field::q_modulus() const { return data_->q_modulus; }
Field Field::prime_subfield() const { return is_finite() ? prime(data_->p) : rationals(); }
const std::string& Field::name() const {
  static const std::string none = "<untyped>";
  return data_ ? data_->name : none;
}

std::ostream& operator<<(std::ostream& os, Field f) { return os << f.name(); }

// ---------------------------------------------------------------------------
// FieldElement

FieldElement FieldElement::from_int(Field f, std::int64_t n) {
  FieldElement e;
  e.field_ = f;
  if (f.is_finite()) {
    e.c_[0] = mod(n, f.characteristic());
  } else {
    e.q_.assign(f.degree(), mpq_class(0));
    e.q_[0] = n;
  }
  return e;
}

FieldElement FieldElement::from_rational(Field f, const mpq_class& q) {
  if (!f.is_finite()) {
    FieldElement e = from_int(f, 0);
    e.q_[0] = q;
    e.q_[0].canonicalize();
    return e;
  }
  const std::int64_t p = f.characteristic();
  mpz_class num = q.get_num() % p, den = q.get_den() % p;
  if (den == 0) throw Error(Errc::division_by_zero, "denominator divisible by the characteristic");
  return from_int(f, mod(num.get_si(), p) * inv_mod(den.get_si(), p) % p);
}

FieldElement FieldElement::from_coeffs(Field f, std::span<const std::int64_t> coeffs) {
  if (!f.is_finite()) throw Error(Errc::not_finite_field, "integer coefficient vector for an infinite field");
  if (static_cast<int>(coeffs.size()) > f.degree())
    throw Error(Errc::length_mismatch, "too many coefficients for " + f.name());
  FieldElement e;
  e.field_ = f;
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c_[i] = mod(coeffs[i], f.characteristic());
  return e;
}

FieldElement FieldElement::from_q_coeffs(Field f, std::vector<mpq_class> coeffs) {
  if (f.is_finite()) throw Error(Errc::descriptor_mismatch, "rational coefficients for a finite field");
  if (static_cast<int>(coeffs.size()) > f.degree())
    throw Error(Errc::length_mismatch, "too many coefficients for " + f.name());
  coeffs.resize(f.degree(), mpq_class(0));
  for (auto& c : coeffs) c.canonicalize();
  FieldElement e;
  e.field_ = f;
  e.q_ = std::move(coeffs);
  return e;
}

FieldElement FieldElement::from_index(Field f, std::uint64_t index) {
  if (!f.is_finite()) throw Error(Errc::not_finite_field, "index of an infinite field element");
  if (index >= f.order()) throw Error(Errc::length_mismatch, "index out of range");
  FieldElement e;
  e.field_ = f;
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  for (int i = 0; i < f.degree(); ++i) {
    e.c_[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return e;
}

bool FieldElement::is_zero() const {
  if (!field_) return c_[0] == 0;
  if (field_.is_finite()) {
    for (int i = 0; i < field_.degree(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  return std::all_of(q_.begin(), q_.end(), [](const mpq_class& c) { return c == 0; });
}

bool FieldElement::is_one() const {
  if (!field_) return c_[0] == 1;
  return *this == one(field_);
}

std::uint64_t FieldElement::index() const {
  if (!field_ || !field_.is_finite()) throw Error(Errc::not_finite_field, "index of a non finite-field element");
  std::uint64_t idx = 0;
  const auto p = static_cast<std::uint64_t>(field_.characteristic());
  for (int i = field_.degree() - 1; i >= 0; --i) idx = idx * p + static_cast<std::uint64_t>(c_[i]);
  return idx;
}

std::int64_t FieldElement::coeff(int i) const {
  if (field_ && !field_.is_finite()) throw Error(Errc::descriptor_mismatch, "integer coefficient of a rational element");
  return (i >= 0 && i < kMaxExtensionDegree) ? c_[i] : 0;
}

mpq_class FieldElement::rational() const {
  if (!field_) return mpq_class(c_[0]);
  if (field_.is_finite()) throw Error(Errc::descriptor_mismatch, "rational value of a finite-field element");
  if (!in_prime_subfield()) throw Error(Errc::descriptor_mismatch, "element does not lie in Q");
  return q_[0];
}

bool FieldElement::in_prime_subfield() const {
  if (!field_) return true;
  if (field_.is_finite()) {
    for (int i = 1; i < field_.degree(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  for (std::size_t i = 1; i < q_.size(); ++i)
    if (q_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::typed(Field f) const {
  if (field_) {
    if (field_ == f) return *this;
    throw Error(Errc::descriptor_mismatch, "element of " + field_.name() + " used in " + f.name());
  }
  return from_int(f, c_[0]);
}

namespace {

// Brings both operands into one field; returns false when both are untyped.
bool unify(const FieldElement& a, const FieldElement& b, FieldElement& ta, FieldElement& tb,
           const FieldElement*& pa, const FieldElement*& pb) {
  pa = &a;
  pb = &b;
  if (a.field() == b.field()) return static_cast<bool>(a.field());
  if (!a.is_typed()) {
    ta = a.typed(b.field());
    pa = &ta;
    return true;
  }
  if (!b.is_typed()) {
    tb = b.typed(a.field());
    pb = &tb;
    return true;
  }
  throw Error(Errc::descriptor_mismatch, "operands from " + a.field().name() + " and " + b.field().name());
}

}  // namespace

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  if (!field_) {
    r.c_[0] = -c_[0];
  } else if (field_.is_finite()) {
    const std::int64_t p = field_.characteristic();
    for (int i = 0; i < field_.degree(); ++i) r.c_[i] = c_[i] == 0 ? 0 : p - c_[i];
  } else {
    for (auto& c : r.q_) c = -c;
  }
  return r;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement ta, tb;
  const FieldElement *x, *y;
  if (!unify(a, b, ta, tb, x, y)) return FieldElement(a.c_[0] + b.c_[0]);
  FieldElement r = *x;
  const Field f = x->field_;
  if (f.is_finite()) {
    const std::int64_t p = f.characteristic();
    for (int i = 0; i < f.degree(); ++i) {
      const std::int64_t s = x->c_[i] + y->c_[i];
      r.c_[i] = s >= p ? s - p : s;
    }
  } else {
    for (std::size_t i = 0; i < r.q_.size(); ++i) r.q_[i] += y->q_[i];
  }
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement ta, tb;
  const FieldElement *x, *y;
  if (!unify(a, b, ta, tb, x, y)) return FieldElement(a.c_[0] - b.c_[0]);
  FieldElement r = *x;
  const Field f = x->field_;
  if (f.is_finite()) {
    const std::int64_t p = f.characteristic();
    for (int i = 0; i < f.degree(); ++i) {
      const std::int64_t s = x->c_[i] - y->c_[i];
      r.c_[i] = s < 0 ? s + p : s;
    }
  } else {
    for (std::size_t i = 0; i < r.q_.size(); ++i) r.q_[i] -= y->q_[i];
  }
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement ta, tb;
  const FieldElement *x, *y;
  if (!unify(a, b, ta, tb, x, y)) return FieldElement(a.c_[0] * b.c_[0]);
  FieldElement r;
  r.field_ = x->field_;
  const Field f = x->field_;
  const int m = f.degree();
  if (f.is_finite()) {
    const std::int64_t p = f.characteristic();
    if (m == 1) {
      r.c_[0] = x->c_[0] * y->c_[0] % p;
      return r;
    }
    std::array<std::int64_t, 2 * kMaxExtensionDegree> prod{};
    for (int i = 0; i < m; ++i) {
      if (x->c_[i] == 0) continue;
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + x->c_[i] * y->c_[j]) % p;
    }
    const auto& md = f.fp_modulus();
    for (int k = 2 * m - 2; k >= m; --k) {
      const std::int64_t c = prod[k];
      if (c == 0) continue;
      for (int i = 0; i < m; ++i) prod[k - m + i] = mod(prod[k - m + i] - c * md[i], p);
    }
    for (int i = 0; i < m; ++i) r.c_[i] = prod[i];
    return r;
  }
  if (m == 1) {
    r.q_ = {x->q_[0] * y->q_[0]};
    return r;
  }
  std::vector<mpq_class> prod(2 * m - 1, mpq_class(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) prod[i + j] += x->q_[i] * y->q_[j];
  const auto& md = f.q_modulus();
  for (int k = 2 * m - 2; k >= m; --k) {
    const mpq_class c = prod[k];
    for (int i = 0; i < m; ++i) prod[k - m + i] -= c * md[i];
  }
  prod.resize(m);
  r.q_ = std::move(prod);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  if (!field_) {
    if (c_[0] == 1 || c_[0] == -1) return *this;
    throw Error(Errc::descriptor_mismatch, "inverse of an untyped constant");
  }
  if (field_.is_finite()) {
    if (field_.degree() == 1) {
      FieldElement r = *this;
      r.c_[0] = inv_mod(c_[0], field_.characteristic());
      return r;
    }
    return pow(field_.order() - 2);
  }
  FieldElement r = *this;
  if (field_.degree() == 1) {
    r.q_[0] = 1 / q_[0];
    return r;
  }
  // (a0 + a1 T)(x0 + x1 T) = 1 modulo T^2 + c1 T + c0.
  const auto& md = field_.q_modulus();
  const mpq_class &a0 = q_[0], &a1 = q_[1], &c0 = md[0], &c1 = md[1];
  const mpq_class norm = a0 * (a0 - c1 * a1) + c0 * a1 * a1;
  r.q_[0] = (a0 - c1 * a1) / norm;
  r.q_[1] = -a1 / norm;
  return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (!a.is_typed() && !b.is_typed()) {
    if (b.c_[0] == 0) throw Error(Errc::division_by_zero, "division by zero");
    if (a.c_[0] % b.c_[0] != 0) throw Error(Errc::descriptor_mismatch, "inexact untyped division");
    return FieldElement(a.c_[0] / b.c_[0]);
  }
  const Field f = a.is_typed() ? a.field() : b.field();
  return a * b.typed(b.is_typed() ? b.field() : f).inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  FieldElement ta, tb;
  const FieldElement *x, *y;
  if (!unify(a, b, ta, tb, x, y)) return a.c_[0] == b.c_[0];
  if (x->field_.is_finite()) {
    for (int i = 0; i < x->field_.degree(); ++i)
      if (x->c_[i] != y->c_[i]) return false;
    return true;
  }
  return x->q_ == y->q_;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this;
  FieldElement result = field_ ? one(field_) : FieldElement(1);
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

bool precedes(const FieldElement& a, const FieldElement& b) {
  if (!a.is_typed() || !b.is_typed() || a.field() != b.field())
    throw Error(Errc::descriptor_mismatch, "ordering requires elements of one field");
  if (a.field().is_finite()) return a.index() < b.index();
  return std::lexicographical_compare(a.q_coeffs().rbegin(), a.q_coeffs().rend(), b.q_coeffs().rbegin(),
                                      b.q_coeffs().rend());
}

FieldElement principal_root(const FieldElement& r) {
  const FieldElement n = -r;
  if (r.field().is_finite()) return precedes(n, r) ? n : r;
  const auto& c = r.q_coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    if (*it != 0) return *it > 0 ? r : n;
  return r;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) {
  if (!a.is_typed()) return os << "int(" << a.coeff(0) << ")";
  const Field f = a.field();
  if (f.is_finite()) {
    if (f.degree() == 1) return os << a.coeff(0);
    os << "[";
    for (int i = 0; i < f.degree(); ++i) os << (i ? "," : "") << a.coeff(i);
    return os << "]";
  }
  if (f.degree() == 1) return os << a.q_coeffs()[0].get_str();
  os << "[";
  for (std::size_t i = 0; i < a.q_coeffs().size(); ++i) os << (i ? "," : "") << a.q_coeffs()[i].get_str();
  return os << "]";
}

std::string to_string(const FieldElement& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

FieldElement frobenius(const FieldElement& a, unsigned power) {
  if (!a.is_typed() || !a.field().is_finite()) throw Error(Errc::not_finite_field, "Frobenius needs a finite field");
  FieldElement r = a;
  const auto p = static_cast<std::uint64_t>(a.field().characteristic());
  for (unsigned i = 0; i < power; ++i) r = r.pow(p);
  return r;
}

// ---------------------------------------------------------------------------
// Embeddings

namespace {

std::mutex& embed_mutex() {
  static std::mutex m;
  return m;
}

// Powers theta^0 .. theta^{m-1} of the chosen root of from's modulus in `to`.
const std::vector<FieldElement>& root_powers(Field from, Field to) {
  static std::map<std::pair<const detail::FieldData*, const detail::FieldData*>, std::vector<FieldElement>> cache;
  {
    std::lock_guard lock(embed_mutex());
    auto it = cache.find({from.data(), to.data()});
    if (it != cache.end()) return it->second;
  }
  const auto& md = from.fp_modulus();
  const std::uint64_t n = to.order();
  std::optional<FieldElement> root;
  for (std::uint64_t idx = 0; idx < n && !root; ++idx) {
    const FieldElement x = FieldElement::from_index(to, idx);
    FieldElement acc = FieldElement::zero(to);
    for (int i = static_cast<int>(md.size()) - 1; i >= 0; --i) acc = acc * x + FieldElement::from_int(to, md[i]);
    if (acc.is_zero()) root = x;
  }
  if (!root) throw Error(Errc::descriptor_mismatch, from.name() + " does not embed into " + to.name());
  std::vector<FieldElement> powers;
  FieldElement pw = FieldElement::one(to);
  for (int i = 0; i < from.degree(); ++i) {
    powers.push_back(pw);
    pw = pw * *root;
  }
  std::lock_guard lock(embed_mutex());
  return cache.emplace(std::make_pair(from.data(), to.data()), std::move(powers)).first->second;
}

}  // namespace

bool embeds_into(Field from, Field to) {
  if (from == to) return true;
  if (!from || !to) return false;
  if (from.kind() == Field::Kind::rationals) return to.is_rational_based();
  if (!from.is_finite() || !to.is_finite()) return false;
  if (from.characteristic() != to.characteristic()) return false;
  return to.degree() % from.degree() == 0;
}

FieldElement embed(const FieldElement& a, Field target) {
  if (!a.is_typed()) return a.typed(target);
  const Field from = a.field();
  if (from == target) return a;
  if (!embeds_into(from, target))
    throw Error(Errc::descriptor_mismatch, from.name() + " does not embed into " + target.name());
  if (from.kind() == Field::Kind::rationals) return FieldElement::from_rational(target, a.rational());
  if (from.degree() == 1) return FieldElement::from_int(target, a.coeff(0));
  const auto& powers = root_powers(from, target);
  FieldElement r = FieldElement::zero(target);
  for (int i = 0; i < from.degree(); ++i)
    if (a.coeff(i) != 0) r = r + FieldElement::from_int(target, a.coeff(i)) * powers[i];
  return r;
}

Field common_field(Field a, Field b) {
  if (embeds_into(a, b)) return b;
  if (embeds_into(b, a)) return a;
  throw Error(Errc::descriptor_mismatch, "no common field for " + a.name() + " and " + b.name());
}

Field extension(Field base, int degree) {
  if (degree == 1) return base;
  if (!base.is_finite()) throw Error(Errc::not_supported, "finite extensions of " + base.name() + " need a modulus");
  return Field::finite(base.characteristic(), base.degree() * degree);
}

Field adjoin_sqrt(const FieldElement& d) {
  const Field f = d.field();
  if (is_square(d)) return f;
  if (f.is_finite()) return extension(f, 2);
  if (f.kind() == Field::Kind::rationals) return Field::number_field({-d.rational(), mpq_class(0), mpq_class(1)});
  throw Error(Errc::not_supported, "towers of number fields");
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return mpq_class(n, d);
}

std::optional<FieldElement> finite_sqrt(const FieldElement& a) {
  const Field f = a.field();
  const std::uint64_t q = f.order();
  const FieldElement one = FieldElement::one(f);
  if (a.is_zero()) return a;
  if (a.pow((q - 1) / 2) != one) return std::nullopt;
  std::uint64_t t = q - 1;
  unsigned s = 0;
  while ((t & 1u) == 0) {
    t >>= 1u;
    ++s;
  }
  FieldElement z = one;
  for (std::uint64_t idx = 2; idx < q; ++idx) {
    z = FieldElement::from_index(f, idx);
    if (z.pow((q - 1) / 2) != one) break;
  }
  unsigned m = s;
  FieldElement c = z.pow(t), tt = a.pow(t), r = a.pow((t + 1) / 2);
  while (tt != one) {
    unsigned i = 0;
    FieldElement probe = tt;
    while (probe != one) {
      probe = probe * probe;
      ++i;
    }
    FieldElement b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = b * b;
    m = i;
    c = b * b;
    tt = tt * c;
    r = r * b;
  }
  const FieldElement other = -r;
  return precedes(other, r) ? other : r;
}

}  // namespace

std::optional<FieldElement> sqrt_in_field(const FieldElement& a) {
  if (!a.is_typed()) throw Error(Errc::descriptor_mismatch, "square root of an untyped constant");
  const Field f = a.field();
  if (f.is_finite()) return finite_sqrt(a);
  if (!a.in_prime_subfield()) throw Error(Errc::not_supported, "square roots of irrational number-field elements");
  const mpq_class q = a.rational();
  if (auto r = rational_sqrt(q)) return FieldElement::from_rational(f, *r);
  if (f.kind() == Field::Kind::rationals) return std::nullopt;
  // In Q(sqrt D) a rational q is a square iff q or q/D is a rational square;
  // sqrt D = 2T + c1 for modulus T^2 + c1 T + c0.
  const auto& md = f.q_modulus();
  const mpq_class disc = md[1] * md[1] - 4 * md[0];
  if (auto s = rational_sqrt(q / disc)) return FieldElement::from_q_coeffs(f, {*s * md[1], *s * 2});
  return std::nullopt;
}

bool is_square(const FieldElement& a) { return sqrt_in_field(a).has_value(); }

std::vector<FieldElement> elements(Field f) {
  if (!f.is_finite()) throw Error(Errc::not_finite_field, "cannot enumerate " + f.name());
  if (f.order() > (std::uint64_t{1} << 22)) throw Error(Errc::field_too_large, f.name() + " is too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(f.order());
  for (std::uint64_t i = 0; i < f.order(); ++i) out.push_back(FieldElement::from_index(f, i));
  return out;
}

FieldElement random_element(Field f, std::mt19937_64& rng) {
  if (f.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    return FieldElement::from_index(f, dist(rng));
  }
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<mpq_class> c;
  c.reserve(f.degree());
  for (int i = 0; i < f.degree(); ++i) c.emplace_back(num(rng), den(rng));
  return FieldElement::from_q_coeffs(f, std::move(c));
}

FieldElement random_nonzero(Field f, std::mt19937_64& rng) {
  for (;;) {
    FieldElement x = random_element(f, rng);
    if (!x.is_zero()) return x;
  }
}

}  // namespace hypdiv

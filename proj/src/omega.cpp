#include "hypdiv/omega.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <ostream>
#include <set>

namespace hypdiv {

namespace {

FieldElement k(Field f, std::int64_t n) { return FieldElement::from_int(f, n); }

Matrix3 matrix3(Field f, std::initializer_list<FieldElement> entries) {
  Matrix3 m;
  auto it = entries.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = embed(*it++, f);
  return m;
}

Matrix3 omega_inverse(Field f) {
  return matrix3(f, {k(f, 0), k(f, -2), k(f, 0), k(f, -2), k(f, 0), k(f, 0), k(f, 0), k(f, 0), k(f, 1)});
}

}  // namespace

Matrix3 omega(Field f) {
  if (f.is_finite() && f.characteristic() == 2) throw Error(Errc::characteristic_two, "Ω needs 1/2");
  const FieldElement h = -k(f, 2).inverse();
  return matrix3(f, {k(f, 0), h, k(f, 0), h, k(f, 0), k(f, 0), k(f, 0), k(f, 0), k(f, 1)});
}

Orthogonality is_orthogonal(const Matrix3& a) {
  const Field f = field_of(a);
  if (!f) return Orthogonality::not_orthogonal;
  const Matrix3 t = embed_matrix(a, f);
  const Matrix3 om = omega(f);
  const Matrix3 lhs = t.transpose() * om * t;
  if (!same_matrix(lhs, om)) return Orthogonality::not_orthogonal;
  const FieldElement det = determinant(t);
  if (det.is_one()) return Orthogonality::proper;
  if ((-det).is_one()) return Orthogonality::improper;
  return Orthogonality::not_orthogonal;
}

OrthMatrix make_orth(const Matrix3& a) {
  const Field f = field_of(a);
  const Orthogonality o = is_orthogonal(a);
  if (o == Orthogonality::not_orthogonal) throw Error(Errc::not_orthogonal, "A* Ω A differs from Ω");
  return OrthMatrix(embed_matrix(a, f), k(f, o == Orthogonality::proper ? 1 : -1), f);
}

OrthMatrix identity_orth(Field f) { return make_orth(identity_matrix(3, f)); }

OrthMatrix OrthMatrix::inverse() const {
  return OrthMatrix(omega_inverse(field_) * m_.transpose() * omega(field_), det_, field_);
}

OrthMatrix OrthMatrix::embed(Field target) const {
  if (target == field_) return *this;
  return OrthMatrix(embed_matrix(m_, target), hypdiv::embed(det_, target), target);
}

OrthMatrix operator*(const OrthMatrix& a, const OrthMatrix& b) {
  const Field f = common_field(a.field_, b.field_);
  const OrthMatrix x = a.embed(f), y = b.embed(f);
  return OrthMatrix(x.m_ * y.m_, x.det_ * y.det_, f);
}

std::ostream& operator<<(std::ostream& os, const OrthMatrix& a) {
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ", [" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? ", " : "") << a.entries()(i, j);
    os << "]";
  }
  return os << "]";
}

OrthMatrix generator(GeneratorKind kind, const FieldElement& param) {
  const Field f = param.field();
  const FieldElement z = k(f, 0), one = k(f, 1), two = k(f, 2);
  const FieldElement& a = param;
  switch (kind) {
    case GeneratorKind::b_scale:
    case GeneratorKind::so3_scale:
      if (a.is_zero()) throw Error(Errc::zero_scale, "scale parameter must be nonzero");
      return make_orth(matrix3(f, {a, z, z, z, a.inverse(), z, z, z, one}));
    case GeneratorKind::b_shift:
      return make_orth(matrix3(f, {one, z, z, a * a, one, -two * a, -a, z, one}));
    case GeneratorKind::so3_swap:
      return make_orth(matrix3(f, {z, one, z, one, a * a, two * a, z, -a, -one}));
    case GeneratorKind::epsilon:
      return make_orth(matrix3(f, {one, z, z, z, one, z, z, z, -one}));
    case GeneratorKind::reduction:
      return make_orth(matrix3(f, {one, a * a, -two * a, z, one, z, z, -a, one}));
    case GeneratorKind::plain_swap:
      return make_orth(matrix3(f, {z, one, z, one, z, z, z, z, -one}));
  }
  throw Error(Errc::not_supported, "unknown generator");
}

OrthMatrix generator(GeneratorKind kind, Field f) { return generator(kind, FieldElement::one(f)); }

Triple act(const OrthMatrix& a, const Triple& t) {
  const Field f = common_field(a.field(), t.field());
  const TripleMatrix rows = a.embed(f).entries() * t.embed(f).matrix();
  return make_triple(t.curve(), rows);
}

OrthMatrix b_word_matrix(const BWord& word) {
  return generator(GeneratorKind::b_shift, word.shift) * generator(GeneratorKind::b_scale, word.scale);
}

std::vector<std::uint64_t> matrix_key(const OrthMatrix& a) {
  std::vector<std::uint64_t> key;
  key.reserve(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) key.push_back(a.entries()(i, j).index());
  return key;
}

const std::vector<OrthMatrix>& enumerate_so3(Field f) {
  if (!f.is_finite()) throw Error(Errc::rationals_unsupported, "SO3(Ω) enumeration needs a finite field");
  if (f.order() > 13) throw Error(Errc::field_too_large, "enumeration is limited to fields with at most 13 elements");
  static std::mutex mutex;
  static std::map<Field, std::vector<OrthMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(f);
    if (it != cache.end()) return it->second;
  }
  constexpr std::size_t kCap = 5000;
  std::vector<OrthMatrix> gens;
  for (const auto& x : elements(f)) {
    if (!x.is_zero()) gens.push_back(generator(GeneratorKind::so3_scale, x));
    gens.push_back(generator(GeneratorKind::so3_swap, x));
  }
  std::map<std::vector<std::uint64_t>, OrthMatrix> seen;
  std::deque<OrthMatrix> queue;
  const OrthMatrix id = identity_orth(f);
  seen.emplace(matrix_key(id), id);
  queue.push_back(id);
  while (!queue.empty()) {
    const OrthMatrix x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      OrthMatrix y = x * g;
      auto key = matrix_key(y);
      if (seen.count(key)) continue;
      seen.emplace(std::move(key), y);
      if (seen.size() > kCap) throw Error(Errc::field_too_large, "SO3(Ω) closure exceeded 5000 elements");
      queue.push_back(std::move(y));
    }
  }
  std::vector<OrthMatrix> group;
  group.reserve(seen.size());
  for (auto& [key, m] : seen) group.push_back(m);
  std::lock_guard lock(mutex);
  return cache.emplace(f, std::move(group)).first->second;
}

OrthMatrix random_orthogonal_word(Field f, std::mt19937_64& rng, int length, bool allow_improper) {
  OrthMatrix acc = identity_orth(f);
  std::uniform_int_distribution<int> pick(0, allow_improper ? 2 : 1);
  for (int i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0: acc = acc * generator(GeneratorKind::so3_scale, random_nonzero(f, rng)); break;
      case 1: acc = acc * generator(GeneratorKind::so3_swap, random_element(f, rng)); break;
      default: acc = acc * generator(GeneratorKind::epsilon, f); break;
    }
  }
  return acc;
}

OrthMatrix random_b_word(Field f, std::mt19937_64& rng, int length) {
  OrthMatrix acc = identity_orth(f);
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < length; ++i) {
    acc = coin(rng) ? acc * generator(GeneratorKind::b_scale, random_nonzero(f, rng))
                    : acc * generator(GeneratorKind::b_shift, random_element(f, rng));
  }
  return acc;
}

}  // namespace hypdiv

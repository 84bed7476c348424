#pragma once

// Dense matrices over FieldElement and exact elimination routines. Eigen
// supplies storage and products; pivoting here only asks "is this entry
// zero", so everything stays exact over every supported field.

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "hypdiv/field.hpp"

namespace hypdiv {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using Matrix3 = Eigen::Matrix<FieldElement, 3, 3>;
using Vector = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<FieldElement, 1, Eigen::Dynamic>;
using TripleMatrix = Eigen::Matrix<FieldElement, 3, Eigen::Dynamic>;

/// Field shared by the typed entries; a null Field when every entry is untyped.
template <class Derived>
Field field_of(const Eigen::MatrixBase<Derived>& m) {
  Field f;
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) {
      const FieldElement& x = m(i, j);
      if (!x.is_typed()) continue;
      if (!f) f = x.field();
      else if (f != x.field()) f = common_field(f, x.field());
    }
  return f;
}

/// Entrywise embedding into `f` (untyped entries are coerced).
template <class Derived>
typename Derived::PlainObject embed_matrix(const Eigen::MatrixBase<Derived>& m, Field f) {
  typename Derived::PlainObject r = m;
  for (Index j = 0; j < r.cols(); ++j)
    for (Index i = 0; i < r.rows(); ++i) r(i, j) = embed(r(i, j), f);
  return r;
}

template <class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) return false;
  return true;
}

/// Shape and entrywise equality (entries of different fields that embed are compared in the larger one).
template <class A, class B>
bool same_matrix(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const Field fa = field_of(a), fb = field_of(b);
  if (fa && fb && fa != fb) {
    const Field f = common_field(fa, fb);
    return same_matrix(embed_matrix(a, f), embed_matrix(b, f));
  }
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline Matrix identity_matrix(Index n, Field f) {
  Matrix m(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) m(i, j) = FieldElement::from_int(f, i == j ? 1 : 0);
  return m;
}

struct Echelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<Index> pivots;    // pivot column of each nonzero row
};

/// Gauss-Jordan elimination using the first nonzero entry as pivot.
template <class Derived>
Echelon row_reduce(const Eigen::MatrixBase<Derived>& m) {
  Echelon out;
  const Field f = field_of(m);
  out.reduced = f ? Matrix(embed_matrix(m, f)) : Matrix(m);
  Matrix& a = out.reduced;
  if (!f) return out;  // only untyped entries: treated as the zero matrix
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    a.row(piv).swap(a.row(row));
    const FieldElement inv = a(row, col).inverse();
    for (Index j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const FieldElement factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - factor * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(row_reduce(m).pivots.size());
}

/// Columns spanning {x : m x = 0}.
template <class Derived>
Matrix kernel_basis(const Eigen::MatrixBase<Derived>& m, Field f) {
  const Echelon e = row_reduce(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (Index p : e.pivots) is_pivot[p] = true;
  Matrix basis(n, n - static_cast<Index>(e.pivots.size()));
  Index k = 0;
  for (Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    for (Index i = 0; i < n; ++i) basis(i, k) = FieldElement::zero(f);
    basis(free, k) = FieldElement::one(f);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -embed(e.reduced(r, free), f);
    ++k;
  }
  return basis;
}

template <class Derived>
std::optional<typename Derived::PlainObject> inverse(const Eigen::MatrixBase<Derived>& m) {
  const Index n = m.rows();
  const Field f = field_of(m);
  if (!f || m.cols() != n) return std::nullopt;
  Matrix aug(n, 2 * n);
  aug.leftCols(n) = embed_matrix(m, f);
  aug.rightCols(n) = identity_matrix(n, f);
  const Echelon e = row_reduce(aug);
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  typename Derived::PlainObject inv = e.reduced.rightCols(n);
  return inv;
}

template <class Derived>
FieldElement determinant(const Eigen::MatrixBase<Derived>& m) {
  const Field f = field_of(m);
  Matrix a = embed_matrix(m, f);
  const Index n = a.rows();
  FieldElement det = FieldElement::one(f);
  for (Index col = 0; col < n; ++col) {
    Index piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return FieldElement::zero(f);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det = det * a(col, col);
    const FieldElement inv = a(col, col).inverse();
    for (Index i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const FieldElement factor = a(i, col) * inv;
      for (Index j = col; j < n; ++j) a(i, j) = a(i, j) - factor * a(col, j);
    }
  }
  return det;
}

/// Entrywise Frobenius x -> x^q.
template <class Derived>
typename Derived::PlainObject power_map(const Eigen::MatrixBase<Derived>& m, std::uint64_t q) {
  typename Derived::PlainObject r = m;
  for (Index j = 0; j < r.cols(); ++j)
    for (Index i = 0; i < r.rows(); ++i) r(i, j) = r(i, j).pow(q);
  return r;
}

/// The element of the subfield `sub` whose image is `a`, if there is one.
inline std::optional<FieldElement> restrict_to(const FieldElement& a, Field sub) {
  const Field big = a.field();
  if (big == sub) return a;
  if (!embeds_into(sub, big)) return std::nullopt;
  if (!big.is_finite()) {
    if (!a.in_prime_subfield()) return std::nullopt;
    return FieldElement::from_rational(sub, a.rational());
  }
  if (a.pow(sub.order()) != a) return std::nullopt;
  if (sub.degree() == 1) return FieldElement::from_int(sub, a.coeff(0));
  // Solve a = Σ c_i embed(T^i) over the prime field.
  const Field fp = sub.prime_subfield();
  const int m = sub.degree(), n = big.degree();
  Matrix system(n, m + 1);
  FieldElement power = FieldElement::one(sub);
  const FieldElement gen = FieldElement::from_index(sub, static_cast<std::uint64_t>(sub.characteristic()));
  for (int i = 0; i < m; ++i) {
    const FieldElement image = embed(power, big);
    for (int r = 0; r < n; ++r) system(r, i) = FieldElement::from_int(fp, image.coeff(r));
    power = power * gen;
  }
  for (int r = 0; r < n; ++r) system(r, m) = FieldElement::from_int(fp, a.coeff(r));
  const Echelon e = row_reduce(system);
  std::vector<std::int64_t> c(m, 0);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m) return std::nullopt;
    c[e.pivots[r]] = e.reduced(static_cast<Index>(r), m).coeff(0);
  }
  return FieldElement::from_coeffs(sub, c);
}

/// Entrywise restrict_to; nullopt unless every entry lies in `sub`.
template <class Derived>
std::optional<typename Derived::PlainObject> restrict_matrix(const Eigen::MatrixBase<Derived>& m, Field sub) {
  typename Derived::PlainObject r = m;
  for (Index j = 0; j < r.cols(); ++j)
    for (Index i = 0; i < r.rows(); ++i) {
      auto x = restrict_to(embed(r(i, j), field_of(m)), sub);
      if (!x) return std::nullopt;
      r(i, j) = *x;
    }
  return r;
}

}  // namespace hypdiv

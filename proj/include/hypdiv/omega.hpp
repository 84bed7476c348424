#pragma once

// The form Ω = [[0,-1/2,0],[-1/2,0,0],[0,0,1]] with t* Ω t = w^2 - uv, its
// orthogonal group O3(Ω) ⊃ SO3(Ω) ⊃ B, and the left action on triples.

#include <random>
#include <vector>

#include "hypdiv/triple.hpp"

namespace hypdiv {

Matrix3 omega(Field f);

enum class Orthogonality { not_orthogonal, proper, improper };

Orthogonality is_orthogonal(const Matrix3& a);

/// A verified element of O3(Ω); the determinant is cached.
class OrthMatrix {
 public:
  const Matrix3& entries() const { return m_; }
  Field field() const { return field_; }
  const FieldElement& det() const { return det_; }
  bool is_proper() const { return det_.is_one(); }

  /// Ω^{-1} A* Ω.
  OrthMatrix inverse() const;
  OrthMatrix embed(Field target) const;

  friend OrthMatrix operator*(const OrthMatrix& a, const OrthMatrix& b);
  friend bool operator==(const OrthMatrix& a, const OrthMatrix& b) { return same_matrix(a.m_, b.m_); }

 private:
  OrthMatrix(Matrix3 m, FieldElement det, Field f) : m_(std::move(m)), det_(std::move(det)), field_(f) {}
  friend OrthMatrix make_orth(const Matrix3& a);
  Matrix3 m_;
  FieldElement det_;
  Field field_;
};

std::ostream& operator<<(std::ostream& os, const OrthMatrix& a);

/// Throws not_orthogonal unless A* Ω A = Ω.
OrthMatrix make_orth(const Matrix3& a);
OrthMatrix identity_orth(Field f);

enum class GeneratorKind { b_scale, b_shift, so3_scale, so3_swap, epsilon, reduction, plain_swap };

/// b_scale / so3_scale: diag(a, 1/a, 1).
/// b_shift:   [[1,0,0],[b^2,1,-2b],[-b,0,1]].
/// so3_swap:  [[0,1,0],[1,b^2,2b],[0,-b,-1]].
/// epsilon:   diag(1,1,-1).
/// reduction: [[1,a^2,-2a],[0,1,0],[0,-a,1]].
/// plain_swap: [[0,1,0],[1,0,0],[0,0,-1]].
/// epsilon and plain_swap only use the field of `param`.
OrthMatrix generator(GeneratorKind kind, const FieldElement& param);
OrthMatrix generator(GeneratorKind kind, Field f);

/// A t, re-validated on the curve. Acting by a matrix over an extension
/// moves the triple into that extension.
Triple act(const OrthMatrix& a, const Triple& t);

OrthMatrix b_word_matrix(const BWord& word);

/// Every element of SO3(Ω) over a small finite field, collected by closing
/// {so3_scale(a), so3_swap(b)} under multiplication. Sorted by entry
/// indices; cached per field. Throws field_too_large when |F| > 13.
const std::vector<OrthMatrix>& enumerate_so3(Field f);

/// Entry indices, row-major; the sort key of enumerate_so3.
std::vector<std::uint64_t> matrix_key(const OrthMatrix& a);

/// Product of `length` random generators so3_scale/so3_swap (and epsilon
/// when `allow_improper`) with parameters drawn from `f`.
OrthMatrix random_orthogonal_word(Field f, std::mt19937_64& rng, int length, bool allow_improper = false);
/// Product of `length` random B generators.
OrthMatrix random_b_word(Field f, std::mt19937_64& rng, int length);

}  // namespace hypdiv

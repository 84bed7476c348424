#pragma once

// The invariant w^2 - uv of a triple as a symmetric Gram matrix, and the
// maps back from forms to triples and orthogonal transforms.

#include <optional>

#include "hypdiv/omega.hpp"

namespace hypdiv {

/// A symmetric (g+2) x (g+2) matrix; S(x) = x* S x, so off-diagonal entries
/// carry half of the cross coefficient.
class GramForm {
 public:
  const Matrix& entries() const { return s_; }
  Field field() const { return field_; }
  Index size() const { return s_.rows(); }
  GramForm embed(Field target) const;

  friend bool operator==(const GramForm& a, const GramForm& b) { return same_matrix(a.s_, b.s_); }
  friend bool operator!=(const GramForm& a, const GramForm& b) { return !(a == b); }

 private:
  GramForm(Matrix s, Field f) : s_(std::move(s)), field_(f) {}
  friend GramForm make_gram(const Matrix& entries, Field field);
  Matrix s_;
  Field field_;
};

/// Throws not_symmetric for non-square or asymmetric input.
GramForm make_gram(const Matrix& entries, Field field);

/// t* Ω t: entry (i,j) is w_i w_j - (u_i v_j + u_j v_i)/2.
GramForm gram(const Triple& t);

/// Σ S_ij X^{i+j}.
Polynomial lambda_of_form(const GramForm& s);

struct RankRadical {
  Index rank;
  Matrix radical;  // columns span the kernel
};

RankRadical rank_radical(const GramForm& s);

/// λ(S) = F and rank S ∈ {2, 3}.
bool in_qc(const GramForm& s, const Curve& curve);

/// A ∈ O3(Ω) with act(A, t1) = t2, verified before returning. Unique when
/// the forms of t1 are independent. Throws gram_mismatch, and
/// factorization_needs_extension for rank 2 over the rationals when the
/// form does not split.
OrthMatrix recover_transform(const Triple& t1, const Triple& t2);

/// A triple with gram(t) = S. Finite fields may need an extension of degree
/// up to `extension_budget`; the rationals need an isotropic `hint` x
/// (S(x) = 0 with S x != 0) in rank 3.
Triple decompose(const GramForm& s, const Curve& curve, int extension_budget = 2,
                 const std::optional<Vector>& hint = std::nullopt);

}  // namespace hypdiv

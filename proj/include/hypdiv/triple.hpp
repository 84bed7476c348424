#pragma once

#include <optional>
#include <random>
#include <vector>

#include "hypdiv/curve.hpp"

namespace hypdiv {

/// A point of L(C): linear forms (u, v, w) with F = λ(w)^2 - λ(u)λ(v),
/// stored as the rows of a 3 x (g+2) matrix. The entries may live in an
/// extension of the curve's field.
class Triple {
 public:
  const Curve& curve() const { return curve_; }
  Field field() const { return field_; }
  const TripleMatrix& matrix() const { return rows_; }
  LinearForm u() const { return rows_.row(0); }
  LinearForm v() const { return rows_.row(1); }
  LinearForm w() const { return rows_.row(2); }
  Polynomial U() const { return lambda_to_poly(u(), field_); }
  Polynomial V() const { return lambda_to_poly(v(), field_); }
  Polynomial W() const { return lambda_to_poly(w(), field_); }

  Triple embed(Field target) const;

  friend bool operator==(const Triple& a, const Triple& b);
  friend bool operator!=(const Triple& a, const Triple& b) { return !(a == b); }

 private:
  Triple(Curve c, TripleMatrix rows, Field f) : curve_(std::move(c)), rows_(std::move(rows)), field_(f) {}
  friend Triple make_triple(const Curve& curve, const TripleMatrix& rows);
  Curve curve_;
  TripleMatrix rows_;
  Field field_;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Validates F = W^2 - UV, u != 0 and v != 0.
Triple make_triple(const Curve& curve, const TripleMatrix& rows);
Triple make_triple(const Curve& curve, const LinearForm& u, const LinearForm& v, const LinearForm& w);
Triple make_triple(const Curve& curve, const Polynomial& U, const Polynomial& V, const Polynomial& W);

/// Parameters of the B-word shift(shift) * scale(scale) taking a triple to
/// its canonical form.
struct BWord {
  FieldElement scale;
  FieldElement shift;
};

struct CanonicalForm {
  Triple triple;
  BWord word;
};

/// Canonical representative of the B-orbit: λ(u) monic and the coefficient
/// of X^{deg λ(u)} in λ(w) equal to zero.
CanonicalForm b_canonical_with_word(const Triple& t);
Triple b_canonical(const Triple& t);

/// The ±Y involution (u, v, w) -> (u, v, -w).
Triple conjugate(const Triple& t);

enum class InfinitySign { none, plus, minus };

struct DivisorData {
  Polynomial U_monic;
  Polynomial W_repr;
  int infinity_multiplicity;
  InfinitySign infinity_sign;
};

DivisorData divisor_data(const Triple& t);

struct SupportPoint {
  FieldElement x;
  FieldElement y;
  int multiplicity;
};

struct Support {
  Field field;  // where the affine coordinates live
  std::vector<SupportPoint> affine;
  int infinity_multiplicity;
  InfinitySign infinity_sign;
  bool complete;  // U splits over `field`
};

/// Explicit support over the degree-`extension_degree` extension of the
/// triple's (finite) field.
Support support(const Triple& t, int extension_degree);

/// Random triple built from g+1 distinct points (x_i, ±sqrt F(x_i)) over
/// `field`: U = Π (X - x_i), W interpolates the y_i, V = (W^2 - F)/U. With
/// `weierstrass` every x_i is a root of F, so W = 0. Returns nullopt when
/// `field` has too few suitable x values.
std::optional<Triple> sample_point_triple(const Curve& curve, Field field, std::mt19937_64& rng,
                                          bool weierstrass = false);

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs.
Polynomial interpolate(const std::vector<FieldElement>& xs, const std::vector<FieldElement>& ys, Field field);

}  // namespace hypdiv

#pragma once

#include <utility>
#include <vector>

#include "hypdiv/field.hpp"

namespace hypdiv {

/// Dense univariate polynomial over a Field, coefficient of X^i at index i.
/// The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field f) : field_(f) {}
  Polynomial(Field f, std::vector<FieldElement> coeffs);
  Polynomial(Field f, std::initializer_list<std::int64_t> coeffs);

  static Polynomial constant(const FieldElement& c);
  /// c * X^k
  static Polynomial monomial(const FieldElement& c, int k);
  static Polynomial x(Field f) { return monomial(FieldElement::one(f), 1); }

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  FieldElement coeff(int i) const;
  FieldElement leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial embed(Field target) const;
  /// Horner evaluation; x may lie in an extension of the coefficient field.
  FieldElement operator()(const FieldElement& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  Field field_;
  std::vector<FieldElement> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// (quotient, remainder) with deg remainder < deg g.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& f, const Polynomial& g);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& f, const Polynomial& g);
bool is_squarefree(const Polynomial& f);

/// All roots of f lying in `target`, repeated by multiplicity, in the
/// deterministic element order. Finite fields are searched exhaustively;
/// over Q candidates come from the rational root theorem.
std::vector<FieldElement> roots_in_field(const Polynomial& f, Field target);

/// Largest k with (X - r)^k dividing f.
int root_multiplicity(const Polynomial& f, const FieldElement& r);

}  // namespace hypdiv

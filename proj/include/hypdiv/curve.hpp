#pragma once

#include <array>
#include <vector>

#include "hypdiv/linalg.hpp"
#include "hypdiv/polynomial.hpp"

namespace hypdiv {

/// Y^2 = F(X) with deg F = 2g + 2, F squarefree, odd characteristic.
class Curve {
 public:
  Field field() const { return f_.field(); }
  const Polynomial& F() const { return f_; }
  int genus() const { return genus_; }
  /// Number of variables x_0 .. x_{g+1} of a linear form.
  int form_length() const { return genus_ + 2; }
  FieldElement leading() const { return f_.leading(); }

  friend bool operator==(const Curve& a, const Curve& b) { return a.f_ == b.f_; }

 private:
  explicit Curve(Polynomial f) : f_(std::move(f)), genus_((f_.degree() - 2) / 2) {}
  friend Curve make_curve(const Polynomial& f);
  Polynomial f_;
  int genus_;
};

/// Validates and builds a curve; coefficients lowest degree first.
Curve make_curve(std::vector<FieldElement> coeffs, Field field);
Curve make_curve(const Polynomial& f);

enum class SqrtStatus { square_in_base, square_in_quadratic_extension };

/// The points at infinity: Y/X^{g+1} = roots[0] and roots[1] = -roots[0].
/// roots[0] = principal_root of a square root of the leading coefficient in
/// `root_field`; it marks ∞+.
struct InfinityData {
  FieldElement leading;
  SqrtStatus status;
  Field root_field;
  std::array<FieldElement, 2> roots;
};

InfinityData infinity_points(const Curve& curve);

/// A linear form in g+2 variables, as a row of coefficients.
using LinearForm = RowVector;

/// x_i -> X^i.
Polynomial lambda_to_poly(const LinearForm& form, Field field);
Polynomial lambda_to_poly(const LinearForm& form, Field field, int genus);
/// Inverse of lambda_to_poly; throws degree_too_high when deg f > g + 1.
LinearForm poly_to_form(const Polynomial& f, int genus);

}  // namespace hypdiv

#include "hypdiv/curve.hpp"

namespace hypdiv {

Curve make_curve(std::vector<FieldElement> coeffs, Field field) {
  if (coeffs.empty()) throw Error(Errc::zero_polynomial, "curve needs at least one coefficient");
  if (field.is_finite() && field.characteristic() == 2)
    throw Error(Errc::characteristic_two, "characteristic 2 is not supported");
  const bool top_zero = embed(coeffs.back(), field).is_zero();
  Polynomial f(field, std::move(coeffs));
  if (top_zero) throw Error(Errc::zero_leading_coefficient, "leading coefficient f_{2g+2} is zero");
  return make_curve(f);
}

Curve make_curve(const Polynomial& f) {
  if (f.is_zero()) throw Error(Errc::zero_leading_coefficient, "F is the zero polynomial");
  if (f.degree() % 2 != 0 || f.degree() < 4)
    throw Error(Errc::wrong_degree_parity, "deg F must be even and at least 4, got " + std::to_string(f.degree()));
  if (!is_squarefree(f)) throw Error(Errc::not_squarefree, "F has a repeated root");
  return Curve(f);
}

InfinityData infinity_points(const Curve& curve) {
  const FieldElement lead = curve.leading();
  InfinityData out{lead, SqrtStatus::square_in_base, curve.field(), {}};
  std::optional<FieldElement> r = sqrt_in_field(lead);
  if (!r) {
    out.status = SqrtStatus::square_in_quadratic_extension;
    out.root_field = adjoin_sqrt(lead);
    r = sqrt_in_field(embed(lead, out.root_field));
  }
  const FieldElement a = principal_root(*r);
  out.roots = {a, -a};
  return out;
}

Polynomial lambda_to_poly(const LinearForm& form, Field field) {
  std::vector<FieldElement> c(form.data(), form.data() + form.size());
  return Polynomial(field, std::move(c));
}

Polynomial lambda_to_poly(const LinearForm& form, Field field, int genus) {
  if (form.size() != genus + 2)
    throw Error(Errc::length_mismatch,
                "linear form has " + std::to_string(form.size()) + " coefficients, expected " + std::to_string(genus + 2));
  return lambda_to_poly(form, field);
}

LinearForm poly_to_form(const Polynomial& f, int genus) {
  if (f.degree() > genus + 1)
    throw Error(Errc::degree_too_high, "degree " + std::to_string(f.degree()) + " exceeds g+1 = " + std::to_string(genus + 1));
  LinearForm form(genus + 2);
  for (int i = 0; i < genus + 2; ++i) form(i) = f.coeff(i);
  return form;
}

}  // namespace hypdiv

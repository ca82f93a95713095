#include "apnforge/phi.hpp"

#include <bit>

namespace apnforge {

TriPoly phi_numerator(const UniPoly& f) {
  return substitute_linear(f, LinearForm::X) + substitute_linear(f, LinearForm::Y) +
         substitute_linear(f, LinearForm::Z) + substitute_linear(f, LinearForm::XYZ);
}

PhiSurface build_phi(const UniPoly& f) {
  auto [quotient, exact] = exact_divide(phi_numerator(f), big_a(f.field_ptr()));
  if (!exact) fail(ErrorCode::InternalNonExactDivision, "numerator of " + to_string(f) + " is not divisible by A");
  HomogDecomp decomp = homog_decompose(quotient);
  return PhiSurface{f, std::move(quotient), std::move(decomp)};
}

TriPoly phi_monomial(unsigned d, const FieldPtr& field) {
  return build_phi(UniPoly::monomial(field, d)).poly;
}

bool check_even_power_factorization(unsigned d) {
  if (d < 4 || d % 2 != 0) fail(ErrorCode::InvalidArgument, "check_even_power_factorization needs an even d >= 4");
  const FieldPtr gf2 = make_field(1);
  const unsigned j = static_cast<unsigned>(std::countr_zero(d));
  const unsigned e = d >> j;
  const unsigned power = 1u << j;
  const TriPoly lhs = phi_monomial(d, gf2);
  const TriPoly phi_e = phi_monomial(e, gf2);
  // d a power of two: φ_e = φ_1 = 0, and A^(d-1) would overflow the degree cap.
  if (phi_e.is_zero()) return lhs.is_zero();
  const TriPoly rhs = phi_e.pow(power) * big_a(gf2).pow(power - 1);
  return lhs == rhs;
}

bool congruent_mod_x_plus_y(const TriPoly& p, const TriPoly& q) {
  const TriPoly x_plus_y = TriPoly::var_x(p.field_ptr()) + TriPoly::var_y(p.field_ptr());
  return exact_divide(p - q, x_plus_y).exact;
}

bool check_x_plus_y_coprime(unsigned r, const FieldPtr& field) {
  if (r < 3 || r % 2 == 0) fail(ErrorCode::InvalidArgument, "check_x_plus_y_coprime needs an odd r >= 3");
  return !congruent_mod_x_plus_y(phi_monomial(r, field), TriPoly::zero(field));
}

bool phi_linearity_check(const UniPoly& f, const UniPoly& g) {
  const TriPoly pf = build_phi(f).poly;
  const TriPoly pfg = build_phi(f + g).poly;
  if (pfg != pf + build_phi(g).poly) return false;
  return !is_q_affine(g) || pfg == pf;
}

}  // namespace apnforge

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "apnforge/field.hpp"

namespace apnforge {

inline constexpr int kMaxUniDegree = 64;

/// Dense univariate polynomial over a binary field. Immutable value type; the
/// highest stored coefficient is nonzero. The zero polynomial has no degree.
class UniPoly {
 public:
  explicit UniPoly(FieldPtr field);
  /// coeffs[i] is the coefficient of x^i as a bit pattern of `field`.
  UniPoly(FieldPtr field, std::vector<std::uint32_t> coeffs);

  static UniPoly zero(FieldPtr field) { return UniPoly(std::move(field)); }
  static UniPoly constant(FieldPtr field, std::uint32_t c);
  static UniPoly monomial(FieldPtr field, unsigned exponent, std::uint32_t c = 1);
  static UniPoly x(FieldPtr field) { return monomial(std::move(field), 1); }

  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }
  [[nodiscard]] const Field& field() const noexcept { return *field_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  [[nodiscard]] std::optional<int> degree() const noexcept;
  [[nodiscard]] std::span<const std::uint32_t> coeff_bits() const noexcept { return coeffs_; }
  [[nodiscard]] std::uint32_t coeff_bits(unsigned exponent) const noexcept {
    return exponent < coeffs_.size() ? coeffs_[exponent] : 0;
  }
  [[nodiscard]] Felt coeff(unsigned exponent) const { return {*field_, coeff_bits(exponent)}; }
  [[nodiscard]] Felt leading_coeff() const;
  /// Exponents with nonzero coefficient, ascending.
  [[nodiscard]] std::vector<unsigned> support() const;

  [[nodiscard]] Felt eval(const Felt& x) const;
  /// Evaluates after mapping the coefficients through `embedding`; x lives in its target.
  [[nodiscard]] Felt eval(const Felt& x, const Embedding& embedding) const;
  [[nodiscard]] std::uint32_t eval_bits(std::uint32_t x) const noexcept;

  /// Coefficients pushed through an embedding into its target field.
  [[nodiscard]] UniPoly embed(const Embedding& embedding) const;
  [[nodiscard]] UniPoly scaled(const Felt& c) const;
  [[nodiscard]] UniPoly pow(unsigned e) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

 private:
  void normalize();

  FieldPtr field_;
  std::vector<std::uint32_t> coeffs_;
};

/// Exponent 0 or a power of two.
constexpr bool is_q_affine_exponent(unsigned e) noexcept { return e == 0 || (e & (e - 1)) == 0; }
bool is_q_affine(const UniPoly& p);

struct QAffineSplit {
  UniPoly core;    // no monomial of exponent 0 or 2^i
  UniPoly affine;  // only monomials of exponent 0 or 2^i
};

QAffineSplit split_q_affine(const UniPoly& p);

/// outer(inner(x)).
UniPoly compose(const UniPoly& outer, const UniPoly& inner);

/// True iff x ↦ p(x) is injective on `field` (p's field must embed into it).
/// Exhaustive; fields above 2^20 elements are rejected.
bool is_bijective_on(const UniPoly& p, const FieldPtr& field);

/// x^4 + β x^2 + γ x with β = c^(1+q) + c^(1+q^2) + c^(q+q^2), γ = c^(1+q+q^2),
/// returned over the base field of the tower. Verifies that the roots of the
/// result in F_{q^3} are exactly 0, c, c^q, c^(q^2).
UniPoly linearized_from_param(const Felt& c, const Tower& tower);

/// β and γ of the linearized polynomial for c, still in F_{q^3}.
struct LinearizedCoeffs {
  Felt beta;
  Felt gamma;
};
LinearizedCoeffs linearized_coeffs(const Felt& c, const Tower& tower);

/// "x^12 + 0x3*x^2 + 1"; "0" for the zero polynomial.
std::string to_string(const UniPoly& p);

}  // namespace apnforge

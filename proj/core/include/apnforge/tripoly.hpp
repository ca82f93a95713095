#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "apnforge/field.hpp"
#include "apnforge/unipoly.hpp"

namespace apnforge {

/// Per-variable exponent cap; φ_d for d ≤ 64 and its products stay below it.
inline constexpr unsigned kMaxVarDegree = 64;

/// x^i y^j z^k. The packed key orders monomials graded-lexicographically with
/// x > y > z, so larger key means larger term.
struct Monomial {
  unsigned x = 0, y = 0, z = 0;

  [[nodiscard]] unsigned total() const noexcept { return x + y + z; }
  [[nodiscard]] std::uint32_t key() const noexcept { return (total() << 24) | (x << 16) | (y << 8) | z; }
  static Monomial from_key(std::uint32_t key) noexcept {
    return {(key >> 16) & 0xFF, (key >> 8) & 0xFF, key & 0xFF};
  }
  [[nodiscard]] bool divides(const Monomial& m) const noexcept { return x <= m.x && y <= m.y && z <= m.z; }
  friend Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  std::uint32_t coeff;
};

/// Sparse polynomial in x, y, z over a binary field. Terms are kept sorted in
/// decreasing graded-lex order with no zero coefficients.
class TriPoly {
 public:
  explicit TriPoly(FieldPtr field);
  TriPoly(FieldPtr field, std::vector<Term> terms);

  static TriPoly zero(FieldPtr field) { return TriPoly(std::move(field)); }
  static TriPoly constant(FieldPtr field, std::uint32_t c);
  static TriPoly monomial(FieldPtr field, Monomial m, std::uint32_t c = 1);
  static TriPoly var_x(FieldPtr field) { return monomial(std::move(field), {1, 0, 0}); }
  static TriPoly var_y(FieldPtr field) { return monomial(std::move(field), {0, 1, 0}); }
  static TriPoly var_z(FieldPtr field) { return monomial(std::move(field), {0, 0, 1}); }

  [[nodiscard]] const FieldPtr& field_ptr() const noexcept { return field_; }
  [[nodiscard]] const Field& field() const noexcept { return *field_; }
  [[nodiscard]] const std::vector<Term>& terms() const noexcept { return terms_; }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const noexcept;
  [[nodiscard]] bool is_homogeneous() const noexcept;
  [[nodiscard]] const Term& leading_term() const;
  [[nodiscard]] std::uint32_t coeff_bits(const Monomial& m) const noexcept;

  [[nodiscard]] Felt eval(const Felt& x, const Felt& y, const Felt& z) const;
  [[nodiscard]] TriPoly embed(const Embedding& embedding) const;
  [[nodiscard]] TriPoly scaled(const Felt& c) const;
  [[nodiscard]] TriPoly pow(unsigned e) const;
  /// Variables permuted: perm[v] is the new position of variable v (0=x,1=y,2=z).
  [[nodiscard]] TriPoly permuted(const std::array<int, 3>& perm) const;

  friend TriPoly operator+(const TriPoly& a, const TriPoly& b);
  friend TriPoly operator-(const TriPoly& a, const TriPoly& b) { return a + b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b);
  friend bool operator==(const TriPoly& a, const TriPoly& b);

 private:
  void canonicalize();

  FieldPtr field_;
  std::vector<Term> terms_;
};

struct HomogPart {
  int degree;
  TriPoly part;
};

/// Homogeneous components, one per total degree present, ordered by decreasing degree.
struct HomogDecomp {
  std::vector<HomogPart> parts;

  [[nodiscard]] std::vector<int> degrees() const;
};

HomogDecomp homog_decompose(const TriPoly& p);
TriPoly sum(const HomogDecomp& d, FieldPtr field);

/// (x+y)(y+z)(z+x) = x^2y + x^2z + xy^2 + y^2z + xz^2 + yz^2.
TriPoly big_a(FieldPtr field);
/// x^2 + y^2 + z^2 + xy + xz + yz.
TriPoly mu(FieldPtr field);

struct Division {
  TriPoly quotient;
  TriPoly remainder;
  [[nodiscard]] bool exact() const noexcept { return remainder.is_zero(); }
};

/// Multivariate division by a single divisor under graded lex, x > y > z.
/// No remainder term is divisible by the divisor's leading monomial.
Division divide(const TriPoly& numerator, const TriPoly& divisor);

struct ExactQuotient {
  TriPoly quotient;
  bool exact;
};
ExactQuotient exact_divide(const TriPoly& numerator, const TriPoly& divisor);

bool is_symmetric(const TriPoly& p);

enum class LinearForm { X, Y, Z, XYZ };

/// p(ℓ) for one of the linear forms x, y, z, x+y+z.
TriPoly substitute_linear(const UniPoly& p, LinearForm form);

/// "x^2*y + 0x3*y^2*z + 1"; "0" for the zero polynomial.
std::string to_string(const TriPoly& p);

}  // namespace apnforge

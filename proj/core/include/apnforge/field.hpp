#pragma once

// Binary finite fields GF(2^m) in a polynomial basis, subfield embeddings and
// the F_q ⊂ F_{q^3} tower used by the degree-12 machinery.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apnforge/errors.hpp"

namespace apnforge {

inline constexpr int kMaxFieldDegree = 24;
inline constexpr int kMaxLogTableDegree = 16;

/// Bit pattern of a polynomial over GF(2): bit i is the coefficient of t^i.
using Gf2Poly = std::uint32_t;

int gf2_degree(std::uint64_t poly) noexcept;
bool gf2_is_irreducible(Gf2Poly poly);
/// Lowest bit pattern of an irreducible polynomial of the given degree.
Gf2Poly lowest_irreducible(int degree);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(2^m) with an explicit irreducible modulus. Immutable after construction.
/// Raw element operations work on bit patterns; Felt wraps them with a field
/// reference for checked arithmetic.
class Field {
 public:
  Field(int degree, Gf2Poly modulus);

  [[nodiscard]] int degree() const noexcept { return degree_; }
  [[nodiscard]] Gf2Poly modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }
  [[nodiscard]] std::uint32_t mask() const noexcept { return size() - 1; }
  [[nodiscard]] bool contains(std::uint32_t bits) const noexcept { return bits <= mask(); }
  [[nodiscard]] bool has_log_tables() const noexcept { return !log_.empty(); }
  /// Generator of the multiplicative group (lowest in element order).
  [[nodiscard]] std::uint32_t primitive_element() const noexcept { return primitive_; }

  /// "gf(2^m)/0x<hex>"
  [[nodiscard]] std::string spec() const;

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) noexcept { return a ^ b; }
  [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) return exp_[log_[a] + log_[b]];
    return mul_slow(a, b);
  }
  [[nodiscard]] std::uint32_t sqr(std::uint32_t a) const noexcept { return mul(a, a); }
  [[nodiscard]] std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  /// Throws DivisionByZero for a == 0.
  [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
  /// a^(2^i); i is reduced modulo the degree.
  [[nodiscard]] std::uint32_t frob(std::uint32_t a, unsigned i) const noexcept;
  /// Evaluates a GF(2)-polynomial at an element of this field.
  [[nodiscard]] std::uint32_t eval_gf2(Gf2Poly poly, std::uint32_t a) const noexcept;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  [[nodiscard]] std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const noexcept;
  [[nodiscard]] std::uint32_t find_primitive() const;

  int degree_;
  Gf2Poly modulus_;
  std::uint32_t primitive_ = 0;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

bool same_field(const Field& a, const Field& b) noexcept;

/// Builds GF(2^m). Without a modulus the lowest irreducible of degree m is used.
FieldPtr make_field(int degree, std::optional<Gf2Poly> modulus = std::nullopt);
/// Parses "gf(2^m)" or "gf(2^m)/0x<hex>".
FieldPtr parse_field_spec(std::string_view text);

/// A field element: bit pattern plus the (non-owning) field it belongs to.
/// The FieldPtr that produced the field must outlive the element.
class Felt {
 public:
  Felt() = default;
  Felt(const Field& field, std::uint32_t bits);

  [[nodiscard]] const Field& field() const;
  [[nodiscard]] bool has_field() const noexcept { return field_ != nullptr; }
  [[nodiscard]] std::uint32_t bits() const noexcept { return bits_; }
  [[nodiscard]] bool is_zero() const noexcept { return bits_ == 0; }
  [[nodiscard]] bool is_one() const noexcept { return bits_ == 1; }

  [[nodiscard]] Felt pow(std::uint64_t e) const;
  [[nodiscard]] Felt inverse() const;
  [[nodiscard]] std::string hex() const;

  friend Felt operator+(const Felt& a, const Felt& b);
  friend Felt operator-(const Felt& a, const Felt& b) { return a + b; }
  friend Felt operator*(const Felt& a, const Felt& b);
  friend Felt operator/(const Felt& a, const Felt& b);
  Felt& operator+=(const Felt& o) { return *this = *this + o; }
  Felt& operator*=(const Felt& o) { return *this = *this * o; }
  /// Same field and same bit pattern.
  friend bool operator==(const Felt& a, const Felt& b);
  /// Deterministic element order: unsigned value of the bit pattern.
  friend bool operator<(const Felt& a, const Felt& b) { return a.bits_ < b.bits_; }

 private:
  const Field* field_ = nullptr;
  std::uint32_t bits_ = 0;
};

/// x^(2^i).
Felt frobenius(const Felt& x, unsigned i);
std::string to_hex(std::uint32_t bits);

/// Injective ring homomorphism GF(2^m) -> GF(2^(mk)), fixed by the image of the
/// source's canonical generator t.
class Embedding {
 public:
  /// Throws NoRoot when generator_image is not a root of the source modulus.
  Embedding(FieldPtr source, FieldPtr target, std::uint32_t generator_image);

  [[nodiscard]] const FieldPtr& source() const noexcept { return source_; }
  [[nodiscard]] const FieldPtr& target() const noexcept { return target_; }
  [[nodiscard]] std::uint32_t generator_image() const noexcept { return generator_image_; }

  [[nodiscard]] std::uint32_t apply(std::uint32_t bits) const noexcept;
  [[nodiscard]] Felt operator()(const Felt& x) const;
  /// Inverse on the image; nullopt for elements outside the embedded subfield.
  [[nodiscard]] std::optional<std::uint32_t> preimage(std::uint32_t bits) const noexcept;
  [[nodiscard]] bool in_image(std::uint32_t bits) const noexcept { return preimage(bits).has_value(); }

 private:
  struct Pivot {
    std::uint32_t vector;
    std::uint32_t combination;
    int bit;
  };

  FieldPtr source_;
  FieldPtr target_;
  std::uint32_t generator_image_;
  std::vector<std::uint32_t> basis_images_;  // images of t^0 .. t^(m-1)
  std::vector<Pivot> pivots_;
};

/// Lowest root (element order) of the source modulus in the target.
Embedding find_embedding(const FieldPtr& source, const FieldPtr& target);

/// F_q ⊂ F_{q^3}: both fields plus the embedding between them. The extension
/// uses the default modulus of degree 3·deg(F_q).
struct Tower {
  FieldPtr base;
  FieldPtr ext;
  Embedding embedding;

  [[nodiscard]] int q_degree() const noexcept { return base->degree(); }
  [[nodiscard]] std::uint64_t q() const noexcept { return base->size(); }
  /// x^q, computed in the extension.
  [[nodiscard]] Felt rho(const Felt& x, unsigned power = 1) const;
  [[nodiscard]] Felt ext_elem(std::uint32_t bits) const { return {*ext, bits}; }
  [[nodiscard]] Felt base_elem(std::uint32_t bits) const { return {*base, bits}; }
  [[nodiscard]] Felt embed(const Felt& x) const { return embedding(x); }
  /// Throws Internal when x is not in the embedded copy of F_q.
  [[nodiscard]] Felt descend(const Felt& x) const;
  /// {p, p^q, p^(q^2)}, deduplicated and sorted.
  [[nodiscard]] std::vector<Felt> galois_orbit(const Felt& p) const;
  [[nodiscard]] Felt canonical_conjugate(const Felt& p) const { return galois_orbit(p).front(); }
};

Tower make_tower(const FieldPtr& base);

/// x + x^q + x^(q^2) for x in a field of degree 3·q_degree.
Felt rel_trace(const Felt& x, int q_degree);
/// Kernel of rel_trace, sorted by element order; always q^2 elements.
std::vector<Felt> trace_zero_elements(const Tower& tower);

}  // namespace apnforge

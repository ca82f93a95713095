#pragma once

// Decision procedures for polynomials that might be APN over infinitely many
// extensions: which classical non-existence result applies, the cubic divisor
// search for degrees 4e (e ≡ 3 mod 4), and the complete description of the
// degree-12 exceptional family with explicit linearized witnesses.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "apnforge/apn.hpp"
#include "apnforge/field.hpp"
#include "apnforge/tripoly.hpp"
#include "apnforge/unipoly.hpp"

namespace apnforge {

// ---------------------------------------------------------------------------
// Syntactic classification

enum class Theorem { OddDegree, TwiceOddDegree, GoldTail, FourTimesOdd, Degree12, None };

std::string_view to_string(Theorem t) noexcept;

struct TheoremVerdict {
  Theorem applicable = Theorem::None;
  int degree = 0;
  unsigned two_adic = 0;   // j in deg = 2^j · e
  unsigned odd_part = 0;   // e
  bool has_odd_term = false;
  ExponentClass degree_class;
  /// Gold-degree case: deg(g) for f = a·x^(2^k+1) + g, and the exponents j
  /// with a_j ≠ 0 whose φ_j would need to be absolutely irreducible.
  std::optional<int> gold_tail_degree;
  std::vector<unsigned> irreducibility_candidates;
};

TheoremVerdict applicable_theorem(const UniPoly& f);

// ---------------------------------------------------------------------------
// Cubic divisors A + P

/// A + c1(x²+y²+z²) + c4(xy+xz+yz) + b1(x+y+z) + d, all parameters in F_{q^3}.
struct DivisorParams {
  Felt c1, c4, b1, d;

  [[nodiscard]] std::array<std::uint32_t, 4> key() const noexcept {
    return {c1.bits(), c4.bits(), b1.bits(), d.bits()};
  }
  friend bool operator==(const DivisorParams& a, const DivisorParams& b) { return a.key() == b.key(); }
  friend bool operator<(const DivisorParams& a, const DivisorParams& b) { return a.key() < b.key(); }
};

TriPoly divisor_polynomial(const DivisorParams& params, const FieldPtr& ext);

/// True iff A + P divides φ once φ's coefficients are moved into F_{q^3}.
bool divisor_divides(const DivisorParams& params, const TriPoly& phi, const Embedding& embedding);

enum class SearchMode { Full, Constrained };
std::string_view to_string(SearchMode m) noexcept;

struct DivisorSearch {
  SearchMode mode;
  std::vector<DivisorParams> divisors;  // sorted by (c1, c4, b1, d) bit patterns
  std::uint64_t candidates = 0;
};

/// Full mode scans F_{q^3}^4 and is only allowed for q = 2. Constrained mode
/// scans c4 = c1 trace-zero, b1 = 0, d ∈ {c1³} ∪ trace-zero set, for q ≤ 8.
DivisorSearch cubic_divisor_search(const UniPoly& f, std::optional<SearchMode> mode = std::nullopt,
                                       unsigned workers = 1);

// ---------------------------------------------------------------------------
// Degree-12 family

enum class Deg12Kind { CubeOfL, LOfCube, NotInFamily };
std::string_view to_string(Deg12Kind k) noexcept;

struct Deg12Witness {
  explicit Deg12Witness(Tower t) : tower(std::move(t)) {}

  Tower tower;
  Deg12Kind kind = Deg12Kind::NotInFamily;
  std::optional<Felt> param;  // canonical (lowest) member of its Galois orbit, in F_{q^3}
  std::vector<Felt> orbit;
  Felt lead;                  // leading coefficient of f, in F_q
  std::optional<Felt> beta, gamma;  // in F_q
  std::optional<UniPoly> L;
  std::optional<UniPoly> L1;  // q-affine; f = lead·(L∘x³ or x³∘L) + L1
};

Deg12Witness deg12_classify(const UniPoly& f);

/// Rebuilds f from a witness; nullopt for NotInFamily.
std::optional<UniPoly> reconstruct(const Deg12Witness& w);

/// (L(x))³ + L1 or L(x³) + L1 with L built from the trace-zero param.
UniPoly family_generate(Deg12Kind kind, const Felt& param, const Tower& tower,
                        const std::optional<UniPoly>& L1 = std::nullopt);

enum class ProductForm { First, Second };

/// First: Π_i (A + c^(q^i) μ + c^(3q^i)). Second: Π_i (A + d^(q^i)). Asserts
/// equality with the closed form before returning.
TriPoly galois_product_expand(const Felt& param, ProductForm form, const Tower& tower);

/// First: A³ + βAμ² + (A² + μ³)γ + A(γ² + β³) + β²γμ + γ³.
/// Second: A³ + βA + γ with β, γ built from d (the expansion of Π_i (A + d^(q^i))).
TriPoly galois_product_closed_form(const Felt& param, ProductForm form, const Tower& tower);

/// Six-term determinant c²ρ(c) + cρ(c²) + c²ρ²(c) + ρ(c²)ρ²(c) + cρ²(c²) + ρ(c)ρ²(c²).
Felt galois_determinant(const Felt& c1, const Tower& tower);
/// c·ρ(c)·ρ²(c).
Felt galois_norm(const Felt& c1, const Tower& tower);
/// Residuals of the three linear equations in d, ρ(d), ρ²(d) that pin d to c1.
std::array<Felt, 3> linear_system_residuals(const Felt& c1, const Felt& d, const Tower& tower);

// ---------------------------------------------------------------------------
// Aggregate report

struct LargeNReport {
  TheoremVerdict verdict;
  std::optional<DivisorSearch> divisor_search;
  std::optional<Deg12Witness> witness;
  std::string conclusion;
  std::vector<ExtensionResult> empirical;
};

LargeNReport not_apn_for_large_n_report(const UniPoly& f, std::optional<std::pair<unsigned, unsigned>> n_range,
                                        unsigned workers = 1);

}  // namespace apnforge

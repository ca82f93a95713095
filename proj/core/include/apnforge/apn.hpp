#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "apnforge/field.hpp"
#include "apnforge/unipoly.hpp"

namespace apnforge {

inline constexpr std::uint32_t kMaxSpectrumFieldSize = std::uint32_t{1} << 14;
inline constexpr std::uint32_t kMaxSurfaceFieldSize = std::uint32_t{1} << 8;

/// Histogram of |{x : f(x+a) + f(x) = b}| over all a ≠ 0 and all b.
struct DiffSpectrum {
  std::map<unsigned, std::uint64_t> histogram;  // solution count -> number of (a, b)
  std::uint64_t field_size = 0;

  /// Largest solution count attained; 0 for an empty histogram.
  [[nodiscard]] unsigned uniformity() const noexcept;
  friend bool operator==(const DiffSpectrum&, const DiffSpectrum&) = default;
};

/// f's coefficients are mapped into `field` by the lowest-root embedding when
/// the two fields differ. Cost is O(|field|^2).
DiffSpectrum spectrum(const UniPoly& f, const FieldPtr& field, unsigned workers = 1);
/// Same, with an explicit embedding of f's field into the evaluation field.
DiffSpectrum spectrum(const UniPoly& f, const Embedding& embedding, unsigned workers = 1);

bool is_apn(const UniPoly& f, const FieldPtr& field, unsigned workers = 1);

/// Tests f (over F_q) on F_{q^n}, the default field of degree n·deg(F_q).
struct ExtensionResult {
  unsigned n;
  bool apn;
  unsigned uniformity;
};
ExtensionResult apn_over_extension(const UniPoly& f, unsigned n, unsigned workers = 1);
bool is_apn_over_extension(const UniPoly& f, unsigned n, unsigned workers = 1);
/// Default field of degree n·deg(F_q); FieldTooLarge past the spectrum limit.
FieldPtr extension_field(const Field& base, unsigned n);

enum class ExponentKind { Gold, Kasami, NotExceptional };

struct ExponentClass {
  ExponentKind kind = ExponentKind::NotExceptional;
  unsigned k = 0;  // 0 when not exceptional
  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;
};

/// 2^k + 1 -> Gold(k); 4^k − 2^k + 1 with k ≥ 2 -> Kasami(k). 3 is Gold(1).
ExponentClass classify_exponent(std::uint64_t t);

using Point3 = std::array<std::uint32_t, 3>;

struct SurfaceCheck {
  bool consistent = false;
  bool apn = false;
  std::uint64_t off_v_zeros = 0;     // zeros of φ with pairwise distinct coordinates
  std::optional<Point3> witness;     // lowest off-V zero (lexicographic), when f is not APN
  std::uint32_t witness_a = 0;       // x + y
  std::uint32_t witness_b = 0;       // f(x) + f(y)
  unsigned witness_solutions = 0;    // |{u : f(u+a) + f(u) = b}|
};

/// Enumerates the zeros of φ over field^3 and compares "no zero off the three
/// planes x=y, y=z, z=x" with the spectrum verdict. Fields above 2^8 elements
/// are rejected (the scan is cubic).
SurfaceCheck surface_point_check(const UniPoly& f, const FieldPtr& field, unsigned workers = 1);

}  // namespace apnforge

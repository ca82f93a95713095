#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "apnforge/field.hpp"
#include "apnforge/tripoly.hpp"
#include "apnforge/unipoly.hpp"

namespace apnforge::cli {

inline constexpr int kSchemaVersion = 1;

enum class Command { Field, Phi, Spectrum, Apn, Classify12, Gen12, Divisors, Theorems, Points, Exponent, Report };
enum class OutputFormat { Json, Csv, Plain };

struct RunConfig {
  Command command = Command::Field;
  std::string field_spec = "gf(2^1)";
  std::string f_text;
  std::optional<std::pair<unsigned, unsigned>> n_range;
  std::optional<OutputFormat> output;  // command default when unset
  unsigned workers = 0;                // 0: one per hardware thread
  std::string kind;                    // gen12
  std::string param;                   // gen12, hex element of F_{q^3}
  std::string l1_text;                 // gen12
  std::uint64_t exponent = 0;          // exponent
};

/// Polynomial text: terms `<coeff>*x^<e>`, `x^<e>`, `x`, `<coeff>` joined by
/// `+`. Coefficients are hex field elements (0x prefix optional), omitted for 1.
UniPoly parse_poly(std::string_view text, const FieldPtr& field);
/// Same grammar over the variables x, y, z, e.g. `x^2*y + 0x3*y^2*z`.
TriPoly parse_tripoly(std::string_view text, const FieldPtr& field);
/// "3..8" or "5".
std::pair<unsigned, unsigned> parse_range(std::string_view text);
std::uint32_t parse_hex_element(std::string_view text, const Field& field);

/// Dispatches one command. Exit codes: 0 success, 2 validation error,
/// 1 internal assertion failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command-line entry point (argument parsing plus run()).
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace apnforge::cli

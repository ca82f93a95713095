#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <iostream>
#include <vector>

#include "apnforge/apn.hpp"
#include "apnforge/criteria.hpp"
#include "apnforge/phi.hpp"

namespace apnforge::cli {

using Json = nlohmann::ordered_json;

namespace {

struct ParsedTerm {
  std::uint32_t coeff;
  std::array<unsigned, 3> exps;
};

class TermParser {
 public:
  TermParser(std::string_view text, std::string_view vars, const Field& field)
      : text_(text), vars_(vars), field_(field) {}

  std::vector<ParsedTerm> parse() {
    std::vector<ParsedTerm> terms;
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "empty polynomial");
    for (;;) {
      terms.push_back(term());
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') throw SyntaxError(pos_, std::string("unexpected '") + peek() + "'");
      ++pos_;
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool is_var(char c) const { return vars_.find(c) != std::string_view::npos; }

  ParsedTerm term() {
    skip_ws();
    ParsedTerm t{1, {0, 0, 0}};
    if (std::isxdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = coefficient();
      skip_ws();
      if (peek() != '*') return t;
      ++pos_;
      skip_ws();
      if (!is_var(peek())) throw SyntaxError(pos_, "expected a variable after '*'");
    }
    if (!is_var(peek())) throw SyntaxError(pos_, "expected a term");
    for (;;) {
      factor(t);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      if (!is_var(peek())) throw SyntaxError(pos_, "expected a variable after '*'");
    }
    return t;
  }

  std::uint32_t coefficient() {
    const std::size_t start = pos_;
    if (peek() == '0' && pos_ + 1 < text_.size() && (text_[pos_ + 1] == 'x' || text_[pos_ + 1] == 'X')) {
      if (pos_ + 2 < text_.size() && std::isxdigit(static_cast<unsigned char>(text_[pos_ + 2]))) pos_ += 2;
    }
    const std::size_t digits = pos_;
    while (!at_end() && std::isxdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) throw SyntaxError(pos_, "expected hex digits");
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + digits, text_.data() + pos_, value, 16);
    if (ec != std::errc{} || value >= field_.size()) {
      fail(ErrorCode::UnknownCoefficient, std::string(text_.substr(start, pos_ - start)) + " is not an element of " +
                                              field_.spec() + " (position " + std::to_string(start) + ")");
    }
    return static_cast<std::uint32_t>(value);
  }

  void factor(ParsedTerm& t) {
    const auto var = static_cast<std::size_t>(peek() - 'x');
    ++pos_;
    skip_ws();
    unsigned e = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == start) throw SyntaxError(pos_, "expected an exponent after '^'");
      if (pos_ - start > 4) throw SyntaxError(start, "exponent too large");
      std::from_chars(text_.data() + start, text_.data() + pos_, e);
    }
    t.exps[var] += e;
  }

  std::string_view text_;
  std::string_view vars_;
  const Field& field_;
  std::size_t pos_ = 0;
};

Json field_json(const Field& f) { return f.spec(); }

std::optional<UniPoly> parse_optional_poly(const std::string& text, const FieldPtr& field) {
  if (text.empty()) return std::nullopt;
  return parse_poly(text, field);
}

UniPoly require_poly(const RunConfig& c, const FieldPtr& field) {
  if (c.f_text.empty()) fail(ErrorCode::InvalidArgument, "--f is required");
  return parse_poly(c.f_text, field);
}

Json witness_json(const Deg12Witness& w, const UniPoly& f) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["field"] = field_json(*w.tower.base);
  j["ext_field"] = field_json(*w.tower.ext);
  j["f"] = to_string(f);
  j["kind"] = to_string(w.kind);
  j["lead"] = w.lead.hex();
  if (w.kind == Deg12Kind::NotInFamily) {
    j["param"] = nullptr;
    j["beta"] = nullptr;
    j["gamma"] = nullptr;
    j["L"] = nullptr;
    j["L1"] = nullptr;
    j["orbit"] = Json::array();
    return j;
  }
  j["param"] = w.param->hex();
  j["beta"] = w.beta->hex();
  j["gamma"] = w.gamma->hex();
  j["L"] = to_string(*w.L);
  j["L1"] = to_string(*w.L1);
  Json orbit = Json::array();
  for (const auto& p : w.orbit) orbit.push_back(p.hex());
  j["orbit"] = orbit;
  return j;
}

Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["applicable"] = to_string(v.applicable);
  j["degree"] = v.degree;
  j["two_adic"] = v.two_adic;
  j["odd_part"] = v.odd_part;
  j["has_odd_term"] = v.has_odd_term;
  j["degree_class"] = v.degree_class.kind == ExponentKind::Gold     ? "GOLD"
                      : v.degree_class.kind == ExponentKind::Kasami ? "KASAMI"
                                                                    : "NOT_EXCEPTIONAL";
  j["degree_class_k"] = v.degree_class.k;
  j["gold_tail_degree"] = v.gold_tail_degree ? Json(*v.gold_tail_degree) : Json(nullptr);
  j["irreducibility_candidates"] = v.irreducibility_candidates;
  return j;
}

Json divisors_json(const DivisorSearch& s) {
  Json list = Json::array();
  for (const auto& d : s.divisors) {
    list.push_back({{"c1", d.c1.hex()}, {"c4", d.c4.hex()}, {"b1", d.b1.hex()}, {"d", d.d.hex()}});
  }
  return list;
}

Json extension_rows(const std::vector<ExtensionResult>& rows, const Field& base) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"field", extension_field(base, r.n)->spec()},
                   {"apn", r.apn},
                   {"uniformity", r.uniformity}});
  }
  return out;
}

std::vector<ExtensionResult> run_extensions(const UniPoly& f, const RunConfig& c) {
  std::vector<ExtensionResult> rows;
  for (unsigned n = c.n_range->first; n <= c.n_range->second; ++n) rows.push_back(apn_over_extension(f, n, c.workers));
  return rows;
}

void validate(const RunConfig& c, const Field& field) {
  if (c.n_range) {
    if (c.n_range->first == 0 || c.n_range->first > c.n_range->second) {
      fail(ErrorCode::InvalidArgument, "--n must be a range lo..hi with 1 <= lo <= hi");
    }
    extension_field(field, c.n_range->second);
  }
  const auto fmt = c.output.value_or(OutputFormat::Json);
  if (fmt == OutputFormat::Csv && c.command != Command::Spectrum) {
    fail(ErrorCode::InvalidArgument, "CSV output is only available for spectrum");
  }
  if (fmt == OutputFormat::Plain && c.command != Command::Phi) {
    fail(ErrorCode::InvalidArgument, "plain output is only available for phi");
  }
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void dispatch(const RunConfig& c, std::ostream& out) {
  if (c.command == Command::Exponent) {
    validate(c, *make_field(1));
    const auto cls = classify_exponent(c.exponent);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["t"] = c.exponent;
    j["kind"] = cls.kind == ExponentKind::Gold ? "GOLD" : cls.kind == ExponentKind::Kasami ? "KASAMI" : "NOT_EXCEPTIONAL";
    j["k"] = cls.k;
    dump(out, j);
    return;
  }

  const FieldPtr field = parse_field_spec(c.field_spec);
  validate(c, *field);

  switch (c.command) {
    case Command::Field: {
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["degree"] = field->degree();
      j["modulus"] = to_hex(field->modulus());
      j["size"] = field->size();
      j["primitive_element"] = to_hex(field->primitive_element());
      dump(out, j);
      return;
    }
    case Command::Phi: {
      const UniPoly f = require_poly(c, field);
      const PhiSurface s = build_phi(f);
      if (c.output.value_or(OutputFormat::Plain) == OutputFormat::Plain) {
        out << "phi = " << to_string(s.poly) << '\n' << "homogeneous degrees:";
        for (int d : s.decomp.degrees()) out << ' ' << d;
        out << '\n';
        return;
      }
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      j["phi"] = to_string(s.poly);
      j["total_degree"] = s.poly.total_degree();
      j["homogeneous_degrees"] = s.decomp.degrees();
      dump(out, j);
      return;
    }
    case Command::Spectrum: {
      const UniPoly f = require_poly(c, field);
      const DiffSpectrum s = spectrum(f, field, c.workers);
      if (c.output.value_or(OutputFormat::Csv) == OutputFormat::Csv) {
        out << "count,multiplicity\n";
        for (const auto& [count, mult] : s.histogram) out << count << ',' << mult << '\n';
        return;
      }
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      j["uniformity"] = s.uniformity();
      Json rows = Json::array();
      for (const auto& [count, mult] : s.histogram) rows.push_back({{"count", count}, {"multiplicity", mult}});
      j["histogram"] = rows;
      dump(out, j);
      return;
    }
    case Command::Apn: {
      const UniPoly f = require_poly(c, field);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      if (c.n_range) {
        j["results"] = extension_rows(run_extensions(f, c), *field);
      } else {
        const unsigned u = spectrum(f, field, c.workers).uniformity();
        j["results"] = Json::array({{{"n", 1}, {"field", field->spec()}, {"apn", u <= 2}, {"uniformity", u}}});
      }
      dump(out, j);
      return;
    }
    case Command::Classify12: {
      const UniPoly f = require_poly(c, field);
      dump(out, witness_json(deg12_classify(f), f));
      return;
    }
    case Command::Gen12: {
      const Tower tower = make_tower(field);
      Deg12Kind kind;
      if (c.kind == "CUBE_OF_L") {
        kind = Deg12Kind::CubeOfL;
      } else if (c.kind == "L_OF_CUBE") {
        kind = Deg12Kind::LOfCube;
      } else {
        fail(ErrorCode::InvalidArgument, "--kind must be CUBE_OF_L or L_OF_CUBE");
      }
      if (c.param.empty()) fail(ErrorCode::InvalidArgument, "--param is required");
      const Felt param(*tower.ext, parse_hex_element(c.param, *tower.ext));
      const auto l1 = parse_optional_poly(c.l1_text, field);
      const UniPoly f = family_generate(kind, param, tower, l1);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["ext_field"] = field_json(*tower.ext);
      j["kind"] = to_string(kind);
      j["param"] = param.hex();
      j["L"] = to_string(linearized_from_param(param, tower));
      j["L1"] = l1 ? to_string(*l1) : "0";
      j["f"] = to_string(f);
      dump(out, j);
      return;
    }
    case Command::Divisors: {
      const UniPoly f = require_poly(c, field);
      const DivisorSearch s = cubic_divisor_search(f, std::nullopt, c.workers);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["ext_field"] = field_json(*make_tower(field).ext);
      j["f"] = to_string(f);
      j["mode"] = to_string(s.mode);
      j["candidates"] = s.candidates;
      j["divisors"] = divisors_json(s);
      dump(out, j);
      return;
    }
    case Command::Theorems: {
      const UniPoly f = require_poly(c, field);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      j.update(verdict_json(applicable_theorem(f)));
      dump(out, j);
      return;
    }
    case Command::Points: {
      const UniPoly f = require_poly(c, field);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      Json rows = Json::array();
      std::vector<FieldPtr> targets;
      if (c.n_range) {
        for (unsigned n = c.n_range->first; n <= c.n_range->second; ++n) targets.push_back(extension_field(*field, n));
      } else {
        targets.push_back(field);
      }
      for (const auto& target : targets) {
        const SurfaceCheck s = surface_point_check(f, target, c.workers);
        Json row{{"field", target->spec()},
                 {"consistent", s.consistent},
                 {"apn", s.apn},
                 {"off_v_zeros", s.off_v_zeros}};
        if (s.witness) {
          row["witness"] = {{"x", to_hex((*s.witness)[0])},
                            {"y", to_hex((*s.witness)[1])},
                            {"z", to_hex((*s.witness)[2])},
                            {"a", to_hex(s.witness_a)},
                            {"b", to_hex(s.witness_b)},
                            {"solutions", s.witness_solutions}};
        } else {
          row["witness"] = nullptr;
        }
        rows.push_back(row);
      }
      j["results"] = rows;
      dump(out, j);
      return;
    }
    case Command::Report: {
      const UniPoly f = require_poly(c, field);
      const LargeNReport r = not_apn_for_large_n_report(f, c.n_range, c.workers);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["field"] = field_json(*field);
      j["f"] = to_string(f);
      j["verdict"] = verdict_json(r.verdict);
      if (r.divisor_search) {
        j["divisor_search"] = {{"mode", to_string(r.divisor_search->mode)}, {"divisors", divisors_json(*r.divisor_search)}};
      }
      if (r.witness) {
        Json w = witness_json(*r.witness, f);
        w.erase("schema_version");
        j["witness"] = w;
      }
      j["conclusion"] = r.conclusion;
      j["empirical"] = extension_rows(r.empirical, *field);
      dump(out, j);
      return;
    }
    case Command::Exponent:
      return;
  }
}

}  // namespace

UniPoly parse_poly(std::string_view text, const FieldPtr& field) {
  std::vector<std::uint32_t> coeffs;
  for (const auto& t : TermParser(text, "x", *field).parse()) {
    if (t.exps[0] > kMaxUniDegree) fail(ErrorCode::DegreeTooLarge, "exponent above 64");
    if (coeffs.size() <= t.exps[0]) coeffs.resize(t.exps[0] + 1, 0);
    coeffs[t.exps[0]] ^= t.coeff;
  }
  return UniPoly(field, std::move(coeffs));
}

TriPoly parse_tripoly(std::string_view text, const FieldPtr& field) {
  std::vector<Term> terms;
  for (const auto& t : TermParser(text, "xyz", *field).parse()) {
    terms.push_back({{t.exps[0], t.exps[1], t.exps[2]}, t.coeff});
  }
  return TriPoly(field, std::move(terms));
}

std::pair<unsigned, unsigned> parse_range(std::string_view text) {
  const auto number = [&](std::string_view s, std::size_t offset) {
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw SyntaxError(offset, "expected an integer in range");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const unsigned n = number(text, 0);
    return {n, n};
  }
  return {number(text.substr(0, dots), 0), number(text.substr(dots + 2), dots + 2)};
}

std::uint32_t parse_hex_element(std::string_view text, const Field& field) {
  std::string_view digits = text;
  if (digits.substr(0, 2) == "0x" || digits.substr(0, 2) == "0X") digits.remove_prefix(2);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value, 16);
  if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw SyntaxError(0, "expected a hex field element");
  }
  if (value >= field.size()) fail(ErrorCode::UnknownCoefficient, std::string(text) + " is not an element of " + field.spec());
  return static_cast<std::uint32_t>(value);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    dispatch(config, out);
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.is_internal() ? 1 : 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"apn-forge: APN analysis of polynomials over GF(2^m)"};
  app.require_subcommand(1);

  RunConfig config;
  std::string n_text, output_text;

  struct Entry {
    const char* name;
    Command command;
    const char* help;
  };
  const std::array<Entry, 11> entries{{
      {"field", Command::Field, "Describe a field and its modulus"},
      {"phi", Command::Phi, "Print the trivariate phi polynomial of f"},
      {"spectrum", Command::Spectrum, "Differential spectrum of f as CSV"},
      {"apn", Command::Apn, "APN test of f over F_{q^n} for n in --n"},
      {"classify12", Command::Classify12, "Classify a degree-12 f against the exceptional family"},
      {"gen12", Command::Gen12, "Generate a member of the degree-12 family"},
      {"divisors", Command::Divisors, "Search cubic divisors A + P of phi"},
      {"theorems", Command::Theorems, "Which non-existence criterion applies to f"},
      {"points", Command::Points, "Compare phi's affine zeros with the APN verdict"},
      {"exponent", Command::Exponent, "Classify an exponent as Gold, Kasami or neither"},
      {"report", Command::Report, "Aggregate report for large extensions"},
  }};

  for (const auto& s : entries) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->callback([&config, cmd = s.command] { config.command = cmd; });
    if (s.command == Command::Exponent) {
      sub->add_option("t", config.exponent, "Exponent")->required();
      sub->add_option("--output", output_text, "json");
      continue;
    }
    sub->add_option("--field", config.field_spec, "gf(2^m) or gf(2^m)/0x<modulus>");
    sub->add_option("--output", output_text, "json | csv | plain");
    sub->add_option("--workers", config.workers, "Worker threads (0 = hardware)");
    if (s.command == Command::Field) continue;
    sub->add_option("--f", config.f_text, "Polynomial, e.g. \"x^12 + x^6 + x^3\"");
    sub->add_option("--n", n_text, "Extension degrees lo..hi");
    if (s.command == Command::Gen12) {
      sub->add_option("--kind", config.kind, "CUBE_OF_L | L_OF_CUBE")->required();
      sub->add_option("--param", config.param, "Trace-zero element of F_{q^3} (hex)")->required();
      sub->add_option("--l1", config.l1_text, "q-affine polynomial of degree <= 8");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (!n_text.empty()) config.n_range = parse_range(n_text);
    if (output_text == "json") {
      config.output = OutputFormat::Json;
    } else if (output_text == "csv") {
      config.output = OutputFormat::Csv;
    } else if (output_text == "plain") {
      config.output = OutputFormat::Plain;
    } else if (!output_text.empty()) {
      fail(ErrorCode::InvalidArgument, "--output must be json, csv or plain");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return run(config, out, err);
}

}  // namespace apnforge::cli

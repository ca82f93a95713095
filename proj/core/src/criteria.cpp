#include "apnforge/criteria.hpp"

#include <algorithm>
#include <bit>

#include "apnforge/parallel.hpp"
#include "apnforge/phi.hpp"

namespace apnforge {

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::OddDegree: return "THM_2_1";
    case Theorem::TwiceOddDegree: return "THM_2_2";
    case Theorem::GoldTail: return "THM_2_3_STRUCTURAL";
    case Theorem::FourTimesOdd: return "THM_3_1";
    case Theorem::Degree12: return "THM_3_2";
    case Theorem::None: return "NONE";
  }
  return "NONE";
}

std::string_view to_string(SearchMode m) noexcept { return m == SearchMode::Full ? "FULL" : "CONSTRAINED"; }

std::string_view to_string(Deg12Kind k) noexcept {
  switch (k) {
    case Deg12Kind::CubeOfL: return "CUBE_OF_L";
    case Deg12Kind::LOfCube: return "L_OF_CUBE";
    case Deg12Kind::NotInFamily: return "NOT_IN_FAMILY";
  }
  return "NOT_IN_FAMILY";
}

TheoremVerdict applicable_theorem(const UniPoly& f) {
  if (f.is_zero() || *f.degree() < 3) fail(ErrorCode::DegreeTooSmall, "degree of f must be at least 3");
  TheoremVerdict v;
  v.degree = *f.degree();
  const auto d = static_cast<unsigned>(v.degree);
  v.two_adic = static_cast<unsigned>(std::countr_zero(d));
  v.odd_part = d >> v.two_adic;
  v.degree_class = classify_exponent(d);
  const auto support = f.support();
  v.has_odd_term = std::any_of(support.begin(), support.end(), [](unsigned e) { return e % 2 == 1; });

  if (d == 12) {
    v.applicable = Theorem::Degree12;
  } else if (v.two_adic == 0) {
    if (v.degree_class.kind == ExponentKind::NotExceptional) {
      v.applicable = Theorem::OddDegree;
    } else if (v.degree_class.kind == ExponentKind::Gold) {
      const UniPoly tail = f + UniPoly::monomial(f.field_ptr(), d, f.leading_coeff().bits());
      const int bound = (1 << (v.degree_class.k - 1)) + 1;
      v.gold_tail_degree = tail.degree().value_or(-1);
      if (*v.gold_tail_degree <= bound) {
        for (unsigned j : tail.support()) {
          if (!is_q_affine_exponent(j)) v.irreducibility_candidates.push_back(j);
        }
        if (!v.irreducibility_candidates.empty()) v.applicable = Theorem::GoldTail;
      }
    }
  } else if (v.two_adic == 1) {
    if (v.has_odd_term) v.applicable = Theorem::TwiceOddDegree;
  } else if (v.two_adic == 2 && v.odd_part % 4 == 3) {
    v.applicable = Theorem::FourTimesOdd;
  }
  return v;
}

TriPoly divisor_polynomial(const DivisorParams& p, const FieldPtr& ext) {
  const TriPoly squares(ext, {{{2, 0, 0}, p.c1.bits()}, {{0, 2, 0}, p.c1.bits()}, {{0, 0, 2}, p.c1.bits()}});
  const TriPoly cross(ext, {{{1, 1, 0}, p.c4.bits()}, {{1, 0, 1}, p.c4.bits()}, {{0, 1, 1}, p.c4.bits()}});
  const TriPoly linear(ext, {{{1, 0, 0}, p.b1.bits()}, {{0, 1, 0}, p.b1.bits()}, {{0, 0, 1}, p.b1.bits()}});
  return big_a(ext) + squares + cross + linear + TriPoly::constant(ext, p.d.bits());
}

bool divisor_divides(const DivisorParams& params, const TriPoly& phi, const Embedding& embedding) {
  if (phi.is_zero()) fail(ErrorCode::InvalidArgument, "phi must be nonzero");
  const TriPoly lifted = same_field(phi.field(), *embedding.target()) ? phi : phi.embed(embedding);
  return exact_divide(lifted, divisor_polynomial(params, embedding.target())).exact;
}

DivisorSearch cubic_divisor_search(const UniPoly& f, std::optional<SearchMode> mode, unsigned workers) {
  const int deg = f.degree().value_or(0);
  if (deg % 4 != 0 || (deg / 4) % 4 != 3) {
    fail(ErrorCode::DegreeShapeMismatch, "degree " + std::to_string(deg) + " is not 4e with e = 3 mod 4");
  }
  const std::uint32_t q = f.field().size();
  if (q > 8) fail(ErrorCode::SearchSpaceTooLarge, "divisor search supports q <= 8");
  const SearchMode used = mode.value_or(q == 2 ? SearchMode::Full : SearchMode::Constrained);
  if (used == SearchMode::Full && q != 2) {
    fail(ErrorCode::SearchSpaceTooLarge, "full divisor scan over F_{q^3}^4 is limited to q = 2");
  }

  const Tower tower = make_tower(f.field_ptr());
  const Field& ext = *tower.ext;
  const TriPoly phi = build_phi(f).poly.embed(tower.embedding);

  std::vector<DivisorParams> candidates;
  if (used == SearchMode::Full) {
    const std::uint32_t n = ext.size();
    for (std::uint32_t c1 = 0; c1 < n; ++c1)
      for (std::uint32_t c4 = 0; c4 < n; ++c4)
        for (std::uint32_t b1 = 0; b1 < n; ++b1)
          for (std::uint32_t d = 0; d < n; ++d)
            candidates.push_back({Felt(ext, c1), Felt(ext, c4), Felt(ext, b1), Felt(ext, d)});
  } else {
    const auto kernel = trace_zero_elements(tower);
    const Felt zero(ext, 0);
    for (const Felt& c1 : kernel) {
      std::vector<Felt> ds = kernel;
      ds.push_back(c1.pow(3));
      std::sort(ds.begin(), ds.end());
      ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
      for (const Felt& d : ds) candidates.push_back({c1, c1, zero, d});
    }
  }

  std::vector<std::vector<DivisorParams>> found(chunk_count(candidates.size(), workers));
  parallel_chunks(candidates.size(), workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t i = begin; i < end; ++i) {
      if (exact_divide(phi, divisor_polynomial(candidates[i], tower.ext)).exact) found[chunk].push_back(candidates[i]);
    }
  });

  DivisorSearch result{used, {}, candidates.size()};
  for (auto& part : found) result.divisors.insert(result.divisors.end(), part.begin(), part.end());
  std::sort(result.divisors.begin(), result.divisors.end());
  return result;
}

TriPoly galois_product_closed_form(const Felt& param, ProductForm form, const Tower& tower) {
  const auto [beta, gamma] = linearized_coeffs(param, tower);
  const FieldPtr& ext = tower.ext;
  const TriPoly A = big_a(ext);
  const TriPoly A2 = A * A;
  const TriPoly A3 = A2 * A;
  if (form == ProductForm::Second) {
    return A3 + A.scaled(beta) + TriPoly::constant(ext, gamma.bits());
  }
  const TriPoly M = mu(ext);
  const TriPoly M2 = M * M;
  return A3 + (A * M2).scaled(beta) + (A2 + M2 * M).scaled(gamma) + A.scaled(gamma * gamma + beta * beta * beta) +
         M.scaled(beta * beta * gamma) + TriPoly::constant(ext, (gamma * gamma * gamma).bits());
}

TriPoly galois_product_expand(const Felt& param, ProductForm form, const Tower& tower) {
  if (!rel_trace(param, tower.q_degree()).is_zero()) {
    fail(ErrorCode::TraceNotZero, "relative trace of " + param.hex() + " is nonzero");
  }
  const FieldPtr& ext = tower.ext;
  const TriPoly A = big_a(ext);
  const TriPoly M = mu(ext);
  TriPoly product = TriPoly::constant(ext, 1);
  for (unsigned i = 0; i < 3; ++i) {
    const Felt p = tower.rho(param, i);
    TriPoly factor = A + TriPoly::constant(ext, form == ProductForm::First ? p.pow(3).bits() : p.bits());
    if (form == ProductForm::First) factor = factor + M.scaled(p);
    product = product * factor;
  }
  ensure(product == galois_product_closed_form(param, form, tower), "product does not match its closed form");
  return product;
}

UniPoly family_generate(Deg12Kind kind, const Felt& param, const Tower& tower, const std::optional<UniPoly>& L1) {
  if (kind == Deg12Kind::NotInFamily) fail(ErrorCode::InvalidArgument, "NOT_IN_FAMILY has no generator");
  if (L1) {
    if (!same_field(L1->field(), *tower.base)) fail(ErrorCode::ContextMismatch, "L1 must be over the base field");
    if (!is_q_affine(*L1) || L1->degree().value_or(0) > 8) {
      fail(ErrorCode::NotQAffine, to_string(*L1) + " is not q-affine of degree at most 8");
    }
  }
  const UniPoly L = linearized_from_param(param, tower);
  const UniPoly cube = UniPoly::monomial(tower.base, 3);
  UniPoly f = kind == Deg12Kind::CubeOfL ? compose(cube, L) : compose(L, cube);
  if (L1) f = f + *L1;
  return f;
}

std::optional<UniPoly> reconstruct(const Deg12Witness& w) {
  if (w.kind == Deg12Kind::NotInFamily || !w.L || !w.L1) return std::nullopt;
  const UniPoly cube = UniPoly::monomial(w.tower.base, 3);
  const UniPoly core = w.kind == Deg12Kind::CubeOfL ? compose(cube, *w.L) : compose(*w.L, cube);
  return core.scaled(w.lead) + *w.L1;
}

Deg12Witness deg12_classify(const UniPoly& f) {
  if (f.degree() != 12) fail(ErrorCode::DegreeNot12, "f has degree " + std::to_string(f.degree().value_or(-1)));
  Deg12Witness w(make_tower(f.field_ptr()));
  const Tower& tower = w.tower;
  w.lead = f.leading_coeff();
  const Felt lead_inv = tower.embed(w.lead).inverse();
  const TriPoly phi = build_phi(f).poly.embed(tower.embedding).scaled(lead_inv);
  const auto kernel = trace_zero_elements(tower);

  std::optional<Felt> match;
  for (const Felt& c : kernel) {
    if (!c.is_zero() && galois_product_closed_form(c, ProductForm::First, tower) == phi) {
      w.kind = Deg12Kind::CubeOfL;
      match = c;
      break;
    }
  }
  if (!match) {
    for (const Felt& d : kernel) {
      if (galois_product_closed_form(d, ProductForm::Second, tower) == phi) {
        w.kind = Deg12Kind::LOfCube;
        match = d;
        break;
      }
    }
  }
  if (!match) return w;

  w.orbit = tower.galois_orbit(*match);
  w.param = w.orbit.front();
  w.L = linearized_from_param(*w.param, tower);
  w.beta = w.L->coeff(2);
  w.gamma = w.L->coeff(1);
  const UniPoly cube = UniPoly::monomial(tower.base, 3);
  const UniPoly core = w.kind == Deg12Kind::CubeOfL ? compose(cube, *w.L) : compose(*w.L, cube);
  w.L1 = f + core.scaled(w.lead);

  ensure(is_q_affine(*w.L1) && w.L1->degree().value_or(0) <= 8, "witness remainder is not q-affine of degree <= 8");
  ensure(reconstruct(w) == f, "witness does not reconstruct f");
  ensure(is_bijective_on(*w.L, tower.base), "witness L is not bijective on F_q");
  return w;
}

Felt galois_norm(const Felt& c1, const Tower& tower) { return c1 * tower.rho(c1, 1) * tower.rho(c1, 2); }

Felt galois_determinant(const Felt& c1, const Tower& tower) {
  const Felt c = c1;
  const Felt r1 = tower.rho(c, 1);
  const Felt r2 = tower.rho(c, 2);
  const Felt sq = c * c;
  const Felt r1_sq = tower.rho(sq, 1);
  const Felt r2_sq = tower.rho(sq, 2);
  return sq * r1 + c * r1_sq + sq * r2 + r1_sq * r2 + c * r2_sq + r1 * r2_sq;
}

std::array<Felt, 3> linear_system_residuals(const Felt& c1, const Felt& d, const Tower& tower) {
  const Felt c0 = c1;
  const Felt ca = tower.rho(c1, 1);
  const Felt cb = tower.rho(c1, 2);
  const Felt d0 = d;
  const Felt da = tower.rho(d, 1);
  const Felt db = tower.rho(d, 2);
  return {c0 * ca * db + ca * cb * d0 + cb * c0 * da,
          (ca + c0) * db + (cb + ca) * d0 + (c0 + cb) * da,
          d0 + da + db + c0 * ca * cb};
}

LargeNReport not_apn_for_large_n_report(const UniPoly& f, std::optional<std::pair<unsigned, unsigned>> n_range,
                                        unsigned workers) {
  LargeNReport r;
  r.verdict = applicable_theorem(f);
  switch (r.verdict.applicable) {
    case Theorem::OddDegree:
    case Theorem::TwiceOddDegree:
      r.conclusion = "not APN over F_{q^n} for all sufficiently large n";
      break;
    case Theorem::GoldTail:
      r.conclusion =
          "not APN for large n provided some listed phi_j is absolutely irreducible (hypothesis not certified)";
      break;
    case Theorem::FourTimesOdd:
      r.divisor_search = cubic_divisor_search(f, std::nullopt, workers);
      r.conclusion = r.divisor_search->divisors.empty()
                         ? "no cubic divisor A + P: not APN over F_{q^n} for large n"
                         : "inconclusive: cubic divisors A + P exist";
      break;
    case Theorem::Degree12:
      r.witness = deg12_classify(f);
      r.conclusion = r.witness->kind == Deg12Kind::NotInFamily
                         ? "not in the exceptional family: not APN over F_{q^n} for large n"
                         : "CCZ-equivalent to the Gold function x^3";
      break;
    case Theorem::None:
      r.conclusion = "no criterion applies";
      break;
  }
  if (n_range) {
    for (unsigned n = n_range->first; n <= n_range->second; ++n) r.empirical.push_back(apn_over_extension(f, n, workers));
  }
  return r;
}

}  // namespace apnforge

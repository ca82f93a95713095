#include "apnforge/unipoly.hpp"

#include <algorithm>

namespace apnforge {

UniPoly::UniPoly(FieldPtr field) : field_(std::move(field)) {}

UniPoly::UniPoly(FieldPtr field, std::vector<std::uint32_t> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (!field_->contains(c)) fail(ErrorCode::UnknownCoefficient, to_hex(c) + " is not an element of " + field_->spec());
  }
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (static_cast<int>(coeffs_.size()) > kMaxUniDegree + 1) {
    fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(coeffs_.size() - 1) + " exceeds 64");
  }
}

UniPoly UniPoly::constant(FieldPtr field, std::uint32_t c) { return UniPoly(std::move(field), {c}); }

UniPoly UniPoly::monomial(FieldPtr field, unsigned exponent, std::uint32_t c) {
  if (exponent > kMaxUniDegree) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(exponent) + " exceeds 64");
  std::vector<std::uint32_t> coeffs(exponent + 1, 0);
  coeffs[exponent] = c;
  return UniPoly(std::move(field), std::move(coeffs));
}

std::optional<int> UniPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

Felt UniPoly::leading_coeff() const { return {*field_, coeffs_.empty() ? 0 : coeffs_.back()}; }

std::vector<unsigned> UniPoly::support() const {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.push_back(i);
  }
  return out;
}

std::uint32_t UniPoly::eval_bits(std::uint32_t x) const noexcept {
  std::uint32_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_->mul(acc, x) ^ *it;
  return acc;
}

Felt UniPoly::eval(const Felt& x) const {
  if (!same_field(x.field(), *field_)) fail(ErrorCode::ContextMismatch, "evaluation point outside the coefficient field");
  return {*field_, eval_bits(x.bits())};
}

Felt UniPoly::eval(const Felt& x, const Embedding& embedding) const {
  if (!same_field(*embedding.source(), *field_)) fail(ErrorCode::ContextMismatch, "embedding source differs");
  return embed(embedding).eval(x);
}

UniPoly UniPoly::embed(const Embedding& embedding) const {
  if (!same_field(*embedding.source(), *field_)) fail(ErrorCode::ContextMismatch, "embedding source differs");
  std::vector<std::uint32_t> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [&](auto c) { return embedding.apply(c); });
  return UniPoly(embedding.target(), std::move(out));
}

UniPoly UniPoly::scaled(const Felt& c) const {
  if (!same_field(c.field(), *field_)) fail(ErrorCode::ContextMismatch, "scalar outside the coefficient field");
  std::vector<std::uint32_t> out(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), out.begin(), [&](auto a) { return field_->mul(a, c.bits()); });
  return UniPoly(field_, std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(field_, 1);
  UniPoly base = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  if (!same_field(*a.field_, *b.field_)) fail(ErrorCode::ContextMismatch, "polynomials over different fields");
  std::vector<std::uint32_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] ^= a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] ^= b.coeffs_[i];
  return UniPoly(a.field_, std::move(out));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (!same_field(*a.field_, *b.field_)) fail(ErrorCode::ContextMismatch, "polynomials over different fields");
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
  const std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (n > kMaxUniDegree + 1) fail(ErrorCode::DegreeTooLarge, "product degree " + std::to_string(n - 1) + " exceeds 64");
  std::vector<std::uint32_t> out(n, 0);
  const Field& f = *a.field_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] ^= f.mul(a.coeffs_[i], b.coeffs_[j]);
  }
  return UniPoly(a.field_, std::move(out));
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return same_field(*a.field_, *b.field_) && a.coeffs_ == b.coeffs_;
}

bool is_q_affine(const UniPoly& p) {
  const auto s = p.support();
  return std::all_of(s.begin(), s.end(), is_q_affine_exponent);
}

QAffineSplit split_q_affine(const UniPoly& p) {
  std::vector<std::uint32_t> core(p.coeff_bits().size(), 0);
  std::vector<std::uint32_t> affine(p.coeff_bits().size(), 0);
  for (unsigned e = 0; e < core.size(); ++e) {
    (is_q_affine_exponent(e) ? affine : core)[e] = p.coeff_bits(e);
  }
  return {UniPoly(p.field_ptr(), std::move(core)), UniPoly(p.field_ptr(), std::move(affine))};
}

UniPoly compose(const UniPoly& outer, const UniPoly& inner) {
  if (!same_field(outer.field(), inner.field())) fail(ErrorCode::ContextMismatch, "polynomials over different fields");
  if (outer.is_zero()) return outer;
  if (!inner.is_zero() && *outer.degree() * *inner.degree() > kMaxUniDegree) {
    fail(ErrorCode::DegreeTooLarge, "composition degree exceeds 64");
  }
  const auto c = outer.coeff_bits();
  UniPoly acc = UniPoly::zero(outer.field_ptr());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + UniPoly::constant(outer.field_ptr(), *it);
  }
  return acc;
}

bool is_bijective_on(const UniPoly& p, const FieldPtr& field) {
  constexpr std::uint32_t kLimit = std::uint32_t{1} << 20;
  if (field->size() > kLimit) fail(ErrorCode::FieldTooLarge, field->spec() + " exceeds 2^20 elements");
  const UniPoly q = same_field(p.field(), *field) ? p : p.embed(find_embedding(p.field_ptr(), field));
  std::vector<bool> seen(field->size(), false);
  for (std::uint32_t x = 0; x < field->size(); ++x) {
    const std::uint32_t y = q.eval_bits(x);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

LinearizedCoeffs linearized_coeffs(const Felt& c, const Tower& tower) {
  if (!same_field(c.field(), *tower.ext)) fail(ErrorCode::ContextMismatch, "parameter must lie in F_{q^3}");
  if (!rel_trace(c, tower.q_degree()).is_zero()) {
    fail(ErrorCode::TraceNotZero, "relative trace of " + c.hex() + " is nonzero");
  }
  const Felt c1 = tower.rho(c, 1);
  const Felt c2 = tower.rho(c, 2);
  return {c * c1 + c * c2 + c1 * c2, c * c1 * c2};
}

UniPoly linearized_from_param(const Felt& c, const Tower& tower) {
  const auto [beta, gamma] = linearized_coeffs(c, tower);
  const Felt b = tower.descend(beta);
  const Felt g = tower.descend(gamma);
  UniPoly L(tower.base, {0, g.bits(), b.bits(), 0, 1});
  const UniPoly lifted = L.embed(tower.embedding);
  for (const Felt& root : {Felt(*tower.ext, 0), c, tower.rho(c, 1), tower.rho(c, 2)}) {
    ensure(lifted.eval(root).is_zero(), "linearized polynomial does not vanish on the conjugates of its parameter");
  }
  return L;
}

std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto c = p.coeff_bits();
  for (int e = static_cast<int>(c.size()) - 1; e >= 0; --e) {
    const std::uint32_t a = c[static_cast<std::size_t>(e)];
    if (a == 0) continue;
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += a == 1 ? "1" : to_hex(a);
      continue;
    }
    if (a != 1) out += to_hex(a) + "*";
    out += "x";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace apnforge

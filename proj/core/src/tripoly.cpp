#include "apnforge/tripoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace apnforge {

namespace {

void check_bound(const Monomial& m) {
  if (m.x > kMaxVarDegree || m.y > kMaxVarDegree || m.z > kMaxVarDegree) {
    fail(ErrorCode::DegreeBoundExceeded, "variable degree above " + std::to_string(kMaxVarDegree));
  }
}

void require_same(const Field& a, const Field& b) {
  if (!same_field(a, b)) fail(ErrorCode::ContextMismatch, "polynomials over different fields");
}

std::vector<Term> from_accumulator(const std::unordered_map<std::uint32_t, std::uint32_t>& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (const auto& [key, coeff] : acc) {
    if (coeff != 0) terms.push_back({Monomial::from_key(key), coeff});
  }
  return terms;
}

}  // namespace

TriPoly::TriPoly(FieldPtr field) : field_(std::move(field)) {}

TriPoly::TriPoly(FieldPtr field, std::vector<Term> terms) : field_(std::move(field)), terms_(std::move(terms)) {
  canonicalize();
}

void TriPoly::canonicalize() {
  for (const auto& t : terms_) {
    check_bound(t.mono);
    if (!field_->contains(t.coeff)) {
      fail(ErrorCode::UnknownCoefficient, to_hex(t.coeff) + " is not an element of " + field_->spec());
    }
  }
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mono.key() > b.mono.key(); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff ^= t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

TriPoly TriPoly::constant(FieldPtr field, std::uint32_t c) { return TriPoly(std::move(field), {{Monomial{}, c}}); }

TriPoly TriPoly::monomial(FieldPtr field, Monomial m, std::uint32_t c) {
  return TriPoly(std::move(field), {{m, c}});
}

int TriPoly::total_degree() const noexcept {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.total());
}

bool TriPoly::is_homogeneous() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.total() == terms_.front().mono.total(); });
}

const Term& TriPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return terms_.front();
}

std::uint32_t TriPoly::coeff_bits(const Monomial& m) const noexcept {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m.key(),
                                   [](const Term& t, std::uint32_t key) { return t.mono.key() > key; });
  return it != terms_.end() && it->mono == m ? it->coeff : 0;
}

Felt TriPoly::eval(const Felt& x, const Felt& y, const Felt& z) const {
  for (const Felt* v : {&x, &y, &z}) require_same(v->field(), *field_);
  const Field& f = *field_;
  std::uint32_t acc = 0;
  for (const auto& t : terms_) {
    acc ^= f.mul(t.coeff, f.mul(f.pow(x.bits(), t.mono.x), f.mul(f.pow(y.bits(), t.mono.y), f.pow(z.bits(), t.mono.z))));
  }
  return {f, acc};
}

TriPoly TriPoly::embed(const Embedding& embedding) const {
  require_same(*embedding.source(), *field_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = embedding.apply(t.coeff);
  return TriPoly(embedding.target(), std::move(out));
}

TriPoly TriPoly::scaled(const Felt& c) const {
  require_same(c.field(), *field_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = field_->mul(t.coeff, c.bits());
  return TriPoly(field_, std::move(out));
}

TriPoly TriPoly::pow(unsigned e) const {
  TriPoly result = constant(field_, 1);
  TriPoly base = *this;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

TriPoly TriPoly::permuted(const std::array<int, 3>& perm) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::array<unsigned, 3> src{t.mono.x, t.mono.y, t.mono.z};
    std::array<unsigned, 3> dst{};
    for (int v = 0; v < 3; ++v) dst[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = src[static_cast<std::size_t>(v)];
    out.push_back({{dst[0], dst[1], dst[2]}, t.coeff});
  }
  return TriPoly(field_, std::move(out));
}

TriPoly operator+(const TriPoly& a, const TriPoly& b) {
  require_same(*a.field_, *b.field_);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono.key() > ib->mono.key())) {
      out.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono.key() > ia->mono.key()) {
      out.push_back(*ib++);
    } else {
      if (const std::uint32_t c = ia->coeff ^ ib->coeff; c != 0) out.push_back({ia->mono, c});
      ++ia;
      ++ib;
    }
  }
  TriPoly r(a.field_);
  r.terms_ = std::move(out);
  return r;
}

TriPoly operator*(const TriPoly& a, const TriPoly& b) {
  require_same(*a.field_, *b.field_);
  if (a.is_zero() || b.is_zero()) return TriPoly(a.field_);
  const Field& f = *a.field_;
  std::unordered_map<std::uint32_t, std::uint32_t> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const Monomial m = s.mono * t.mono;
      check_bound(m);
      acc[m.key()] ^= f.mul(s.coeff, t.coeff);
    }
  }
  return TriPoly(a.field_, from_accumulator(acc));
}

bool operator==(const TriPoly& a, const TriPoly& b) {
  if (!same_field(*a.field_, *b.field_) || a.terms_.size() != b.terms_.size()) return false;
  return std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                    [](const Term& s, const Term& t) { return s.mono == t.mono && s.coeff == t.coeff; });
}

std::vector<int> HomogDecomp::degrees() const {
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(p.degree);
  return out;
}

HomogDecomp homog_decompose(const TriPoly& p) {
  HomogDecomp d;
  std::vector<Term> current;
  int degree = -1;
  const auto flush = [&] {
    if (!current.empty()) d.parts.push_back({degree, TriPoly(p.field_ptr(), std::move(current))});
    current.clear();
  };
  for (const auto& t : p.terms()) {
    if (static_cast<int>(t.mono.total()) != degree) {
      flush();
      degree = static_cast<int>(t.mono.total());
    }
    current.push_back(t);
  }
  flush();
  return d;
}

TriPoly sum(const HomogDecomp& d, FieldPtr field) {
  TriPoly acc(std::move(field));
  for (const auto& p : d.parts) acc = acc + p.part;
  return acc;
}

TriPoly big_a(FieldPtr field) {
  return TriPoly(std::move(field), {{{2, 1, 0}, 1}, {{2, 0, 1}, 1}, {{1, 2, 0}, 1},
                                    {{0, 2, 1}, 1}, {{1, 0, 2}, 1}, {{0, 1, 2}, 1}});
}

TriPoly mu(FieldPtr field) {
  return TriPoly(std::move(field), {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1},
                                    {{1, 1, 0}, 1}, {{1, 0, 1}, 1}, {{0, 1, 1}, 1}});
}

Division divide(const TriPoly& numerator, const TriPoly& divisor) {
  require_same(numerator.field(), divisor.field());
  if (divisor.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
  const Field& f = numerator.field();
  const Term lead = divisor.leading_term();
  const std::uint32_t lead_inv = f.inv(lead.coeff);

  std::map<std::uint32_t, std::uint32_t, std::greater<>> work;
  for (const auto& t : numerator.terms()) work.emplace(t.mono.key(), t.coeff);

  std::vector<Term> quotient, remainder;
  while (!work.empty()) {
    const auto it = work.begin();
    const Monomial m = Monomial::from_key(it->first);
    const std::uint32_t c = it->second;
    if (!lead.mono.divides(m)) {
      remainder.push_back({m, c});
      work.erase(it);
      continue;
    }
    const Monomial qm = m / lead.mono;
    const std::uint32_t qc = f.mul(c, lead_inv);
    quotient.push_back({qm, qc});
    for (const auto& t : divisor.terms()) {
      const auto key = (qm * t.mono).key();
      auto [slot, inserted] = work.try_emplace(key, 0);
      slot->second ^= f.mul(qc, t.coeff);
      if (slot->second == 0) work.erase(slot);
    }
  }
  return {TriPoly(numerator.field_ptr(), std::move(quotient)), TriPoly(numerator.field_ptr(), std::move(remainder))};
}

ExactQuotient exact_divide(const TriPoly& numerator, const TriPoly& divisor) {
  auto d = divide(numerator, divisor);
  return {std::move(d.quotient), d.remainder.is_zero()};
}

bool is_symmetric(const TriPoly& p) {
  // A transposition and a 3-cycle generate S3.
  return p.permuted({1, 0, 2}) == p && p.permuted({1, 2, 0}) == p;
}

TriPoly substitute_linear(const UniPoly& p, LinearForm form) {
  std::vector<Term> terms;
  for (const unsigned e : p.support()) {
    const std::uint32_t a = p.coeff_bits(e);
    switch (form) {
      case LinearForm::X: terms.push_back({{e, 0, 0}, a}); break;
      case LinearForm::Y: terms.push_back({{0, e, 0}, a}); break;
      case LinearForm::Z: terms.push_back({{0, 0, e}, a}); break;
      case LinearForm::XYZ:
        // Multinomial coefficients mod 2: (i, j, k) survives iff its binary
        // digits partition those of e.
        for (unsigned i = e;; i = (i - 1) & e) {
          const unsigned rest = e ^ i;
          for (unsigned j = rest;; j = (j - 1) & rest) {
            terms.push_back({{i, j, rest ^ j}, a});
            if (j == 0) break;
          }
          if (i == 0) break;
        }
        break;
    }
  }
  return TriPoly(p.field_ptr(), std::move(terms));
}

std::string to_string(const TriPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    const auto var = [&](char name, unsigned e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    var('x', t.mono.x);
    var('y', t.mono.y);
    var('z', t.mono.z);
    if (mono.empty()) {
      out += t.coeff == 1 ? "1" : to_hex(t.coeff);
    } else {
      out += (t.coeff == 1 ? "" : to_hex(t.coeff) + "*") + mono;
    }
  }
  return out;
}

}  // namespace apnforge

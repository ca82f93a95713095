#include "apnforge/field.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>

namespace apnforge {

namespace {

std::uint64_t gf2_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = gf2_degree(m);
  for (int da = gf2_degree(a); da >= dm; da = gf2_degree(a)) a ^= m << (da - dm);
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

int gf2_degree(std::uint64_t poly) noexcept { return poly == 0 ? -1 : 63 - std::countl_zero(poly); }

bool gf2_is_irreducible(Gf2Poly poly) {
  const int m = gf2_degree(poly);
  if (m <= 0) return false;
  for (int k = 1; 2 * k <= m; ++k) {
    for (std::uint64_t d = std::uint64_t{1} << k; d < (std::uint64_t{1} << (k + 1)); ++d) {
      if (gf2_mod(poly, d) == 0) return false;
    }
  }
  return true;
}

Gf2Poly lowest_irreducible(int degree) {
  if (degree < 1 || degree > kMaxFieldDegree) {
    fail(ErrorCode::DegreeOutOfRange, "field degree " + std::to_string(degree) + " outside 1..24");
  }
  for (Gf2Poly p = Gf2Poly{1} << degree; p < (Gf2Poly{2} << degree); ++p) {
    if (gf2_is_irreducible(p)) return p;
  }
  fail(ErrorCode::Internal, "no irreducible polynomial found");
}

Field::Field(int degree, Gf2Poly modulus) : degree_(degree), modulus_(modulus) {
  if (degree < 1 || degree > kMaxFieldDegree) {
    fail(ErrorCode::DegreeOutOfRange, "field degree " + std::to_string(degree) + " outside 1..24");
  }
  if (gf2_degree(modulus) != degree) {
    fail(ErrorCode::InvalidModulus, "modulus " + to_hex(modulus) + " is not of degree " + std::to_string(degree));
  }
  if (!gf2_is_irreducible(modulus)) {
    fail(ErrorCode::ReducibleModulus, "modulus " + to_hex(modulus) + " factors over GF(2)");
  }
  const std::uint64_t order = size() - 1;
  if (degree <= kMaxLogTableDegree) {
    const std::uint32_t sample = degree == 1 ? 1 : 2;
    ensure(pow(sample, order) == 1, "multiplicative group order check failed");
    primitive_ = find_primitive();
    exp_.resize(2 * order);
    log_.assign(size(), 0);
    std::uint32_t v = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = v;
      exp_[i + order] = v;
      log_[v] = static_cast<std::uint32_t>(i);
      v = mul_slow(v, primitive_);
    }
  } else {
    primitive_ = find_primitive();
  }
}

std::string Field::spec() const { return "gf(2^" + std::to_string(degree_) + ")/" + to_hex(modulus_); }

std::uint32_t Field::mul_slow(std::uint32_t a, std::uint32_t b) const noexcept {
  std::uint64_t product = 0;
  std::uint64_t aa = a;
  for (std::uint32_t bb = b; bb != 0; bb >>= 1, aa <<= 1) {
    if (bb & 1) product ^= aa;
  }
  for (int bit = 2 * degree_ - 2; bit >= degree_; --bit) {
    if ((product >> bit) & 1) product ^= std::uint64_t{modulus_} << (bit - degree_);
  }
  return static_cast<std::uint32_t>(product);
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (e != 0) {
    if (e & 1) result = log_.empty() ? mul_slow(result, base) : mul(result, base);
    base = log_.empty() ? mul_slow(base, base) : mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (!log_.empty()) return exp_[(size() - 1 - log_[a]) % (size() - 1)];
  return pow(a, size() - 2);
}

std::uint32_t Field::frob(std::uint32_t a, unsigned i) const noexcept {
  for (unsigned k = i % static_cast<unsigned>(degree_); k > 0; --k) a = mul(a, a);
  return a;
}

std::uint32_t Field::eval_gf2(Gf2Poly poly, std::uint32_t a) const noexcept {
  std::uint32_t acc = 0;
  for (int bit = gf2_degree(poly); bit >= 0; --bit) {
    acc = mul(acc, a) ^ ((poly >> bit) & 1);
  }
  return acc;
}

std::uint32_t Field::find_primitive() const {
  const std::uint64_t order = size() - 1;
  const auto primes = prime_factors(order);
  for (std::uint32_t g = 1; g < size(); ++g) {
    const bool generates = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t p) {
      std::uint32_t r = 1, b = g;
      for (std::uint64_t e = order / p; e != 0; e >>= 1) {
        if (e & 1) r = mul_slow(r, b);
        b = mul_slow(b, b);
      }
      return r != 1;
    });
    if (generates) return g;
  }
  fail(ErrorCode::Internal, "no primitive element");
}

bool same_field(const Field& a, const Field& b) noexcept { return &a == &b || a == b; }

FieldPtr make_field(int degree, std::optional<Gf2Poly> modulus) {
  if (degree < 1 || degree > kMaxFieldDegree) {
    fail(ErrorCode::DegreeOutOfRange, "field degree " + std::to_string(degree) + " outside 1..24");
  }
  return std::make_shared<const Field>(degree, modulus.value_or(lowest_irreducible(degree)));
}

FieldPtr parse_field_spec(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  const auto expect = [&](std::string_view token) {
    if (text.substr(0, token.size()) != token) {
      throw SyntaxError(original.size() - text.size(), "expected '" + std::string(token) + "' in field spec");
    }
    text.remove_prefix(token.size());
  };
  expect("gf(2^");
  int degree = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), degree);
  if (ec != std::errc{}) throw SyntaxError(original.size() - text.size(), "expected field degree");
  text.remove_prefix(static_cast<std::size_t>(end - text.data()));
  expect(")");
  if (text.empty()) return make_field(degree);
  expect("/0x");
  std::uint64_t modulus = 0;
  auto [mend, mec] = std::from_chars(text.data(), text.data() + text.size(), modulus, 16);
  if (mec != std::errc{} || mend != text.data() + text.size()) {
    throw SyntaxError(original.size() - text.size(), "expected hex modulus");
  }
  if (modulus > 0xFFFFFFFFu) fail(ErrorCode::InvalidModulus, "modulus too wide");
  return make_field(degree, static_cast<Gf2Poly>(modulus));
}

std::string to_hex(std::uint32_t bits) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", bits);
  return buf;
}

Felt::Felt(const Field& field, std::uint32_t bits) : field_(&field), bits_(bits) {
  if (!field.contains(bits)) {
    fail(ErrorCode::UnknownCoefficient, to_hex(bits) + " is not an element of " + field.spec());
  }
}

const Field& Felt::field() const {
  if (field_ == nullptr) fail(ErrorCode::ContextMismatch, "element has no field");
  return *field_;
}

namespace {
const Field& common_field(const Felt& a, const Felt& b) {
  const Field& fa = a.field();
  if (!same_field(fa, b.field())) fail(ErrorCode::ContextMismatch, "elements of different fields");
  return fa;
}
}  // namespace

Felt operator+(const Felt& a, const Felt& b) { return {common_field(a, b), a.bits_ ^ b.bits_}; }

Felt operator*(const Felt& a, const Felt& b) {
  const Field& f = common_field(a, b);
  return {f, f.mul(a.bits_, b.bits_)};
}

Felt operator/(const Felt& a, const Felt& b) {
  const Field& f = common_field(a, b);
  return {f, f.mul(a.bits_, f.inv(b.bits_))};
}

bool operator==(const Felt& a, const Felt& b) {
  if (a.field_ == nullptr || b.field_ == nullptr) return a.field_ == b.field_ && a.bits_ == b.bits_;
  return a.bits_ == b.bits_ && same_field(*a.field_, *b.field_);
}

Felt Felt::pow(std::uint64_t e) const { return {field(), field().pow(bits_, e)}; }
Felt Felt::inverse() const { return {field(), field().inv(bits_)}; }
std::string Felt::hex() const { return to_hex(bits_); }

Felt frobenius(const Felt& x, unsigned i) { return {x.field(), x.field().frob(x.bits(), i)}; }

Embedding::Embedding(FieldPtr source, FieldPtr target, std::uint32_t generator_image)
    : source_(std::move(source)), target_(std::move(target)), generator_image_(generator_image) {
  if (target_->degree() % source_->degree() != 0) {
    fail(ErrorCode::DegreeMismatch, "degree " + std::to_string(source_->degree()) + " does not divide " +
                                        std::to_string(target_->degree()));
  }
  if (!target_->contains(generator_image) || target_->eval_gf2(source_->modulus(), generator_image) != 0) {
    fail(ErrorCode::NoRoot, to_hex(generator_image) + " is not a root of the source modulus");
  }
  std::uint32_t power = 1;
  for (int i = 0; i < source_->degree(); ++i) {
    basis_images_.push_back(power);
    power = target_->mul(power, generator_image);
  }
  for (int i = 0; i < source_->degree(); ++i) {
    Pivot p{basis_images_[static_cast<std::size_t>(i)], std::uint32_t{1} << i, 0};
    for (const auto& q : pivots_) {
      if ((p.vector >> q.bit) & 1) {
        p.vector ^= q.vector;
        p.combination ^= q.combination;
      }
    }
    ensure(p.vector != 0, "embedding is not injective");
    p.bit = gf2_degree(p.vector);
    pivots_.push_back(p);
  }
}

std::uint32_t Embedding::apply(std::uint32_t bits) const noexcept {
  std::uint32_t out = 0;
  for (std::size_t i = 0; bits != 0; ++i, bits >>= 1) {
    if (bits & 1) out ^= basis_images_[i];
  }
  return out;
}

Felt Embedding::operator()(const Felt& x) const {
  if (!same_field(x.field(), *source_)) fail(ErrorCode::ContextMismatch, "element is not in the embedding source");
  return {*target_, apply(x.bits())};
}

std::optional<std::uint32_t> Embedding::preimage(std::uint32_t bits) const noexcept {
  std::uint32_t combination = 0;
  for (const auto& p : pivots_) {
    if ((bits >> p.bit) & 1) {
      bits ^= p.vector;
      combination ^= p.combination;
    }
  }
  if (bits != 0) return std::nullopt;
  return combination;
}

Embedding find_embedding(const FieldPtr& source, const FieldPtr& target) {
  if (target->degree() % source->degree() != 0) {
    fail(ErrorCode::DegreeMismatch, "degree " + std::to_string(source->degree()) + " does not divide " +
                                        std::to_string(target->degree()));
  }
  for (std::uint32_t g = 0; g < target->size(); ++g) {
    if (target->eval_gf2(source->modulus(), g) == 0) return Embedding(source, target, g);
  }
  fail(ErrorCode::NoRoot, "source modulus has no root in target");
}

Felt Tower::rho(const Felt& x, unsigned power) const {
  return frobenius(x, static_cast<unsigned>(q_degree()) * power);
}

Felt Tower::descend(const Felt& x) const {
  const auto pre = embedding.preimage(x.bits());
  if (!pre) fail(ErrorCode::Internal, x.hex() + " does not lie in the embedded base field");
  return {*base, *pre};
}

std::vector<Felt> Tower::galois_orbit(const Felt& p) const {
  std::vector<Felt> orbit{p, rho(p, 1), rho(p, 2)};
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

Tower make_tower(const FieldPtr& base) {
  if (3 * base->degree() > kMaxFieldDegree) {
    fail(ErrorCode::FieldTooLarge, "cubic extension of " + base->spec() + " exceeds degree 24");
  }
  FieldPtr ext = make_field(3 * base->degree());
  Embedding emb = find_embedding(base, ext);
  return Tower{base, std::move(ext), std::move(emb)};
}

Felt rel_trace(const Felt& x, int q_degree) {
  if (q_degree < 1 || x.field().degree() != 3 * q_degree) {
    fail(ErrorCode::DegreeNotMultipleOfThree,
         "element of " + x.field().spec() + " is not in a cubic extension of GF(2^" + std::to_string(q_degree) + ")");
  }
  const auto k = static_cast<unsigned>(q_degree);
  return x + frobenius(x, k) + frobenius(x, 2 * k);
}

std::vector<Felt> trace_zero_elements(const Tower& tower) {
  std::vector<Felt> kernel;
  const Field& ext = *tower.ext;
  for (std::uint32_t v = 0; v < ext.size(); ++v) {
    if (rel_trace(Felt(ext, v), tower.q_degree()).is_zero()) kernel.emplace_back(ext, v);
  }
  ensure(kernel.size() == tower.q() * tower.q(), "trace kernel has wrong size");
  return kernel;
}

}  // namespace apnforge

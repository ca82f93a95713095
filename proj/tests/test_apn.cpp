#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "apnforge/apn.hpp"
#include "apnforge/phi.hpp"
#include "oracle.hpp"

using namespace apnforge;

namespace {

UniPoly from_exps(const FieldPtr& F, std::initializer_list<unsigned> exps) {
  UniPoly p(F);
  for (unsigned e : exps) p = p + UniPoly::monomial(F, e);
  return p;
}

void check_invariants(const DiffSpectrum& s) {
  std::uint64_t weighted = 0, pairs = 0;
  for (const auto& [count, mult] : s.histogram) {
    EXPECT_EQ(count % 2, 0u);
    weighted += count * mult;
    pairs += mult;
  }
  EXPECT_EQ(weighted, s.field_size * (s.field_size - 1));
  EXPECT_EQ(pairs, s.field_size * (s.field_size - 1));
}

}  // namespace

TEST(Spectrum, Examples) {
  const FieldPtr gf2 = make_field(1);
  EXPECT_EQ(spectrum(from_exps(gf2, {3}), make_field(4)).uniformity(), 2u);
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(spectrum(from_exps(gf2, {2, 1}), make_field(m)).uniformity(), 1u << m);
  const DiffSpectrum s = spectrum(from_exps(gf2, {5}), make_field(4));
  EXPECT_EQ(s.uniformity(), 4u);
  EXPECT_EQ(s.histogram, (std::map<unsigned, std::uint64_t>{{0, 180}, {4, 60}}));
}

TEST(Spectrum, TooLarge) {
  try {
    (void)spectrum(UniPoly::monomial(make_field(1), 3), make_field(15));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldTooLarge);
  }
}

TEST(Spectrum, MatchesNaiveCount) {
  std::mt19937_64 rng(211);
  for (int m : {1, 2, 3, 4, 5}) {
    const FieldPtr F = make_field(m);
    const oracle::Gf R{m, F->modulus()};
    for (int i = 0; i < 20; ++i) {
      const auto c = oracle::random_coeffs(rng, F->size(), 12);
      const DiffSpectrum s = spectrum(UniPoly(F, c), F, 1 + i % 3);
      ASSERT_EQ(s.histogram, oracle::naive_spectrum(R, c));
      check_invariants(s);
    }
  }
}

TEST(Spectrum, WorkerCountDoesNotChangeResult) {
  const FieldPtr F = make_field(9);
  const UniPoly f(F, {0, 3, 0, 0x11, 0, 0x1ff, 7});
  const DiffSpectrum one = spectrum(f, F, 1);
  for (unsigned w : {2u, 3u, 8u, 0u}) EXPECT_EQ(spectrum(f, F, w), one);
  check_invariants(one);
}

TEST(Spectrum, EmbeddingInvariant) {
  // two different embeddings of GF(4) into GF(16) give the same spectrum
  const FieldPtr src = make_field(2), dst = make_field(4);
  const UniPoly f(src, {1, 2, 0, 3, 0, 1, 2});
  std::vector<std::uint32_t> roots;
  for (std::uint32_t r = 0; r < 16; ++r) {
    if (dst->eval_gf2(src->modulus(), r) == 0) roots.push_back(r);
  }
  ASSERT_EQ(roots.size(), 2u);
  const DiffSpectrum a = spectrum(f, Embedding(src, dst, roots[0]));
  const DiffSpectrum b = spectrum(f, Embedding(src, dst, roots[1]));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, spectrum(f, dst));
}

TEST(IsApn, Examples) {
  const FieldPtr gf2 = make_field(1);
  EXPECT_TRUE(is_apn(from_exps(gf2, {3}), make_field(5)));
  EXPECT_TRUE(is_apn(from_exps(gf2, {3}), make_field(2)));
  EXPECT_FALSE(is_apn(from_exps(gf2, {5}), make_field(4)));
}

TEST(IsApn, GoldTable) {
  const FieldPtr gf2 = make_field(1);
  for (int m = 2; m <= 10; ++m) {
    for (unsigned k = 1; k <= 3; ++k) {
      const bool expect = std::gcd(k, static_cast<unsigned>(m)) == 1;
      EXPECT_EQ(is_apn(UniPoly::monomial(gf2, (1u << k) + 1), make_field(m)), expect) << "m=" << m << " k=" << k;
    }
  }
}

TEST(IsApn, QAffineInvariance) {
  std::mt19937_64 rng(223);
  for (int i = 0; i < 200; ++i) {
    const FieldPtr F = make_field(i % 2 ? 3 : 4);
    const UniPoly f(F, oracle::random_coeffs(rng, F->size(), 12));
    const UniPoly g(F, oracle::random_q_affine(rng, F->size(), 8));
    ASSERT_EQ(spectrum(f, F), spectrum(f + g, F));
  }
}

TEST(IsApn, SquaringPreservesVerdict) {
  std::mt19937_64 rng(227);
  const FieldPtr gf2 = make_field(1);
  for (int i = 0; i < 40; ++i) {
    const UniPoly f(gf2, oracle::random_coeffs(rng, 2, 12));
    const UniPoly f2 = compose(f, UniPoly::monomial(gf2, 2));
    for (int m : {3, 4, 5}) ASSERT_EQ(is_apn(f, make_field(m)), is_apn(f2, make_field(m)));
  }
}

TEST(Extension, Examples) {
  const FieldPtr gf2 = make_field(1);
  const UniPoly fam = from_exps(gf2, {12, 6, 3});
  EXPECT_TRUE(is_apn_over_extension(fam, 4));
  EXPECT_FALSE(is_apn_over_extension(fam, 3));
  EXPECT_TRUE(is_apn_over_extension(from_exps(gf2, {3}), 7));
  EXPECT_THROW(is_apn_over_extension(fam, 15), Error);
  const auto r = apn_over_extension(fam, 3);
  EXPECT_EQ(r.n, 3u);
  EXPECT_GT(r.uniformity, 2u);
  // over GF(4), n counts degrees over F_4
  EXPECT_EQ(extension_field(*make_field(2), 3)->degree(), 6);
  EXPECT_THROW(extension_field(*make_field(2), 8), Error);
}

TEST(Exponent, Examples) {
  EXPECT_EQ(classify_exponent(3), (ExponentClass{ExponentKind::Gold, 1}));
  EXPECT_EQ(classify_exponent(13), (ExponentClass{ExponentKind::Kasami, 2}));
  EXPECT_EQ(classify_exponent(7).kind, ExponentKind::NotExceptional);
  EXPECT_EQ(classify_exponent(57), (ExponentClass{ExponentKind::Kasami, 3}));
  EXPECT_EQ(classify_exponent(1025), (ExponentClass{ExponentKind::Gold, 10}));
  EXPECT_THROW(classify_exponent(0), Error);
}

TEST(Exponent, AgreesWithClosedFormsUpTo5000) {
  std::map<std::uint64_t, ExponentClass> expect;
  for (unsigned k = 2; k < 7; ++k) expect[(1ull << (2 * k)) - (1ull << k) + 1] = {ExponentKind::Kasami, k};
  for (unsigned k = 1; k < 13; ++k) expect[(1ull << k) + 1] = {ExponentKind::Gold, k};
  for (std::uint64_t t = 1; t <= 5000; ++t) {
    const auto it = expect.find(t);
    ASSERT_EQ(classify_exponent(t), it == expect.end() ? ExponentClass{} : it->second) << t;
  }
}

TEST(SurfacePoints, Examples) {
  const FieldPtr gf2 = make_field(1);
  SurfaceCheck s = surface_point_check(from_exps(gf2, {3}), make_field(2));
  EXPECT_TRUE(s.consistent);
  EXPECT_TRUE(s.apn);
  EXPECT_FALSE(s.witness);

  s = surface_point_check(from_exps(gf2, {5}), make_field(4));
  EXPECT_TRUE(s.consistent);
  ASSERT_TRUE(s.witness);
  EXPECT_GE(s.witness_solutions, 4u);
  const auto [x, y, z] = *s.witness;
  EXPECT_TRUE(x != y && y != z && x != z);

  s = surface_point_check(from_exps(gf2, {12, 6, 3}), make_field(4));
  EXPECT_TRUE(s.consistent);
  EXPECT_EQ(s.off_v_zeros, 0u);
  EXPECT_THROW(surface_point_check(from_exps(gf2, {3}), make_field(9)), Error);
}

TEST(SurfacePoints, ZeroCountMatchesPointwiseOracle) {
  std::mt19937_64 rng(229);
  const FieldPtr gf2 = make_field(1);
  for (int i = 0; i < 10; ++i) {
    const auto c = oracle::random_coeffs(rng, 2, 12);
    const FieldPtr F = make_field(4);
    const oracle::Gf R{4, F->modulus()};
    std::uint64_t zeros = 0;
    for (std::uint32_t x = 0; x < 16; ++x)
      for (std::uint32_t y = 0; y < 16; ++y)
        for (std::uint32_t z = 0; z < 16; ++z) {
          if (x == y || y == z || x == z) continue;
          zeros += oracle::phi_value(R, c, x, y, z) == 0;
        }
    const SurfaceCheck s = surface_point_check(UniPoly(gf2, c), F, 1 + i % 4);
    ASSERT_EQ(s.off_v_zeros, zeros);
    ASSERT_EQ(s.apn, oracle::naive_uniformity(R, c) <= 2);
    ASSERT_TRUE(s.consistent);
  }
}

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "apnforge/field.hpp"
#include "oracle.hpp"

using namespace apnforge;

namespace {

oracle::Gf ref(const Field& F) { return {F.degree(), F.modulus()}; }

}  // namespace

TEST(Field, Gf8FromExplicitModulus) {
  const FieldPtr F = make_field(3, 0b1011);
  EXPECT_EQ(F->size(), 8u);
  EXPECT_EQ(F->spec(), "gf(2^3)/0xb");
}

TEST(Field, DefaultGf16HasSixteenElements) {
  const FieldPtr F = make_field(4);
  EXPECT_EQ(F->size(), 16u);
  EXPECT_EQ(F->modulus(), 0x13u);
}

TEST(Field, ReducibleModulusRejected) {
  try {
    make_field(4, 0b10101);
    FAIL() << "expected ReducibleModulus";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
  }
}

TEST(Field, DegreeOutOfRange) {
  EXPECT_THROW(make_field(0), Error);
  EXPECT_THROW(make_field(25), Error);
  try {
    make_field(3, 0b10011);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
  }
}

TEST(Field, DefaultModulusIsLowestIrreducible) {
  for (int m = 1; m <= 16; ++m) {
    const Gf2Poly mod = make_field(m)->modulus();
    ASSERT_EQ(gf2_degree(mod), m);
    if (m > 1) {
      EXPECT_TRUE(oracle::irreducible_by_roots_and_factors(m, mod)) << m;
    }
    for (Gf2Poly p = 1u << m; p < mod; ++p) {
      EXPECT_FALSE(m > 1 && oracle::irreducible_by_roots_and_factors(m, p)) << "lower irreducible for m=" << m;
    }
  }
}

TEST(Field, MultiplicationMatchesShiftAndAdd) {
  std::mt19937_64 rng(7);
  for (int m : {1, 2, 3, 5, 8, 11, 16, 17, 20, 24}) {
    const FieldPtr F = make_field(m);
    const auto R = ref(*F);
    std::uniform_int_distribution<std::uint32_t> d(0, F->mask());
    for (int i = 0; i < 2000; ++i) {
      const std::uint32_t a = d(rng), b = d(rng);
      ASSERT_EQ(F->mul(a, b), R.mul(a, b)) << "m=" << m;
    }
  }
}

TEST(Field, LogTablesAgreeWithSlowPath) {
  // largest table-backed field, sampled on a grid
  const FieldPtr F = make_field(16);
  ASSERT_TRUE(F->has_log_tables());
  const auto R = ref(*F);
  for (std::uint32_t a = 1; a < F->size(); a += 97) {
    for (std::uint32_t b = 0; b < F->size(); b += 31) ASSERT_EQ(F->mul(a, b), R.mul(a, b));
  }
  EXPECT_FALSE(make_field(17)->has_log_tables());
}

TEST(Field, MultiplicativeOrder) {
  for (int m = 1; m <= 8; ++m) {
    const FieldPtr F = make_field(m);
    for (std::uint32_t x = 1; x < F->size(); ++x) ASSERT_EQ(F->pow(x, F->size() - 1), 1u) << m << ' ' << x;
  }
  std::mt19937_64 rng(3);
  for (int m : {9, 10}) {
    const FieldPtr F = make_field(m);
    std::uniform_int_distribution<std::uint32_t> d(1, F->mask());
    for (int i = 0; i < 200; ++i) ASSERT_EQ(F->pow(d(rng), F->size() - 1), 1u);
  }
}

TEST(Field, InverseAndDivision) {
  const FieldPtr F = make_field(7);
  for (std::uint32_t x = 1; x < F->size(); ++x) EXPECT_EQ(F->mul(x, F->inv(x)), 1u);
  try {
    (void)F->inv(0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Felt, MixingFieldsIsAnError) {
  const FieldPtr a = make_field(3), b = make_field(4);
  try {
    (void)(Felt(*a, 1) + Felt(*b, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ContextMismatch);
  }
  EXPECT_THROW((void)(Felt(*a, 1) * Felt(*b, 1)), Error);
}

TEST(Felt, CharacteristicTwo) {
  const FieldPtr F = make_field(5);
  for (std::uint32_t x = 0; x < F->size(); ++x) EXPECT_TRUE((Felt(*F, x) + Felt(*F, x)).is_zero());
}

TEST(Felt, HexAndSpecParsing) {
  const FieldPtr F = parse_field_spec("gf(2^3)/0xb");
  EXPECT_EQ(F->modulus(), 0xbu);
  EXPECT_EQ(Felt(*F, 6).hex(), "0x6");
  EXPECT_EQ(parse_field_spec("gf(2^4)")->modulus(), 0x13u);
  EXPECT_THROW(parse_field_spec("gf(3^2)"), SyntaxError);
  EXPECT_THROW(parse_field_spec("gf(2^4)/0x15"), Error);
}

TEST(Frobenius, Examples) {
  const FieldPtr F = make_field(3, 0b1011);
  const Felt alpha(*F, 2);
  EXPECT_TRUE(frobenius(Felt(*F, 0), 5).is_zero());
  EXPECT_EQ(frobenius(alpha, 1), alpha * alpha);
  EXPECT_EQ(frobenius(alpha, 3), alpha);
}

TEST(Frobenius, AdditiveAndMultiplicative) {
  std::mt19937_64 rng(11);
  for (int m : {3, 6, 10, 13}) {
    const FieldPtr F = make_field(m);
    std::uniform_int_distribution<std::uint32_t> d(0, F->mask());
    for (int i = 0; i < 1000; ++i) {
      const Felt x(*F, d(rng)), y(*F, d(rng));
      ASSERT_EQ(frobenius(x + y, 1), frobenius(x, 1) + frobenius(y, 1));
      ASSERT_EQ(frobenius(x * y, 1), frobenius(x, 1) * frobenius(y, 1));
      ASSERT_EQ(frobenius(x, static_cast<unsigned>(m)), x);
    }
  }
}

TEST(RelTrace, Examples) {
  const FieldPtr F = make_field(3, 0b1011);
  EXPECT_TRUE(rel_trace(Felt(*F, 0), 1).is_zero());
  EXPECT_TRUE(rel_trace(Felt(*F, 2), 1).is_zero());
  EXPECT_EQ(rel_trace(Felt(*F, 3), 1).bits(), 1u);
  try {
    (void)rel_trace(Felt(*make_field(4), 1), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeNotMultipleOfThree);
  }
}

TEST(RelTrace, LinearSurjectiveWithKernelQSquared) {
  for (int qd : {1, 2}) {
    const Tower T = make_tower(make_field(qd));
    const auto R = ref(*T.ext);
    const std::uint32_t q = T.base->size();
    std::map<std::uint32_t, unsigned> fibres;
    for (std::uint32_t x = 0; x < T.ext->size(); ++x) {
      // independent trace: x + x^q + x^(q^2) with oracle arithmetic
      const std::uint32_t tr = x ^ R.pow(x, q) ^ R.pow(x, std::uint64_t{q} * q);
      const Felt lib = rel_trace(T.ext_elem(x), qd);
      ASSERT_EQ(lib.bits(), tr);
      ASSERT_TRUE(T.embedding.in_image(tr));
      ++fibres[tr];
    }
    EXPECT_EQ(fibres.size(), q);  // surjective onto embedded F_q
    for (const auto& [v, n] : fibres) EXPECT_EQ(n, q * q);
    // F_q-linearity
    for (std::uint32_t a = 0; a < q; ++a) {
      const Felt s = T.embed(T.base_elem(a));
      for (std::uint32_t x = 0; x < T.ext->size(); x += 3) {
        const Felt X = T.ext_elem(x), Y = T.ext_elem(x ^ 5);
        ASSERT_EQ(rel_trace(s * X + Y, qd), s * rel_trace(X, qd) + rel_trace(Y, qd));
      }
    }
  }
}

TEST(TraceZero, Examples) {
  const Tower t2 = make_tower(make_field(1));
  std::set<std::uint32_t> bits;
  for (const auto& c : trace_zero_elements(t2)) bits.insert(c.bits());
  // {0, α, α², α⁴} with α⁴ = α² + α
  EXPECT_EQ(bits, (std::set<std::uint32_t>{0, 2, 4, 6}));
  const Tower t4 = make_tower(make_field(2));
  const auto z4 = trace_zero_elements(t4);
  EXPECT_EQ(z4.size(), 16u);
  EXPECT_TRUE(z4.front().is_zero());
}

TEST(Embedding, Gf2IntoAnything) {
  const Embedding e = find_embedding(make_field(1), make_field(5));
  EXPECT_EQ(e.apply(0), 0u);
  EXPECT_EQ(e.apply(1), 1u);
}

TEST(Embedding, Gf4IntoGf16) {
  const FieldPtr src = make_field(2), dst = make_field(4);
  const Embedding e = find_embedding(src, dst);
  EXPECT_EQ(dst->eval_gf2(src->modulus(), e.generator_image()), 0u);
  std::set<std::uint32_t> image;
  for (std::uint32_t a = 0; a < 4; ++a) image.insert(e.apply(a));
  EXPECT_EQ(image.size(), 4u);
  EXPECT_EQ(oracle::embedding_table(ref(*src), ref(*dst)), std::vector<std::uint32_t>(
                                                              {e.apply(0), e.apply(1), e.apply(2), e.apply(3)}));
}

TEST(Embedding, DegreeMismatch) {
  try {
    find_embedding(make_field(2), make_field(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeMismatch);
  }
}

TEST(Embedding, NotARootIsRejected) {
  EXPECT_THROW(Embedding(make_field(2), make_field(4), 1), Error);
}

TEST(Embedding, HomomorphismExhaustive) {
  for (auto [m, n] : {std::pair{2, 4}, std::pair{3, 6}, std::pair{2, 6}, std::pair{4, 12}}) {
    const FieldPtr src = make_field(m), dst = make_field(n);
    const Embedding e = find_embedding(src, dst);
    const auto table = oracle::embedding_table(ref(*src), ref(*dst));
    for (std::uint32_t x = 0; x < src->size(); ++x) {
      ASSERT_EQ(e.apply(x), table[x]);
      ASSERT_EQ(e.preimage(e.apply(x)), x);
      for (std::uint32_t y = 0; y < src->size(); ++y) {
        ASSERT_EQ(e.apply(x ^ y), e.apply(x) ^ e.apply(y));
        ASSERT_EQ(e.apply(src->mul(x, y)), dst->mul(e.apply(x), e.apply(y)));
      }
    }
    unsigned outside = 0;
    for (std::uint32_t y = 0; y < dst->size(); ++y) outside += !e.in_image(y);
    EXPECT_EQ(outside, dst->size() - src->size());
  }
}

TEST(Tower, RhoOrbitAndDescend) {
  const Tower T = make_tower(make_field(2));
  EXPECT_EQ(T.ext->degree(), 6);
  for (std::uint32_t x = 0; x < T.ext->size(); ++x) {
    const Felt X = T.ext_elem(x);
    ASSERT_EQ(T.rho(X, 3), X);
    const auto orbit = T.galois_orbit(X);
    ASSERT_TRUE(orbit.size() == 1 || orbit.size() == 3);
    ASSERT_TRUE(std::is_sorted(orbit.begin(), orbit.end()));
    ASSERT_EQ(T.canonical_conjugate(T.rho(X)), T.canonical_conjugate(X));
  }
  for (std::uint32_t a = 0; a < 4; ++a) EXPECT_EQ(T.descend(T.embed(T.base_elem(a))).bits(), a);
  EXPECT_THROW(make_tower(make_field(9)), Error);
}

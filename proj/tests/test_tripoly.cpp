#include <gtest/gtest.h>

#include <random>

#include "apnforge/tripoly.hpp"
#include "oracle.hpp"

using namespace apnforge;

namespace {

TriPoly random_sparse(std::mt19937_64& rng, const FieldPtr& F, unsigned terms, unsigned max_deg) {
  std::uniform_int_distribution<unsigned> e(0, max_deg);
  std::uniform_int_distribution<std::uint32_t> c(1, F->mask());
  std::vector<Term> t;
  for (unsigned i = 0; i < terms; ++i) t.push_back({{e(rng), e(rng), e(rng)}, c(rng)});
  return TriPoly(F, std::move(t));
}

// every monomial of degree ≤ 3 in x, y, z, expanded by brute force
TriPoly naive_cube_of_sum(const FieldPtr& F) {
  std::vector<Term> t;
  const Monomial vars[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& a : vars)
    for (const auto& b : vars)
      for (const auto& c : vars) t.push_back({a * b * c, 1});
  return TriPoly(F, std::move(t));
}

}  // namespace

TEST(TriPoly, CanonicalFormDropsZerosAndMerges) {
  const FieldPtr F = make_field(2);
  const TriPoly p(F, {{{1, 0, 0}, 1}, {{0, 1, 0}, 3}, {{1, 0, 0}, 1}, {{0, 0, 2}, 0}});
  ASSERT_EQ(p.size(), 1u);
  EXPECT_EQ(p.terms()[0].mono, (Monomial{0, 1, 0}));
  EXPECT_THROW(TriPoly::monomial(F, {65, 0, 0}), Error);
}

TEST(TriPoly, GradedLexOrder) {
  const FieldPtr F = make_field(1);
  const TriPoly p(F, {{{0, 0, 3}, 1}, {{1, 1, 0}, 1}, {{2, 0, 0}, 1}, {{0, 2, 1}, 1}, {{1, 0, 2}, 1}});
  std::vector<Monomial> order;
  for (const auto& t : p.terms()) order.push_back(t.mono);
  EXPECT_EQ(order, (std::vector<Monomial>{{1, 0, 2}, {0, 2, 1}, {0, 0, 3}, {2, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(to_string(p), "x*z^2 + y^2*z + z^3 + x^2 + x*y");
}

TEST(BigA, Properties) {
  const FieldPtr F = make_field(1);
  const TriPoly A = big_a(F);
  EXPECT_EQ(A.size(), 6u);
  EXPECT_TRUE(A.is_homogeneous());
  EXPECT_EQ(A.total_degree(), 3);
  EXPECT_TRUE(is_symmetric(A));
  const Felt one(*F, 1), zero(*F, 0);
  EXPECT_TRUE(A.eval(one, zero, zero).is_zero());
  const TriPoly x = TriPoly::var_x(F), y = TriPoly::var_y(F), z = TriPoly::var_z(F);
  EXPECT_EQ(A, (x + y) * (y + z) * (z + x));
  const FieldPtr G = make_field(4);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t c = 0; c < 16; ++c) ASSERT_TRUE(big_a(G).eval(Felt(*G, a), Felt(*G, a), Felt(*G, c)).is_zero());
}

TEST(Mu, Properties) {
  const FieldPtr F = make_field(1);
  const Felt one(*F, 1);
  EXPECT_TRUE(mu(F).eval(one, one, one).is_zero());
  EXPECT_TRUE(is_symmetric(mu(F)));
  const FieldPtr G = make_field(3);
  for (std::uint32_t t = 0; t < 8; ++t) EXPECT_TRUE(mu(G).eval(Felt(*G, t), Felt(*G, t), Felt(*G, t)).is_zero());
}

TEST(Symmetry, Examples) {
  const FieldPtr F = make_field(1);
  EXPECT_FALSE(is_symmetric(TriPoly::monomial(F, {2, 1, 0})));
  EXPECT_TRUE(is_symmetric(TriPoly::constant(F, 1)));
  EXPECT_TRUE(is_symmetric(big_a(F) * mu(F) + TriPoly::constant(F, 1)));
  // invariant under the 3-cycle but not a transposition
  const TriPoly cyc = TriPoly::monomial(F, {2, 1, 0}) + TriPoly::monomial(F, {0, 2, 1}) + TriPoly::monomial(F, {1, 0, 2});
  EXPECT_FALSE(is_symmetric(cyc));
}

TEST(ExactDivide, Examples) {
  const FieldPtr F = make_field(1);
  const TriPoly A = big_a(F);
  auto r = exact_divide(A * mu(F), A);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.quotient, mu(F));
  EXPECT_FALSE(exact_divide(A + TriPoly::constant(F, 1), A).exact);
  const TriPoly num = TriPoly::monomial(F, {3, 0, 0}) + TriPoly::monomial(F, {0, 3, 0}) +
                      TriPoly::monomial(F, {0, 0, 3}) + naive_cube_of_sum(F);
  r = exact_divide(num, A);
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.quotient, TriPoly::constant(F, 1));
  try {
    (void)exact_divide(A, TriPoly::zero(F));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(ExactDivide, ProductRoundtrip) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const FieldPtr F = make_field(i % 2 ? 2 : 1);
    const TriPoly q = random_sparse(rng, F, 1 + i % 6, 6);
    TriPoly d = random_sparse(rng, F, 1 + i % 4, 4);
    if (d.is_zero()) d = TriPoly::constant(F, 1);
    const auto r = exact_divide(q * d, d);
    ASSERT_TRUE(r.exact) << to_string(q) << " / " << to_string(d);
    ASSERT_EQ(r.quotient, q);
  }
}

TEST(Divide, RemainderIsReduced) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 300; ++i) {
    const FieldPtr F = make_field(i % 2 ? 2 : 1);
    const TriPoly n = random_sparse(rng, F, 8, 6);
    TriPoly d = random_sparse(rng, F, 3, 3);
    if (d.is_zero()) d = big_a(F);
    const Division r = divide(n, d);
    ASSERT_EQ(r.quotient * d + r.remainder, n);
    const Monomial lead = d.leading_term().mono;
    for (const auto& t : r.remainder.terms()) ASSERT_FALSE(lead.divides(t.mono));
  }
}

TEST(Multiply, MatchesPointwiseOracle) {
  std::mt19937_64 rng(41);
  const FieldPtr F = make_field(3);
  const oracle::Gf R{3, F->modulus()};
  for (int i = 0; i < 50; ++i) {
    const TriPoly a = random_sparse(rng, F, 5, 3), b = random_sparse(rng, F, 5, 3);
    const TriPoly p = a * b;
    for (std::uint32_t x = 0; x < 8; ++x)
      for (std::uint32_t y = 0; y < 8; ++y)
        for (std::uint32_t z = 0; z < 8; ++z) {
          ASSERT_EQ(oracle::eval_tri(R, p, x, y, z), R.mul(oracle::eval_tri(R, a, x, y, z), oracle::eval_tri(R, b, x, y, z)));
        }
  }
}

TEST(HomogDecompose, Examples) {
  const FieldPtr F = make_field(1);
  EXPECT_EQ(homog_decompose(big_a(F)).degrees(), std::vector<int>{3});
  EXPECT_EQ(homog_decompose(big_a(F) + mu(F) + TriPoly::constant(F, 1)).degrees(), (std::vector<int>{3, 2, 0}));
  EXPECT_TRUE(homog_decompose(TriPoly::zero(F)).parts.empty());
}

TEST(HomogDecompose, PartsResumAndAreHomogeneous) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 500; ++i) {
    const FieldPtr F = make_field(1 + i % 3);
    const TriPoly p = random_sparse(rng, F, 10, 5);
    const HomogDecomp d = homog_decompose(p);
    for (const auto& part : d.parts) {
      ASSERT_TRUE(part.part.is_homogeneous());
      ASSERT_EQ(part.part.total_degree(), part.degree);
    }
    ASSERT_EQ(sum(d, F), p);
  }
}

TEST(SubstituteLinear, Examples) {
  const FieldPtr F = make_field(1);
  const TriPoly sq = TriPoly::monomial(F, {2, 0, 0}) + TriPoly::monomial(F, {0, 2, 0}) + TriPoly::monomial(F, {0, 0, 2});
  EXPECT_EQ(substitute_linear(UniPoly::monomial(F, 2), LinearForm::XYZ), sq);
  const TriPoly expect = TriPoly::monomial(F, {3, 0, 0}) + TriPoly::monomial(F, {0, 3, 0}) +
                         TriPoly::monomial(F, {0, 0, 3}) + big_a(F);
  EXPECT_EQ(substitute_linear(UniPoly::monomial(F, 3), LinearForm::XYZ), expect);
  EXPECT_EQ(substitute_linear(UniPoly::constant(F, 1), LinearForm::Y), TriPoly::constant(F, 1));
  EXPECT_EQ(substitute_linear(UniPoly::monomial(F, 5), LinearForm::Z), TriPoly::monomial(F, {0, 0, 5}));
}

TEST(SubstituteLinear, MatchesRepeatedMultiplication) {
  const FieldPtr F = make_field(2);
  const TriPoly s = TriPoly::var_x(F) + TriPoly::var_y(F) + TriPoly::var_z(F);
  TriPoly power = TriPoly::constant(F, 1);
  for (unsigned e = 0; e <= 20; ++e, power = power * s) {
    ASSERT_EQ(substitute_linear(UniPoly::monomial(F, e, 3), LinearForm::XYZ), power.scaled(Felt(*F, 3))) << e;
  }
}

#include <gtest/gtest.h>

#include <random>

#include "garside/order.hpp"
#include "garside/structure.hpp"
#include "helpers.hpp"

using namespace garside;
using namespace garside::testing;

TEST(Structure, ThetaAlternatingForm) {
  const BraidContext ctx = make_braid_context(2);
  const AlternatingForm af = alternating_form(ctx.theta, ctx.structure);
  ASSERT_EQ(af.factors.size(), 4u);
  EXPECT_EQ(to_string(af.factors[0]), "s1");
  EXPECT_EQ(to_string(af.factors[1]), "s2^2");
  EXPECT_EQ(to_string(af.factors[2]), "s1");
  EXPECT_TRUE(af.factors[3].is_identity());
  EXPECT_EQ(af.breadth, 4);
  EXPECT_EQ(af.depth, 2);
}

TEST(Structure, ConditionADepths) {
  const std::map<int, std::vector<int>> expected = {
      {4, {2, 3, 4, 5, 6}}, {5, {4, 7, 10, 13, 16}}, {6, {3, 5, 7, 9, 11}}, {7, {6, 11, 16, 21, 26}}};
  for (const auto& [m, depths] : expected) {
    const DihedralContext ctx = make_dihedral_context(m);
    for (int p = 1; p <= 5; ++p) {
      EXPECT_EQ(depth(delta_element(ctx.model, p), ctx.structure), depths[p - 1]) << m;
      EXPECT_EQ(depths[p - 1], ctx.zeta * p + 1);
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const BraidContext ctx = make_braid_context(n);
    for (int p = 1; p <= 3; ++p) EXPECT_EQ(depth(delta_element(ctx.model, p), ctx.structure), p + 1);
  }
}

TEST(Structure, ThetaDecomposition) {
  const BraidContext ctx = make_braid_context(2);
  const NormalForm a = multiply(multiply(ctx.theta, ctx.theta), pos(ctx.model, "s2^3"));
  const auto d = theta_decompose(a, ctx.structure);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->k, 2);
  EXPECT_EQ(to_string(d->a0), "s2^3");
  EXPECT_FALSE(theta_decompose(pos(ctx.model, "s2"), ctx.structure).has_value());
  EXPECT_TRUE(in_theta_bar(pos(ctx.model, "s2"), ctx.structure));
  EXPECT_FALSE(in_theta_bar(pos(ctx.model, "s1"), ctx.structure));
}

TEST(Structure, Validation) {
  const auto m = std::make_shared<BraidModel>(2);
  EXPECT_THROW(make_structure(m, 0b11, 0b10, 1), StructureError);
  EXPECT_THROW(make_structure(m, 0b01, 0b10, 0), StructureError);
  EXPECT_NO_THROW(make_structure(m, 0b01, 0b10, 1));
}

TEST(Sign, Examples) {
  const BraidContext ctx = make_braid_context(2);
  EXPECT_EQ(sign(el(ctx.model, "s1^-1"), ctx.structure), Sign::Negative);
  EXPECT_EQ(sign(el(ctx.model, "s1"), ctx.structure), Sign::Positive);
  EXPECT_EQ(sign(el(ctx.model, "s2^-4"), ctx.structure), Sign::InG1);
  EXPECT_EQ(sign(el(ctx.model, "s2 s1^-1 s2"), ctx.structure), Sign::Negative);
  const DihedralContext d = make_dihedral_context(5);
  EXPECT_EQ(sign(el(d.model, "s"), d.structure), Sign::Positive);
  EXPECT_EQ(sign(el(d.model, "t^-2"), d.structure), Sign::InG1);
  EXPECT_EQ(sign(el(d.model, "W^-1"), d.structure), Sign::Negative);
}

// Trichotomy and closure of the negative cone on random words.
TEST(Sign, ConeProperties) {
  std::mt19937_64 rng(41);
  const BraidContext ctx = make_braid_context(3);
  const auto& s = ctx.structure;
  for (int i = 0; i < 300; ++i) {
    const auto x = from_letters(ctx.model, random_signed_word(3, 8, rng));
    const auto y = from_letters(ctx.model, random_signed_word(3, 8, rng));
    const Sign sx = sign(x, s);
    const Sign sy = sign(y, s);
    const Sign inv = sign(inverse(x), s);
    if (sx == Sign::Negative) EXPECT_EQ(inv, Sign::Positive);
    if (sx == Sign::InG1) EXPECT_EQ(inv, Sign::InG1);
    if (sx == Sign::Negative && sy == Sign::Negative) EXPECT_EQ(sign(multiply(x, y), s), Sign::Negative);
    // Absorption: G1 ⋅ P^- ⋅ G1 ⊂ P^-.
    if (sx == Sign::Negative) {
      const auto g = el(ctx.model, "s2 s3^-1 s2");
      EXPECT_EQ(sign(multiply(multiply(g, x), inverse(g)), s), Sign::Negative);
    }
  }
}

TEST(Sign, MatchesHandleReduction) {
  std::mt19937_64 rng(43);
  for (int n = 2; n <= 4; ++n) {
    const BraidContext ctx = make_braid_context(n);
    for (int i = 0; i < 300; ++i) {
      const SignedWord w = random_signed_word(n, 10, rng);
      EXPECT_EQ(sign(from_letters(ctx.model, w), ctx.structure), handle_reduction_sign(w));
    }
  }
}

TEST(Order, CompareExamples) {
  const OrderChain chain = braid_order_chain(2, {1, 1});
  const auto m = chain.levels.front().model;
  EXPECT_EQ(compare(el(m, "1"), el(m, "s1"), chain), Comparison::Less);
  EXPECT_EQ(compare(el(m, "s1"), el(m, "1"), chain), Comparison::Greater);
  EXPECT_EQ(compare(el(m, "s1 s2 s1"), el(m, "s2 s1 s2"), chain), Comparison::Equal);
  EXPECT_EQ(compare(el(m, "1"), el(m, "s2"), chain), Comparison::Less);
  EXPECT_EQ(compare(el(m, "s2"), el(m, "s1^-1"), chain), Comparison::Greater);
  const OrderChain flipped = braid_order_chain(2, {-1, 1});
  EXPECT_EQ(compare(el(m, "1"), el(m, "s1"), flipped), Comparison::Greater);
  EXPECT_EQ(compare(el(m, "1"), el(m, "s2"), flipped), Comparison::Less);
  const OrderChain bottom = braid_order_chain(2, {1, -1});
  EXPECT_EQ(compare(el(m, "1"), el(m, "s2"), bottom), Comparison::Greater);
}

TEST(Order, ChainValidation) {
  EXPECT_THROW(braid_order_chain(2, {1}), std::invalid_argument);
  EXPECT_THROW(dihedral_order_chain(5, {1, 0}), std::invalid_argument);
  EXPECT_EQ(parse_epsilon("+-+"), (std::vector<int>{1, -1, 1}));
  EXPECT_THROW(parse_epsilon("+x"), std::invalid_argument);
}

// Left invariance and total order on random triples, every sign pattern.
TEST(Order, TotalLeftInvariant) {
  std::mt19937_64 rng(47);
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      const OrderChain chain = dihedral_order_chain(5, {a, b});
      const auto m = chain.levels.front().model;
      for (int i = 0; i < 200; ++i) {
        const auto x = from_letters(m, random_signed_word(2, 6, rng));
        const auto y = from_letters(m, random_signed_word(2, 6, rng));
        const auto z = from_letters(m, random_signed_word(2, 6, rng));
        const Comparison c = compare(x, y, chain);
        EXPECT_EQ(c == Comparison::Equal, x == y);
        EXPECT_EQ(compare(multiply(z, x), multiply(z, y), chain), c);
        if (c == Comparison::Less && compare(y, z, chain) == Comparison::Less)
          EXPECT_EQ(compare(x, z, chain), Comparison::Less);
      }
    }
}

TEST(Verifier, ReportsPass) {
  const DihedralContext d = make_dihedral_context(5);
  const CheckReport a = check_condition_A(d.structure, 3);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(a.instances, 3u);
  EXPECT_TRUE(check_condition_B(d.structure, 5).pass());
  EXPECT_TRUE(check_trichotomy(d.structure, 3).pass());
  EXPECT_TRUE(check_tail_oracle(d.structure, 5).pass());
}

TEST(Verifier, DetectsWrongZeta) {
  const DihedralContext d = make_dihedral_context(5);
  DehornoyStructureSpec bad = d.structure;
  bad.zeta = 2;
  EXPECT_FALSE(check_condition_A(bad, 3).pass());
}

TEST(Verifier, Enumeration) {
  const auto m = std::make_shared<BraidModel>(2);
  // Positive B3 elements by length: 1, 2, 4, 7 (s1s2s1 = s2s1s2 merges one).
  EXPECT_EQ(enumerate_positive(m, 0).size(), 1u);
  EXPECT_EQ(enumerate_positive(m, 1).size(), 3u);
  EXPECT_EQ(enumerate_positive(m, 2).size(), 7u);
  EXPECT_EQ(enumerate_positive(m, 3).size(), 14u);
  for (const auto& a : enumerate_unmovable(m, 6)) EXPECT_TRUE(is_unmovable(a));
  const auto u = enumerate_unmovable(m, 6);
  const auto all = enumerate_positive(m, 6);
  std::size_t movable = 0;
  for (const auto& a : all) movable += is_unmovable(a) ? 0 : 1;
  EXPECT_EQ(u.size() + movable, all.size());
}

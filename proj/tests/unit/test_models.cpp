#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "helpers.hpp"

using namespace garside;
using namespace garside::testing;

namespace {

// Permutation of a braid word, computed letter by letter.
std::vector<int> word_permutation(int n, const std::vector<int>& word) {
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int a : word) {
    std::vector<int> t(n + 1);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[a], t[a + 1]);
    std::vector<int> q(n + 1);
    for (int j = 0; j <= n; ++j) q[j] = p[t[j]];
    p = q;
  }
  return p;
}

int inversions(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
  return c;
}

}  // namespace

TEST(BraidModel, SimplesArePermutations) {
  for (int n = 1; n <= 4; ++n) {
    const BraidModel m(n);
    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    int count = 0;
    do {
      const Simple x = m.from_permutation(perm);
      EXPECT_EQ(m.permutation(x), perm);
      EXPECT_EQ(m.length(x), inversions(perm));
      EXPECT_EQ(word_permutation(n, m.word(x)), perm);
      EXPECT_EQ(m.reverse(m.reverse(x)), x);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(m.length(m.omega()), n * (n + 1) / 2);
    EXPECT_GT(count, 0);
  }
}

TEST(BraidModel, ProductOfSimples) {
  const BraidModel m(3);
  for (int i = 0; i < 3; ++i) {
    const Simple a = m.atom(i);
    EXPECT_EQ(m.word(a), std::vector<int>{i});
    EXPECT_EQ(m.left_quotient(m.omega(), m.left_complement(a)), a);
    EXPECT_EQ(m.product(m.left_complement(a), a), m.omega());
  }
  EXPECT_THROW(BraidModel(16), std::invalid_argument);
  EXPECT_TRUE(m.is_parabolic_subset(0b011));
  EXPECT_FALSE(m.is_parabolic_subset(0b101));
}

TEST(BraidContext, Elements) {
  const BraidContext ctx = make_braid_context(2);
  EXPECT_EQ(to_string(ctx.omega), "s1 s2 s1");
  EXPECT_EQ(ctx.delta, multiply(ctx.omega, ctx.omega));
  EXPECT_EQ(to_string(ctx.delta1), "s2^2");
  EXPECT_EQ(to_string(ctx.lambda), "s1^2");
  EXPECT_EQ(ctx.theta, pos(ctx.model, "s1 s2^2 s1"));
  EXPECT_EQ(multiply(ctx.theta, ctx.delta1), ctx.delta);
}

TEST(BraidContext, FlipAndRev) {
  const BraidContext ctx = make_braid_context(3);
  EXPECT_EQ(flip(el(ctx.model, "s1")), el(ctx.model, "s3"));
  EXPECT_EQ(flip(el(ctx.model, "s2^-1 s1")), el(ctx.model, "s2^-1 s3"));
  EXPECT_EQ(rev(pos(ctx.model, "s1 s2")), pos(ctx.model, "s2 s1"));
  // Φ is conjugation by Ω.
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto x = from_letters(ctx.model, random_signed_word(3, 8, rng));
    const auto w = omega_group_element(ctx.model, 1);
    EXPECT_EQ(flip(x), multiply(multiply(w, x), inverse(w)));
  }
}

TEST(HandleReduction, Examples) {
  using L = Letter;
  EXPECT_EQ(handle_reduction_sign({}), Sign::InG1);
  EXPECT_EQ(handle_reduction_sign({L{1, 1}, L{2, -1}}), Sign::InG1);
  EXPECT_EQ(handle_reduction_sign({L{0, -1}}), Sign::Negative);
  EXPECT_EQ(handle_reduction_sign({L{0, -1}, L{1, 1}, L{0, 1}}), Sign::Positive);
  EXPECT_EQ(handle_reduction_sign({L{0, 1}, L{1, 1}, L{0, -1}}), Sign::Positive);
  EXPECT_EQ(handle_reduction_sign({L{0, 1}, L{0, -1}}), Sign::InG1);
  const SignedWord r = handle_reduce({L{0, -1}, L{1, 1}, L{0, 1}});
  EXPECT_EQ(r, (SignedWord{L{1, 1}, L{0, 1}, L{1, -1}}));
  EXPECT_THROW(handle_reduction_sign({L{0, 2}}), std::invalid_argument);
}

// The reduced word represents the same braid and carries a single s1 sign.
TEST(HandleReduction, PreservesElement) {
  std::mt19937_64 rng(17);
  const auto m = std::make_shared<BraidModel>(3);
  for (int i = 0; i < 300; ++i) {
    const SignedWord w = random_signed_word(3, 12, rng);
    const SignedWord r = handle_reduce(w);
    EXPECT_EQ(from_letters(m, r), from_letters(m, w));
    bool p = false, q = false;
    for (const Letter& l : r)
      if (l.atom == 0) (l.exponent > 0 ? p : q) = true;
    EXPECT_FALSE(p && q);
  }
}

TEST(BreadthSign, SmallExamples) {
  const BraidContext ctx = make_braid_context(2);
  // Ω^{-1}·θ-like elements: bh(s1 s2^2 s1) = 4, so k ≥ 3 is negative.
  const NormalForm a = pos(ctx.model, "s1 s2^2 s1");
  EXPECT_EQ(breadth_sign(a, 3, ctx), Sign::Negative);
  EXPECT_EQ(breadth_sign(pos(ctx.model, "s2"), 1, ctx), Sign::Negative);
  // Ω⁻¹·s1 s2^2 s1 = s2 s1 s2⁻¹ and Ω⁻¹·Ω s2 = s2.
  EXPECT_EQ(breadth_sign(a, 1, ctx), Sign::Positive);
  EXPECT_EQ(breadth_sign(pos(ctx.model, "s1 s2 s1 s2"), 1, ctx), Sign::InG1);
  EXPECT_THROW(breadth_sign(a, 0, ctx), std::invalid_argument);
}

TEST(DihedralModel, Simples) {
  const DihedralModel d(5);
  EXPECT_EQ(d.length(d.omega()), 5);
  EXPECT_EQ(format_word(d, d.word(d.make(kT, 3))), "t s t");
  EXPECT_EQ(d.make(kS, 5), d.make(kT, 5));
  EXPECT_EQ(d.first_letter(d.make(kT, 2)), kT);
  EXPECT_EQ(d.last_letter(d.make(kT, 2)), kS);
  EXPECT_THROW(make_dihedral_context(3), std::invalid_argument);
}

TEST(DihedralContext, Parameters) {
  const DihedralContext c4 = make_dihedral_context(4);
  EXPECT_EQ(c4.zeta, 1);
  EXPECT_EQ(c4.e, 1);
  EXPECT_EQ(to_string(c4.theta), "s t s");
  const DihedralContext c5 = make_dihedral_context(5);
  EXPECT_EQ(c5.zeta, 3);
  EXPECT_EQ(c5.e, 2);
  EXPECT_EQ(multiply(c5.theta, c5.delta1), c5.delta);
}

// Direct block-word arithmetic agrees with the generic Garside normal form,
// and two letter words normalize alike iff they are equal in the monoid.
TEST(Dihedral, DirectMatchesGeneric) {
  for (int m = 4; m <= 7; ++m) {
    const DihedralContext ctx = make_dihedral_context(m);
    const auto rels = defining_relations(*ctx.model);
    std::map<Word, DihedralElement> by_class;
    for (int len = 0; len <= 10; ++len) {
      for (int bits = 0; bits < (1 << len); ++bits) {
        Word w(len);
        for (int i = 0; i < len; ++i) w[i] = (bits >> i) & 1;
        const DihedralElement x = normalize_dihedral(ctx, w);
        const GroupElement g = to_group(greedy_normalize(ctx.model, w));
        EXPECT_EQ(to_group(ctx, x), g);
        EXPECT_EQ(from_group(ctx, g), x);
        if (len <= 7) {
          const Word key = *rewriting_closure(w, rels).begin();
          auto [it, fresh] = by_class.emplace(key, x);
          if (!fresh) EXPECT_EQ(it->second, x);
        }
      }
    }
    std::set<std::string> distinct;
    for (const auto& [k, x] : by_class) EXPECT_TRUE(distinct.insert(to_string(x)).second);
  }
}

TEST(Dihedral, GroupOperations) {
  std::mt19937_64 rng(23);
  for (int m : {4, 5}) {
    const DihedralContext ctx = make_dihedral_context(m);
    for (int i = 0; i < 200; ++i) {
      const SignedWord u = random_signed_word(2, 8, rng);
      const SignedWord v = random_signed_word(2, 8, rng);
      const auto x = dihedral_from_letters(ctx, u);
      const auto y = dihedral_from_letters(ctx, v);
      EXPECT_EQ(to_group(ctx, x), from_letters(ctx.model, u));
      EXPECT_EQ(to_group(ctx, multiply_dihedral(ctx, x, y)),
                multiply(to_group(ctx, x), to_group(ctx, y)));
      EXPECT_EQ(to_group(ctx, inverse_dihedral(ctx, x)), inverse(to_group(ctx, x)));
      const DeltaForm df = dihedral_delta_form(ctx, x);
      EXPECT_EQ(df, delta_form(to_group(ctx, x)));
    }
    EXPECT_EQ(to_group(ctx, omega_dihedral(ctx, 2)), omega_group_element(ctx.model, 2));
  }
}

TEST(Dihedral, BlockWords) {
  const BlockWord b = BlockWord::from_letters({kT, kS, kS, kT});
  EXPECT_EQ(b.blocks, (std::vector<int>{1, 2, 1}));
  EXPECT_EQ(b.depth(), 1);
  EXPECT_EQ(b.letters(), (std::vector<int>{kT, kS, kS, kT}));
  EXPECT_EQ(phi(b).letters(), (std::vector<int>{kS, kT, kT, kS}));
  EXPECT_EQ(first_last_letters(b), std::make_pair(kT, kT));
  EXPECT_TRUE(BlockWord{}.is_identity());
}

TEST(Dihedral, DepthMatchesAlternatingForm) {
  for (int m : {4, 5, 6}) {
    const DihedralContext ctx = make_dihedral_context(m);
    for (const auto& a : enumerate_omega_unmovable(ctx.model, 8)) {
      const DihedralElement x = from_group(ctx, to_group(a));
      EXPECT_EQ(depth_dihedral(x), depth(a, ctx.structure));
    }
  }
  EXPECT_THROW(depth_dihedral(omega_dihedral(make_dihedral_context(4), 1)), std::invalid_argument);
}

TEST(CrispEmbedding, Relations) {
  for (int m = 4; m <= 7; ++m) {
    const DihedralContext ctx = make_dihedral_context(m);
    const BraidContext target = crisp_target_context(m);
    // ι respects the dihedral relation (st)^{m/2} = (ts)^{m/2} letter by letter.
    SignedWord left, right;
    for (int i = 0; i < m; ++i) {
      left.push_back({i % 2 == 0 ? kS : kT, 1});
      right.push_back({i % 2 == 0 ? kT : kS, 1});
    }
    EXPECT_EQ(from_letters(target.model, crisp_embed_word(m, left)),
              from_letters(target.model, crisp_embed_word(m, right)));
    EXPECT_EQ(crisp_embed(ctx, dihedral_from_letters(ctx, left), target),
              from_letters(target.model, crisp_embed_word(m, left)));
    if (m % 2 == 0) {
      EXPECT_EQ(crisp_embed(ctx, omega_dihedral(ctx, 1), target), omega_group_element(target.model, 1));
    }
  }
  const auto w = crisp_embed_word(4, {{kS, 1}, {kT, -1}});
  EXPECT_EQ(w, (SignedWord{{0, 1}, {2, 1}, {1, -1}}));
  EXPECT_THROW(crisp_target_context(3), std::invalid_argument);
}

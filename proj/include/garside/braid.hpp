#pragma once

// Type A_n: the braid group B_{n+1} with positive permutation braids as
// simples, the constants of the Dehornoy structure (⟨s1..s_{n-1}⟩,
// ⟨s2..s_n⟩), word reversal, handle reduction and the breadth criterion.

#include <memory>

#include "garside/core.hpp"
#include "garside/sign.hpp"
#include "garside/structure.hpp"

namespace garside {

/// Simples of B_{n+1} as permutations of {0..n}, four bits per entry.
/// Atom i is the generator s_{i+1}.
class BraidModel final : public Model {
 public:
  static constexpr int kMaxGenerators = 15;

  explicit BraidModel(int n);

  int generators() const { return n_; }

  int num_atoms() const override { return n_; }
  std::string atom_name(int atom) const override;
  int delta_exponent() const override { return 2; }
  int omega_conjugation_order() const override { return n_ == 1 ? 1 : 2; }
  /// Intervals of consecutive generators.
  bool is_parabolic_subset(AtomMask atoms) const override;

  Simple identity() const override;
  Simple omega() const override;
  Simple atom(int i) const override;

  int length(Simple x) const override;
  AtomMask right_descents(Simple x) const override;
  AtomMask left_descents(Simple x) const override;
  Simple product(Simple x, Simple y) const override;
  Simple right_quotient(Simple x, Simple y) const override;
  Simple left_quotient(Simple x, Simple y) const override;
  Simple reverse(Simple x) const override;
  std::vector<int> word(Simple x) const override;
  Simple omega_conjugate(Simple x, int k) const override;

  /// Permutation entries of a simple.
  std::vector<int> permutation(Simple x) const;
  Simple from_permutation(const std::vector<int>& perm) const;

 private:
  int n_;
};

struct BraidContext {
  int n = 0;
  std::shared_ptr<const BraidModel> braid;
  ModelPtr model;
  NormalForm omega;
  NormalForm delta;
  /// Δ1 = (s2⋯s_n)^n, the full twist of G1.
  NormalForm delta1;
  /// Λ = (s1⋯s_{n-1})^n, the full twist of H.
  NormalForm lambda;
  NormalForm theta;
  DehornoyStructureSpec structure;
};

/// B_{n+1}, 1 ≤ n ≤ 15. The structure fields need n ≥ 2.
BraidContext make_braid_context(int n);

/// Context of B_m for the embedding of I2(m); m ≥ 4.
BraidContext crisp_target_context(int m);

/// rev: the anti-automorphism reversing positive words.
NormalForm rev(const NormalForm& a);

/// Φ(s_i) = s_{n+1-i}, conjugation by Ω.
GroupElement flip(const GroupElement& alpha);

/// s1-sign of a signed word by handle reduction. Independent of the Garside
/// machinery. Throws std::runtime_error after 10^6 reduction steps.
Sign handle_reduction_sign(const SignedWord& word);

/// Fully handle-reduced word (no σ1 of both signs).
SignedWord handle_reduce(const SignedWord& word);

/// Sign of Ω^{-k}·a from the breadth criterion: negative iff
/// k ≥ max(1, bh(a) − 1), bh taken with respect to (⟨s1..s_{n-1}⟩, ⟨s2..s_n⟩).
Sign breadth_sign(const NormalForm& a, int k, const BraidContext& ctx);

}  // namespace garside

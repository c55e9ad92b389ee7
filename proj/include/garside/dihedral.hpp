#pragma once

// Dihedral Artin groups I2(m), m ≥ 4. Two representations are provided:
// the generic greedy-form model (simples are alternating words of length
// ≤ m) and a direct one storing the unique block word of the Ω-unmovable
// part together with the Ω-power. They are cross-checked in the tests.

#include <memory>
#include <utility>

#include "garside/braid.hpp"
#include "garside/core.hpp"
#include "garside/structure.hpp"

namespace garside {

/// Letter codes of the direct representation.
inline constexpr int kS = 0;
inline constexpr int kT = 1;

class DihedralModel final : public Model {
 public:
  explicit DihedralModel(int m);

  int m() const { return m_; }

  int num_atoms() const override { return 2; }
  std::string atom_name(int atom) const override;
  int delta_exponent() const override { return m_ % 2 == 0 ? 1 : 2; }
  int omega_conjugation_order() const override { return m_ % 2 == 0 ? 1 : 2; }
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

  /// The alternating word of length len starting with `first`.
  Simple make(int first, int len) const;
  int first_letter(Simple x) const;
  int last_letter(Simple x) const;

 private:
  int m_;
};

/// t^{u_p} s^{v_p} ⋯ t^{u_1} s^{v_1} t^{u_0}, stored as
/// [u_p, v_p, …, u_1, v_1, u_0].
struct BlockWord {
  std::vector<int> blocks{0};

  static BlockWord from_letters(const std::vector<int>& letters);
  std::vector<int> letters() const;
  /// p, the number of s-blocks.
  int depth() const { return static_cast<int>(blocks.size() - 1) / 2; }
  bool is_identity() const { return blocks.size() == 1 && blocks[0] == 0; }
  int length() const;

  friend bool operator==(const BlockWord&, const BlockWord&) = default;
};

/// word · Ω^power with `word` Ω-unmovable.
struct DihedralElement {
  BlockWord word;
  long power = 0;

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

struct DihedralContext {
  int m = 0;
  bool even = true;
  int k = 0;
  int e = 1;
  int zeta = 1;
  std::shared_ptr<const DihedralModel> dihedral;
  ModelPtr model;
  NormalForm omega;
  NormalForm delta;
  NormalForm delta1;
  NormalForm lambda;
  NormalForm theta;
  DehornoyStructureSpec structure;
};

/// I2(m) with H = ⟨s⟩ and G1 = ⟨t⟩; m ≥ 4.
DihedralContext make_dihedral_context(int m);

DihedralElement normalize_dihedral(const DihedralContext& ctx, const std::vector<int>& letters);
DihedralElement multiply_dihedral(const DihedralContext& ctx, const DihedralElement& x,
                                  const DihedralElement& y);
DihedralElement inverse_dihedral(const DihedralContext& ctx, const DihedralElement& x);
DihedralElement dihedral_from_letters(const DihedralContext& ctx, const SignedWord& word);
DihedralElement omega_dihedral(const DihedralContext& ctx, long power);

/// Throws std::invalid_argument unless power is 0.
int depth_dihedral(const DihedralElement& a);

/// (σ(a), τ(a)) as letter codes. Throws for the identity or a movable a.
std::pair<int, int> first_last_letters(const DihedralElement& a);
std::pair<int, int> first_last_letters(const BlockWord& a);

/// The letter swap s ↔ t.
DihedralElement phi(const DihedralElement& a);
BlockWord phi(const BlockWord& a);

DeltaForm dihedral_delta_form(const DihedralContext& ctx, const DihedralElement& a);

/// The same element in the generic model.
GroupElement to_group(const DihedralContext& ctx, const DihedralElement& a);
/// Back from the generic model.
DihedralElement from_group(const DihedralContext& ctx, const GroupElement& g);

std::string to_string(const DihedralElement& a);

/// ι(s) = r1 r3 ⋯, ι(t) = r2 r4 ⋯ in B_m, letter by letter.
SignedWord crisp_embed_word(int m, const SignedWord& word);
/// ι(α), normalized in the target braid group.
GroupElement crisp_embed(const DihedralContext& ctx, const DihedralElement& a,
                         const BraidContext& target);

}  // namespace garside

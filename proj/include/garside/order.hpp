#pragma once

// (H, G1)-signs and the left orders obtained by iterating Dehornoy
// structures down to an infinite cyclic group.

#include <stdexcept>
#include <vector>

#include "garside/core.hpp"
#include "garside/sign.hpp"
#include "garside/structure.hpp"

namespace garside {

enum class Comparison { Less, Equal, Greater };

const char* to_string(Comparison c);

/// Raised when an element is not in exactly one of P, P⁻¹, G1.
class TrichotomyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// α = aΔ^{-k} with k ≥ 1 and dpt(a) < ζk + 1.
bool is_negative(const GroupElement& alpha, const DehornoyStructureSpec& spec);

/// Negative, Positive (α⁻¹ negative) or InG1; throws TrichotomyViolation
/// unless exactly one holds.
Sign sign(const GroupElement& alpha, const DehornoyStructureSpec& spec);

/// Both orthogonal-form parts lie in the parabolic submonoid.
bool parabolic_member(const GroupElement& alpha, const ParabolicSet& x);

/// Re-expresses a member of the parabolic X in `sub`, whose atoms 0, 1, …
/// stand for the atoms of X in increasing order.
GroupElement project_into_parabolic(const GroupElement& alpha, const ParabolicSet& x,
                                    const ModelPtr& sub);

/// Exponent of α in a one-atom parabolic ⟨x⟩ ≅ Z.
long cyclic_exponent(const GroupElement& alpha, const ParabolicSet& x);

/// Nested structures G = G_0 ⊃ G_1 ⊃ ⋯ with the last G1 infinite cyclic.
/// levels[i+1].model is the G1 of levels[i]; epsilon has one entry per
/// level plus one for the cyclic bottom.
struct OrderChain {
  std::vector<DehornoyStructureSpec> levels;
  std::vector<int> epsilon;

  std::size_t depth() const { return levels.size() + 1; }
};

/// Chain B_{n+1} ⊃ B_n ⊃ ⋯ ⊃ B_3 ⊃ Z; epsilon of length n.
OrderChain braid_order_chain(int n, std::vector<int> epsilon);
/// Chain I2(m) ⊃ ⟨t⟩; epsilon of length 2.
OrderChain dihedral_order_chain(int m, std::vector<int> epsilon);

/// Sign of α in the chain order: +1 if 1 < α, −1 if α < 1, 0 if α = 1.
int chain_sign(const GroupElement& alpha, const OrderChain& chain);

/// α < β iff α⁻¹β is positive in the chain order.
Comparison compare(const GroupElement& alpha, const GroupElement& beta, const OrderChain& chain);

/// Parses "+-+" style strings.
std::vector<int> parse_epsilon(const std::string& text);

}  // namespace garside

#pragma once

// The data of a Dehornoy structure (H, G1) on a Garside group, and the
// depth calculus built on the alternating form with respect to (N, M1).

#include <optional>

#include "garside/core.hpp"

namespace garside {

struct DehornoyStructureSpec {
  ModelPtr model;
  /// H and its monoid N, with Garside element Λ.
  ParabolicSet h;
  /// G1 and its monoid M1, with Garside element Δ1.
  ParabolicSet g1;
  /// Condition A constant: dpt(Δ^k) = ζk + 1.
  int zeta = 1;
  /// θ = ΔΔ1⁻¹.
  NormalForm theta;
};

class StructureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds and validates a structure: N ≠ M, M1 ≠ M, N ∪ M1 generates M,
/// Δ central, Δ1 central in G1, θ·Δ1 = Δ. Throws StructureError otherwise.
DehornoyStructureSpec make_structure(const ModelPtr& model, AtomMask h_atoms,
                                     AtomMask g1_atoms, int zeta);

/// dpt(a): number of even-indexed factors of the (N, M1)-alternating form.
int depth(const NormalForm& a, const DehornoyStructureSpec& spec);
AlternatingForm alternating_form(const NormalForm& a, const DehornoyStructureSpec& spec);

bool in_m1(const NormalForm& a, const DehornoyStructureSpec& spec);

/// (k, a0) with a = θ^k a0, k ≥ 1, a0 ∈ M1, if a is a theta element.
std::optional<ThetaDecomposition> theta_decompose(const NormalForm& a,
                                                  const DehornoyStructureSpec& spec);
bool in_theta(const NormalForm& a, const DehornoyStructureSpec& spec);
/// Θ̄ = Θ ∪ M1.
bool in_theta_bar(const NormalForm& a, const DehornoyStructureSpec& spec);

}  // namespace garside

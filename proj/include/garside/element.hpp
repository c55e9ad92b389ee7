#pragma once

// Value types for monoid and group elements of a Garside group.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "garside/model.hpp"

namespace garside {

/// A generator letter s_i^{±1} of a signed word. `atom` is 0-based.
struct Letter {
  int atom = 0;
  int exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using SignedWord = std::vector<Letter>;

/// A monoid element in right greedy normal form u_p ⋯ u_2 u_1 with respect
/// to Ω. Factors are stored left to right, so factors().back() is u_1.
/// Every factor is nontrivial and any Ω factors sit at the right end.
class NormalForm {
 public:
  NormalForm() = default;
  /// The identity of `model`.
  explicit NormalForm(ModelPtr model);

  /// Greedy form of the product of the given simples, read left to right.
  static NormalForm from_simples(ModelPtr model, std::span<const Simple> simples);
  /// Wraps factors that are already in right greedy normal form.
  static NormalForm from_greedy_factors(ModelPtr model, std::vector<Simple> factors) {
    return NormalForm(std::move(model), std::move(factors));
  }

  const ModelPtr& model() const { return model_; }
  const std::vector<Simple>& factors() const { return factors_; }

  bool is_identity() const { return factors_.empty(); }
  /// Number of greedy factors, i.e. the Ω-supremum.
  int sup() const { return static_cast<int>(factors_.size()); }
  /// Number of trailing Ω factors, i.e. the Ω-infimum.
  int inf() const;
  /// Number of atoms in any positive word for the element.
  int word_length() const;
  std::vector<int> word() const;

  /// Right-multiplies by a simple, keeping the form right greedy.
  void append(Simple x);
  /// Removes and returns the trailing Ω factors.
  int pop_omegas();

  friend bool operator==(const NormalForm& a, const NormalForm& b);

 private:
  NormalForm(ModelPtr model, std::vector<Simple> factors)
      : model_(std::move(model)), factors_(std::move(factors)) {}

  ModelPtr model_;
  std::vector<Simple> factors_;
};

/// A group element written part·Ω^power with `part` Ω-unmovable; this
/// representation is unique.
class GroupElement {
 public:
  GroupElement() = default;
  /// The identity of `model`.
  explicit GroupElement(ModelPtr model);
  /// part·Ω^power for an arbitrary positive `part`; Ω factors of `part` are
  /// folded into the power.
  GroupElement(NormalForm part, long power);

  const ModelPtr& model() const { return part_.model(); }
  const NormalForm& part() const { return part_; }
  long omega_power() const { return power_; }

  bool is_identity() const { return power_ == 0 && part_.is_identity(); }
  /// The element as a monoid element, if it is one.
  std::optional<NormalForm> to_positive() const;

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  NormalForm part_;
  long power_ = 0;
};

/// α = unmovable · Δ^power with Δ not right-dividing `unmovable`.
struct DeltaForm {
  NormalForm unmovable;
  long power = 0;

  friend bool operator==(const DeltaForm&, const DeltaForm&) = default;
};

/// A standard parabolic submonoid given by a set of atoms.
struct ParabolicSet {
  AtomMask atoms = 0;
  /// Greatest simple (with respect to Ω) lying in the parabolic.
  Simple omega;
  /// Parabolic Garside element δ = omega^e, with Div(δ) = Div(Δ) ∩ M_δ.
  NormalForm delta;

  const ModelPtr& model() const { return delta.model(); }
  bool contains_atom(int i) const { return (atoms & atom_bit(i)) != 0; }
};

/// Right alternating form a_p ⋯ a_2 a_1 with respect to (N2, N1). Factors
/// are stored a_p first; a_1 (last) may be trivial.
struct AlternatingForm {
  std::vector<NormalForm> factors;
  int breadth = 1;
  int depth = 0;
};

/// a = θ^k · a0 with k ≥ 1 and a0 in M1.
struct ThetaDecomposition {
  int k = 0;
  NormalForm a0;
};

/// Hash of the canonical encoding, usable with unordered containers.
struct ElementHash {
  std::size_t operator()(const NormalForm& a) const noexcept;
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Prints a word as "s1 s2^2 s1" (or "1" for the empty word).
std::string format_word(const Model& model, std::span<const int> word);
std::string format_signed_word(const Model& model, std::span<const Letter> word);
std::string to_string(const NormalForm& a);
/// "part · W^q" style rendering, e.g. "s1 s2 W^-1".
std::string to_string(const GroupElement& g);

}  // namespace garside

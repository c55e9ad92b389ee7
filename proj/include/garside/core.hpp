#pragma once

// Generic Garside machinery: greedy normal forms, the divisibility lattice,
// Δ-forms, orthogonal forms, complements, parabolic tails and alternating
// forms. Everything here is written against the Model contract only.

#include <optional>
#include <span>
#include <utility>

#include "garside/element.hpp"
#include "garside/model.hpp"

namespace garside {

// ---------------------------------------------------------------------------
// Monoid elements

/// Normal form of a positive word over atom indices.
NormalForm greedy_normalize(const ModelPtr& model, std::span<const int> word);
NormalForm atom_element(const ModelPtr& model, int atom);
NormalForm omega_element(const ModelPtr& model, int power = 1);
/// Δ^power = Ω^{e·power}.
NormalForm delta_element(const ModelPtr& model, int power = 1);

/// Throws ContextMismatch unless both elements live in the same model.
void require_same_model(const Model& a, const Model& b);

NormalForm multiply(const NormalForm& u, const NormalForm& v);

/// Greatest common right divisor.
NormalForm right_gcd(const NormalForm& u, const NormalForm& v);
/// Least common right multiple (the smallest element right-divisible by both).
NormalForm right_lcm(const NormalForm& u, const NormalForm& v);
/// Greatest common left divisor.
NormalForm left_gcd(const NormalForm& u, const NormalForm& v);

/// c with a = c·b, if b ≤_R a.
std::optional<NormalForm> divide_right(const NormalForm& a, const NormalForm& b);
/// c with a = b·c, if b ≤_L a.
std::optional<NormalForm> divide_left(const NormalForm& a, const NormalForm& b);
bool right_divides(const NormalForm& b, const NormalForm& a);

/// Image under the word-reversing anti-automorphism.
NormalForm reverse(const NormalForm& a);
/// Ω^k a Ω^{-k}.
NormalForm omega_conjugate(const NormalForm& a, int k);

/// Δ does not right-divide a.
bool is_unmovable(const NormalForm& a);
/// Ω does not right-divide a.
bool is_omega_unmovable(const NormalForm& a);

/// lg(a) with respect to Div(Δ)∖{1}: the least p with a ≤_R Δ^p.
int canonical_length_delta(const NormalForm& a);

/// com(a), the element with a·com(a) = Δ^lg(a). Requires a unmovable.
NormalForm complement(const NormalForm& a);

// ---------------------------------------------------------------------------
// Group elements

GroupElement to_group(const NormalForm& a);
GroupElement atom_group_element(const ModelPtr& model, int atom, int exponent = 1);
GroupElement omega_group_element(const ModelPtr& model, long power);
GroupElement delta_group_element(const ModelPtr& model, long power);
GroupElement from_letters(const ModelPtr& model, std::span<const Letter> word);

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long k);
/// Ω^k g Ω^{-k}.
GroupElement omega_conjugate(const GroupElement& g, int k);

/// A signed word for g: part's normal-form word followed by Ω^power.
SignedWord to_letters(const GroupElement& g);

/// The unique (a, b) with g = a·b⁻¹ and right_gcd(a, b) = 1.
std::pair<NormalForm, NormalForm> orthogonal_form(const GroupElement& g);

DeltaForm delta_form(const GroupElement& g);
GroupElement recompose(const DeltaForm& form);

// ---------------------------------------------------------------------------
// Parabolic submonoids, tails and alternating forms

class ParabolicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws ParabolicError if the model does not declare the subset parabolic.
ParabolicSet make_parabolic(const ModelPtr& model, AtomMask atoms);

/// Every atom of a lies in N.
bool in_parabolic(const NormalForm& a, const ParabolicSet& n);

/// τ_N(a): the greatest right divisor of a that lies in N.
NormalForm tail(const NormalForm& a, const ParabolicSet& n);

/// Right alternating form with respect to (n2, n1). Throws ParabolicError
/// when n2 ∪ n1 does not generate the monoid.
AlternatingForm alternating_form(const NormalForm& a, const ParabolicSet& n2,
                                 const ParabolicSet& n1);

/// Multiplies a list of elements, left to right.
NormalForm product(const ModelPtr& model, std::span<const NormalForm> factors);

}  // namespace garside

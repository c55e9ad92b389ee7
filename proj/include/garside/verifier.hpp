#pragma once

// Exhaustive and sampled checks of Conditions A and B, the cone axioms,
// sign cross-validation against handle reduction, and the depth lemmas,
// plus the brute-force oracles they rely on.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "garside/braid.hpp"
#include "garside/core.hpp"
#include "garside/dihedral.hpp"
#include "garside/order.hpp"
#include "garside/structure.hpp"

namespace garside {

struct EnumerationBudget {
  /// Maximal word length L.
  int max_length = 6;
  /// Maximal Δ-power K.
  int max_power = 4;
  int samples = 1000;
  std::uint64_t seed = 1;
};

struct Failure {
  std::string instance;
  std::string trace;
};

struct CheckReport {
  std::string name;
  std::size_t instances = 0;
  std::vector<Failure> failures;
  /// Case-coverage counters, keyed by case name.
  std::map<std::string, std::size_t> coverage;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;

  bool pass() const { return failures.empty(); }
  void fail(std::string instance, std::string trace) {
    failures.push_back({std::move(instance), std::move(trace)});
  }
  /// Folds another report into this one.
  void merge(const CheckReport& other);
  std::string to_text() const;
};

// ---------------------------------------------------------------------------
// Enumeration

/// All monoid elements of word length ≤ L, by length then discovery order.
std::vector<NormalForm> enumerate_positive(const ModelPtr& model, int max_length);
/// The Δ-unmovable ones.
std::vector<NormalForm> enumerate_unmovable(const ModelPtr& model, int max_length);
/// The Ω-unmovable ones.
std::vector<NormalForm> enumerate_omega_unmovable(const ModelPtr& model, int max_length);
/// All group elements represented by signed words of length ≤ L.
std::vector<GroupElement> enumerate_ball(const ModelPtr& model, int radius);

/// Uniform length in [0, L], uniform letters s_i^{±1}.
SignedWord random_signed_word(int num_atoms, int max_length, std::mt19937_64& rng);
/// Same, restricted to the given atoms.
SignedWord random_signed_word(const std::vector<int>& atoms, int max_length, std::mt19937_64& rng);

// ---------------------------------------------------------------------------
// Rewriting oracles (independent of the simple-element machinery)

using Word = std::vector<int>;

/// Artin relations Π(a, b, m_ab) = Π(b, a, m_ab) of a braid or dihedral model.
std::vector<std::pair<Word, Word>> defining_relations(const Model& model);

/// Every positive word equivalent to w under the defining relations.
std::set<Word> rewriting_closure(const Word& w, const std::vector<std::pair<Word, Word>>& rels);

/// Greatest right divisor of a lying in N, by enumerating all suffixes of all
/// words for a. Throws std::logic_error if there is no unique maximum.
NormalForm brute_force_tail(const NormalForm& a, const ParabolicSet& n);

// ---------------------------------------------------------------------------
// Checks

CheckReport check_condition_A(const DehornoyStructureSpec& spec, int max_power);
CheckReport check_condition_B(const DehornoyStructureSpec& spec, int max_length);
/// Exhaustive trichotomy on the ball of radius L, then sampled closure,
/// absorption and order laws for the chain.
CheckReport check_trichotomy(const DehornoyStructureSpec& spec, int radius);
CheckReport check_cone_axioms(const OrderChain& chain, const EnumerationBudget& budget);
CheckReport check_order_laws(const OrderChain& chain, const EnumerationBudget& budget);
CheckReport check_tail_oracle(const DehornoyStructureSpec& spec, int max_length);

/// Random words: order sign vs handle reduction of the same word.
CheckReport cross_validate_signs(const BraidContext& ctx, const EnumerationBudget& budget);
/// Unmovable a of length ≤ L and k ≤ K: breadth criterion vs handle reduction.
CheckReport cross_validate_breadth(const BraidContext& ctx, const EnumerationBudget& budget);
/// Random words: order sign vs handle reduction of the embedded word.
CheckReport cross_validate_signs(const DihedralContext& ctx, const EnumerationBudget& budget);

CheckReport check_lemma_suite(const BraidContext& ctx, const EnumerationBudget& budget);
CheckReport check_lemma_suite(const DihedralContext& ctx, const EnumerationBudget& budget);

}  // namespace garside

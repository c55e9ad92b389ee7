#pragma once

#include <set>
#include <string>
#include <vector>

#include "garside/braid.hpp"
#include "garside/core.hpp"
#include "garside/dihedral.hpp"
#include "garside/verifier.hpp"
#include "garside/word.hpp"

namespace garside::testing {

inline GroupElement el(const ModelPtr& model, const std::string& text) {
  return evaluate_word(parse_word(text), model);
}

inline NormalForm pos(const ModelPtr& model, const std::string& text) {
  return *el(model, text).to_positive();
}

// Brute force: d ≤_R a iff some word of a ends with some word of d.
inline bool oracle_right_divides(const NormalForm& d, const NormalForm& a) {
  const auto rels = defining_relations(*a.model());
  const auto wa = rewriting_closure(a.word(), rels);
  const Word dw = d.word();
  for (const Word& w : wa) {
    if (w.size() >= dw.size() && std::equal(dw.begin(), dw.end(), w.end() - dw.size())) return true;
  }
  return false;
}

inline bool oracle_left_divides(const NormalForm& d, const NormalForm& a) {
  const auto rels = defining_relations(*a.model());
  const auto wa = rewriting_closure(a.word(), rels);
  const Word dw = d.word();
  for (const Word& w : wa) {
    if (w.size() >= dw.size() && std::equal(dw.begin(), dw.end(), w.begin())) return true;
  }
  return false;
}

}  // namespace garside::testing

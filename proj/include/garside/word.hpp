#pragma once

// Text syntax for signed words:
//   WORD := "1" | TERM ((WS | ".")+ TERM)*
//   TERM := GEN ("^" INT)?
//   GEN  := "s" DIGITS | "s" | "t" | "W" | "D"      (W = Ω, D = Δ)

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "garside/core.hpp"

namespace garside {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct WordTerm {
  /// Generator spelling: "s3", "s", "t", "W" or "D".
  std::string generator;
  long exponent = 1;
  std::size_t offset = 0;

  friend bool operator==(const WordTerm&, const WordTerm&) = default;
};

/// Empty for the identity "1".
std::vector<WordTerm> parse_word(std::string_view text);

/// Expands terms to letters over the model's atoms; W and D become the
/// words of Ω and Δ. Throws ParseError for generators the model lacks.
SignedWord expand_word(const std::vector<WordTerm>& terms, const Model& model);

GroupElement evaluate_word(const std::vector<WordTerm>& terms, const ModelPtr& model);

}  // namespace garside

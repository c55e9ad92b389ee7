#include "garside/word.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace garside {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<WordTerm> parse_word(std::string_view text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw ParseError("empty word", pos);
  if (text[pos] == '1') {
    ++pos;
    skip_ws();
    if (pos != text.size()) throw ParseError("unexpected input after \"1\"", pos);
    return {};
  }

  std::vector<WordTerm> out;
  for (;;) {
    WordTerm term;
    term.offset = pos;
    const char c = text[pos];
    if (c == 's') {
      ++pos;
      const std::size_t digits = pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      term.generator = std::string(text.substr(term.offset, pos - term.offset));
      if (pos > digits && text[digits] == '0') throw ParseError("bad generator index", digits);
    } else if (c == 't' || c == 'W' || c == 'D') {
      ++pos;
      term.generator = std::string(1, c);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t start = pos;
      bool negative = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) negative = text[pos++] == '-';
      const std::size_t digits = pos;
      while (pos < text.size() && is_digit(text[pos])) ++pos;
      if (pos == digits) throw ParseError("expected an integer exponent", start);
      long value = 0;
      const auto res = std::from_chars(text.data() + digits, text.data() + pos, value);
      if (res.ec != std::errc() || value > std::numeric_limits<int>::max()) {
        throw ParseError("exponent out of range", digits);
      }
      if (value == 0) throw ParseError("exponent must be nonzero", start);
      term.exponent = negative ? -value : value;
    }
    out.push_back(std::move(term));
    if (pos == text.size()) break;
    const std::size_t sep = pos;
    while (pos < text.size() && (is_space(text[pos]) || text[pos] == '.')) ++pos;
    if (pos == sep) throw ParseError("expected a separator", pos);
    if (pos == text.size()) {
      // trailing whitespace is fine, a trailing '.' is not
      if (text.substr(sep).find('.') != std::string_view::npos) {
        throw ParseError("expected a generator", pos);
      }
      break;
    }
  }
  return out;
}

SignedWord expand_word(const std::vector<WordTerm>& terms, const Model& model) {
  SignedWord out;
  for (const WordTerm& term : terms) {
    std::vector<int> letters;
    if (term.generator == "W" || term.generator == "D") {
      const int reps = term.generator == "W" ? 1 : model.delta_exponent();
      const auto w = model.word(model.omega());
      for (int i = 0; i < reps; ++i) letters.insert(letters.end(), w.begin(), w.end());
    } else {
      int found = -1;
      for (int a = 0; a < model.num_atoms(); ++a) {
        if (model.atom_name(a) == term.generator) found = a;
      }
      if (found < 0) {
        throw ParseError("unknown generator " + term.generator + " for " + model.name(), term.offset);
      }
      letters.push_back(found);
    }
    const long reps = term.exponent > 0 ? term.exponent : -term.exponent;
    for (long r = 0; r < reps; ++r) {
      if (term.exponent > 0) {
        for (int a : letters) out.push_back({a, 1});
      } else {
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.push_back({*it, -1});
      }
    }
  }
  return out;
}

GroupElement evaluate_word(const std::vector<WordTerm>& terms, const ModelPtr& model) {
  GroupElement out(model);
  for (const WordTerm& term : terms) {
    GroupElement g(model);
    if (term.generator == "W") {
      g = omega_group_element(model, term.exponent);
    } else if (term.generator == "D") {
      g = delta_group_element(model, term.exponent);
    } else {
      const SignedWord w = expand_word({term}, *model);
      g = from_letters(model, w);
    }
    out = multiply(out, g);
  }
  return out;
}

}  // namespace garside

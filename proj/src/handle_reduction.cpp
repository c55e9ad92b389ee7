// Handle reduction on signed braid words. Deliberately self-contained: it
// is the oracle the Garside-side order is checked against.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "garside/braid.hpp"

namespace garside {

namespace {

constexpr long kStepCeiling = 1'000'000;

void free_reduce(SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back().atom == l.atom && out.back().exponent == -l.exponent) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  w = std::move(out);
}

// Leftmost-closing handle s_i^e w s_i^-e with w over s_{i+1}, s_{i+2}, ...
bool find_handle(const SignedWord& w, std::size_t& begin, std::size_t& end) {
  int max_atom = 0;
  for (const Letter& l : w) max_atom = std::max(max_atom, l.atom);
  std::vector<long> last(static_cast<std::size_t>(max_atom) + 1, -1);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const auto idx = static_cast<std::size_t>(w[pos].atom);
    if (last[idx] >= 0 && w[static_cast<std::size_t>(last[idx])].exponent == -w[pos].exponent) {
      begin = static_cast<std::size_t>(last[idx]);
      end = pos;
      return true;
    }
    last[idx] = static_cast<long>(pos);
    for (std::size_t j = idx + 1; j < last.size(); ++j) last[j] = -1;
  }
  return false;
}

}  // namespace

SignedWord handle_reduce(const SignedWord& word) {
  SignedWord w = word;
  for (const Letter& l : w) {
    if (l.atom < 0 || (l.exponent != 1 && l.exponent != -1)) {
      throw std::invalid_argument("handle reduction needs letters s_i^{±1}");
    }
  }
  free_reduce(w);
  std::size_t begin = 0, end = 0;
  for (long steps = 0; find_handle(w, begin, end); ++steps) {
    if (steps >= kStepCeiling) throw std::runtime_error("handle reduction exceeded step ceiling");
    const int i = w[begin].atom;
    const int e = w[begin].exponent;
    SignedWord next(w.begin(), w.begin() + static_cast<long>(begin));
    for (std::size_t p = begin + 1; p < end; ++p) {
      if (w[p].atom == i + 1) {
        next.push_back({i + 1, -e});
        next.push_back({i, w[p].exponent});
        next.push_back({i + 1, e});
      } else {
        next.push_back(w[p]);
      }
    }
    next.insert(next.end(), w.begin() + static_cast<long>(end) + 1, w.end());
    free_reduce(next);
    w = std::move(next);
  }
  return w;
}

Sign handle_reduction_sign(const SignedWord& word) {
  bool pos = false, neg = false;
  for (const Letter& l : handle_reduce(word)) {
    if (l.atom != 0) continue;
    (l.exponent > 0 ? pos : neg) = true;
  }
  if (pos && neg) throw std::logic_error("handle reduction left a s1-handle");
  if (pos) return Sign::Positive;
  if (neg) return Sign::Negative;
  return Sign::InG1;
}

}  // namespace garside

#include "garside/element.hpp"

#include <sstream>
#include <stdexcept>

namespace garside {

NormalForm::NormalForm(ModelPtr model) : model_(std::move(model)) {}

NormalForm NormalForm::from_simples(ModelPtr model, std::span<const Simple> simples) {
  NormalForm result(std::move(model));
  for (Simple x : simples) result.append(x);
  return result;
}

int NormalForm::inf() const {
  int count = 0;
  for (auto it = factors_.rbegin(); it != factors_.rend() && model_->is_omega(*it); ++it) {
    ++count;
  }
  return count;
}

int NormalForm::word_length() const {
  int total = 0;
  for (Simple x : factors_) total += model_->length(x);
  return total;
}

std::vector<int> NormalForm::word() const {
  std::vector<int> out;
  for (Simple x : factors_) {
    const auto w = model_->word(x);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

// Appending a simple x to a right greedy form u_p ⋯ u_1 needs one leftward
// pass: (u_1 x) ∧_R Ω = (u_1 ∧_R lc(x))·x becomes the new last factor and the
// remainder is pushed into u_2, and so on until nothing remains.
void NormalForm::append(Simple x) {
  const Model& m = *model_;
  if (m.is_identity(x)) return;
  Simple carry = x;
  std::size_t i = factors_.size();
  while (i > 0) {
    --i;
    const Simple u = factors_[i];
    const Simple moved = m.right_meet(u, m.left_complement(carry));
    factors_[i] = m.product(moved, carry);
    carry = m.right_quotient(u, moved);
    if (m.is_identity(carry)) return;
  }
  factors_.insert(factors_.begin(), carry);
}

int NormalForm::pop_omegas() {
  int count = 0;
  while (!factors_.empty() && model_->is_omega(factors_.back())) {
    factors_.pop_back();
    ++count;
  }
  return count;
}

bool operator==(const NormalForm& a, const NormalForm& b) {
  if (a.factors_ != b.factors_) return false;
  if (!a.model_ || !b.model_) return a.model_ == b.model_;
  return same_model(*a.model_, *b.model_);
}

GroupElement::GroupElement(ModelPtr model) : part_(std::move(model)) {}

GroupElement::GroupElement(NormalForm part, long power) : part_(std::move(part)), power_(power) {
  if (!part_.model()) throw std::invalid_argument("GroupElement: element without a model");
  const int omegas = part_.pop_omegas();
  if (omegas > 0) {
    // part·Ω^j·Ω^power: the popped Ω's already sit at the right end.
    power_ += omegas;
  }
}

std::optional<NormalForm> GroupElement::to_positive() const {
  if (power_ < 0) return std::nullopt;
  NormalForm out = part_;
  for (long i = 0; i < power_; ++i) out.append(part_.model()->omega());
  return out;
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return a.power_ == b.power_ && a.part_ == b.part_;
}

std::size_t ElementHash::operator()(const NormalForm& a) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Simple x : a.factors()) {
    h ^= std::hash<Simple>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t ElementHash::operator()(const GroupElement& g) const noexcept {
  std::size_t h = (*this)(g.part());
  return h ^ (std::hash<long>{}(g.omega_power()) * 0x100000001b3ULL);
}

namespace {

void write_term(std::ostringstream& os, const std::string& name, long exponent, bool& first) {
  if (!first) os << ' ';
  first = false;
  os << name;
  if (exponent != 1) os << '^' << exponent;
}

}  // namespace

std::string format_word(const Model& model, std::span<const int> word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    write_term(os, model.atom_name(word[i]), static_cast<long>(j - i), first);
    i = j;
  }
  return os.str();
}

std::string format_signed_word(const Model& model, std::span<const Letter> word) {
  if (word.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    long exponent = 0;
    while (j < word.size() && word[j] == word[i]) {
      exponent += word[j].exponent;
      ++j;
    }
    write_term(os, model.atom_name(word[i].atom), exponent, first);
    i = j;
  }
  return os.str();
}

std::string to_string(const NormalForm& a) { return format_word(*a.model(), a.word()); }

std::string to_string(const GroupElement& g) {
  if (g.omega_power() == 0) return to_string(g.part());
  std::ostringstream os;
  if (!g.part().is_identity()) os << to_string(g.part()) << ' ';
  os << 'W';
  if (g.omega_power() != 1) os << '^' << g.omega_power();
  return os.str();
}

}  // namespace garside

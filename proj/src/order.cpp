#include "garside/order.hpp"

#include <bit>
#include <string>

#include "garside/braid.hpp"
#include "garside/dihedral.hpp"

namespace garside {

const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "less";
    case Comparison::Equal: return "equal";
    case Comparison::Greater: return "greater";
  }
  return "?";
}

bool is_negative(const GroupElement& alpha, const DehornoyStructureSpec& spec) {
  require_same_model(*alpha.model(), *spec.model);
  const DeltaForm df = delta_form(alpha);
  if (df.power > -1) return false;
  const long k = -df.power;
  return depth(df.unmovable, spec) < spec.zeta * k + 1;
}

Sign sign(const GroupElement& alpha, const DehornoyStructureSpec& spec) {
  const bool neg = is_negative(alpha, spec);
  const bool pos = is_negative(inverse(alpha), spec);
  const bool in_g1 = parabolic_member(alpha, spec.g1);
  if (int(neg) + int(pos) + int(in_g1) != 1) {
    throw TrichotomyViolation("trichotomy fails for " + to_string(alpha) + " (negative=" +
                              std::to_string(neg) + ", positive=" + std::to_string(pos) +
                              ", in G1=" + std::to_string(in_g1) + ")");
  }
  if (neg) return Sign::Negative;
  if (pos) return Sign::Positive;
  return Sign::InG1;
}

bool parabolic_member(const GroupElement& alpha, const ParabolicSet& x) {
  const auto [a, b] = orthogonal_form(alpha);
  return in_parabolic(a, x) && in_parabolic(b, x);
}

namespace {

std::vector<int> reindex(const std::vector<int>& word, AtomMask atoms) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int a : word) {
    out.push_back(std::popcount(atoms & (atom_bit(a) - 1)));
  }
  return out;
}

}  // namespace

GroupElement project_into_parabolic(const GroupElement& alpha, const ParabolicSet& x,
                                    const ModelPtr& sub) {
  const auto [a, b] = orthogonal_form(alpha);
  if (!in_parabolic(a, x) || !in_parabolic(b, x)) {
    throw std::invalid_argument("projection: " + to_string(alpha) + " is not in the parabolic");
  }
  if (sub->num_atoms() != std::popcount(x.atoms)) {
    throw ContextMismatch("projection target " + sub->name() + " has the wrong rank");
  }
  const NormalForm num = greedy_normalize(sub, reindex(a.word(), x.atoms));
  const NormalForm den = greedy_normalize(sub, reindex(b.word(), x.atoms));
  return multiply(to_group(num), inverse(to_group(den)));
}

long cyclic_exponent(const GroupElement& alpha, const ParabolicSet& x) {
  if (std::popcount(x.atoms) != 1) throw std::invalid_argument("parabolic is not cyclic");
  const auto [a, b] = orthogonal_form(alpha);
  if (!in_parabolic(a, x) || !in_parabolic(b, x)) {
    throw std::invalid_argument("cyclic exponent: " + to_string(alpha) + " is not in the parabolic");
  }
  return static_cast<long>(a.word_length()) - static_cast<long>(b.word_length());
}

namespace {

void check_epsilon(const OrderChain& chain) {
  if (chain.epsilon.size() != chain.depth()) {
    throw std::invalid_argument("epsilon needs " + std::to_string(chain.depth()) + " entries, got " +
                                std::to_string(chain.epsilon.size()));
  }
  for (int e : chain.epsilon) {
    if (e != 1 && e != -1) throw std::invalid_argument("epsilon entries must be +1 or -1");
  }
}

}  // namespace

OrderChain braid_order_chain(int n, std::vector<int> epsilon) {
  if (n < 2) throw std::invalid_argument("braid order chain needs n >= 2");
  OrderChain chain;
  for (int j = n; j >= 2; --j) chain.levels.push_back(make_braid_context(j).structure);
  chain.epsilon = std::move(epsilon);
  check_epsilon(chain);
  return chain;
}

OrderChain dihedral_order_chain(int m, std::vector<int> epsilon) {
  OrderChain chain;
  chain.levels.push_back(make_dihedral_context(m).structure);
  chain.epsilon = std::move(epsilon);
  check_epsilon(chain);
  return chain;
}

int chain_sign(const GroupElement& alpha, const OrderChain& chain) {
  check_epsilon(chain);
  if (alpha.is_identity()) return 0;
  GroupElement g = alpha;
  for (std::size_t i = 0; i < chain.levels.size(); ++i) {
    const DehornoyStructureSpec& spec = chain.levels[i];
    const Sign s = sign(g, spec);
    if (s != Sign::InG1) return (s == Sign::Positive ? 1 : -1) * chain.epsilon[i];
    if (i + 1 < chain.levels.size()) {
      g = project_into_parabolic(g, spec.g1, chain.levels[i + 1].model);
    } else {
      const long e = cyclic_exponent(g, spec.g1);
      if (e == 0) throw std::logic_error("nontrivial element projects to 0");
      return (e > 0 ? 1 : -1) * chain.epsilon.back();
    }
  }
  throw std::logic_error("empty order chain");
}

Comparison compare(const GroupElement& alpha, const GroupElement& beta, const OrderChain& chain) {
  const int s = chain_sign(multiply(inverse(alpha), beta), chain);
  if (s == 0) return Comparison::Equal;
  return s > 0 ? Comparison::Less : Comparison::Greater;
}

std::vector<int> parse_epsilon(const std::string& text) {
  std::vector<int> out;
  for (char c : text) {
    if (c == '+') out.push_back(1);
    else if (c == '-') out.push_back(-1);
    else throw std::invalid_argument(std::string("bad epsilon character '") + c + "'");
  }
  return out;
}

}  // namespace garside

#include "garside/dihedral.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace garside {

namespace {

int other(int letter) { return letter ^ 1; }

std::vector<int> alternating(int first, int len) {
  std::vector<int> out;
  for (int i = 0; i < len; ++i) out.push_back(i % 2 == 0 ? first : other(first));
  return out;
}

void check_letters(const std::vector<int>& letters) {
  for (int x : letters) {
    if (x != kS && x != kT) throw std::out_of_range("dihedral letters are s (0) and t (1)");
  }
}

}  // namespace

DihedralModel::DihedralModel(int m) : Model("I2(" + std::to_string(m) + ")"), m_(m) {
  if (m < 3) throw std::invalid_argument("dihedral model needs m >= 3");
}

std::string DihedralModel::atom_name(int atom) const { return atom == kS ? "s" : "t"; }

bool DihedralModel::is_parabolic_subset(AtomMask atoms) const {
  return atoms == 1 || atoms == 2 || atoms == 3;
}

Simple DihedralModel::make(int first, int len) const {
  if (len == 0 || len == m_) first = kS;
  return {static_cast<std::uint64_t>(len) * 2 + static_cast<std::uint64_t>(first)};
}

int DihedralModel::first_letter(Simple x) const { return static_cast<int>(x.code & 1); }

int DihedralModel::last_letter(Simple x) const {
  return length(x) % 2 == 1 ? first_letter(x) : other(first_letter(x));
}

Simple DihedralModel::identity() const { return make(kS, 0); }
Simple DihedralModel::omega() const { return make(kS, m_); }

Simple DihedralModel::atom(int i) const {
  if (i != kS && i != kT) throw std::out_of_range("dihedral atom out of range");
  return make(i, 1);
}

int DihedralModel::length(Simple x) const { return static_cast<int>(x.code >> 1); }

AtomMask DihedralModel::right_descents(Simple x) const {
  const int len = length(x);
  if (len == 0) return 0;
  if (len == m_) return 3;
  return atom_bit(last_letter(x));
}

AtomMask DihedralModel::left_descents(Simple x) const {
  const int len = length(x);
  if (len == 0) return 0;
  if (len == m_) return 3;
  return atom_bit(first_letter(x));
}

Simple DihedralModel::product(Simple x, Simple y) const {
  const int lx = length(x), ly = length(y);
  if (lx == 0) return y;
  if (ly == 0) return x;
  if (lx + ly > m_ || last_letter(x) == first_letter(y)) {
    throw std::logic_error("dihedral product is not simple");
  }
  return make(first_letter(x), lx + ly);
}

Simple DihedralModel::right_quotient(Simple x, Simple y) const {
  const int lx = length(x), ly = length(y);
  if (ly == 0) return x;
  if (lx == m_) {
    // Ω·y⁻¹ ends just before y starts
    const int r = m_ - ly;
    const int last = other(first_letter(y));
    return make(r % 2 == 1 ? last : other(last), r);
  }
  return make(first_letter(x), lx - ly);
}

Simple DihedralModel::left_quotient(Simple x, Simple y) const {
  const int lx = length(x), ly = length(y);
  if (ly == 0) return x;
  if (lx == m_) return make(other(last_letter(y)), m_ - ly);
  return make(ly % 2 == 0 ? first_letter(x) : other(first_letter(x)), lx - ly);
}

Simple DihedralModel::reverse(Simple x) const {
  const int len = length(x);
  if (len == 0 || len == m_) return x;
  return make(last_letter(x), len);
}

std::vector<int> DihedralModel::word(Simple x) const {
  return alternating(first_letter(x), length(x));
}

BlockWord BlockWord::from_letters(const std::vector<int>& letters) {
  check_letters(letters);
  BlockWord out;
  out.blocks.clear();
  int cur = kT;
  int count = 0;
  for (int x : letters) {
    while (x != cur) {
      out.blocks.push_back(count);
      count = 0;
      cur = other(cur);
    }
    ++count;
  }
  out.blocks.push_back(count);
  if (cur == kS) out.blocks.push_back(0);
  return out;
}

std::vector<int> BlockWord::letters() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(blocks[i]), i % 2 == 0 ? kT : kS);
  }
  return out;
}

int BlockWord::length() const {
  int total = 0;
  for (int b : blocks) total += b;
  return total;
}

DihedralContext make_dihedral_context(int m) {
  if (m < 4) throw std::invalid_argument("I2(m) needs m >= 4");
  DihedralContext ctx;
  ctx.m = m;
  ctx.even = m % 2 == 0;
  ctx.k = m / 2;
  ctx.e = ctx.even ? 1 : 2;
  ctx.zeta = ctx.even ? ctx.k - 1 : 2 * ctx.k - 1;
  ctx.dihedral = std::make_shared<DihedralModel>(m);
  ctx.model = ctx.dihedral;
  ctx.omega = omega_element(ctx.model);
  ctx.delta = delta_element(ctx.model);
  ctx.structure = make_structure(ctx.model, atom_bit(kS), atom_bit(kT), ctx.zeta);
  ctx.delta1 = ctx.structure.g1.delta;
  ctx.lambda = ctx.structure.h.delta;
  ctx.theta = ctx.structure.theta;
  return ctx;
}

// x·Ω·y = x·φ(y)·Ω when m is odd; Ω is central when m is even.
DihedralElement normalize_dihedral(const DihedralContext& ctx, const std::vector<int>& letters) {
  check_letters(letters);
  std::vector<int> w = letters;
  long q = 0;
  for (;;) {
    std::size_t run = 0, start = w.size();
    for (std::size_t i = 0; i < w.size(); ++i) {
      run = (i > 0 && w[i] != w[i - 1]) ? run + 1 : 1;
      if (run == static_cast<std::size_t>(ctx.m)) {
        start = i + 1 - run;
        break;
      }
    }
    if (start == w.size()) break;
    w.erase(w.begin() + static_cast<long>(start), w.begin() + static_cast<long>(start) + ctx.m);
    if (!ctx.even) {
      for (std::size_t i = start; i < w.size(); ++i) w[i] = other(w[i]);
    }
    ++q;
  }
  return {BlockWord::from_letters(w), q};
}

DihedralElement multiply_dihedral(const DihedralContext& ctx, const DihedralElement& x,
                                  const DihedralElement& y) {
  std::vector<int> w = x.word.letters();
  std::vector<int> tail = y.word.letters();
  if (!ctx.even && (x.power % 2 != 0)) {
    for (int& l : tail) l = other(l);
  }
  w.insert(w.end(), tail.begin(), tail.end());
  DihedralElement out = normalize_dihedral(ctx, w);
  out.power += x.power + y.power;
  return out;
}

DihedralElement omega_dihedral(const DihedralContext&, long power) { return {BlockWord{}, power}; }

// l⁻¹ = (l⁻¹Ω)·Ω⁻¹, and l⁻¹Ω is the alternating word of length m − 1
// starting with the other letter.
DihedralElement inverse_dihedral(const DihedralContext& ctx, const DihedralElement& x) {
  DihedralElement acc = omega_dihedral(ctx, -x.power);
  const std::vector<int> w = x.word.letters();
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const DihedralElement inv{BlockWord::from_letters(alternating(other(*it), ctx.m - 1)), -1};
    acc = multiply_dihedral(ctx, acc, inv);
  }
  return acc;
}

DihedralElement dihedral_from_letters(const DihedralContext& ctx, const SignedWord& word) {
  DihedralElement acc;
  for (const Letter& l : word) {
    if (l.atom != kS && l.atom != kT) throw std::out_of_range("unknown dihedral generator");
    DihedralElement x = normalize_dihedral(ctx, {l.atom});
    if (l.exponent < 0) x = inverse_dihedral(ctx, x);
    for (int i = 0; i < std::abs(l.exponent); ++i) acc = multiply_dihedral(ctx, acc, x);
  }
  return acc;
}

int depth_dihedral(const DihedralElement& a) {
  if (a.power != 0) throw std::invalid_argument("depth_dihedral: element is not Ω-unmovable");
  return a.word.depth();
}

std::pair<int, int> first_last_letters(const BlockWord& a) {
  if (a.is_identity()) throw std::invalid_argument("first/last letters of the identity");
  return {a.blocks.front() != 0 ? kT : kS, a.blocks.back() != 0 ? kT : kS};
}

std::pair<int, int> first_last_letters(const DihedralElement& a) {
  if (a.power != 0) throw std::invalid_argument("first/last letters need an Ω-unmovable element");
  return first_last_letters(a.word);
}

BlockWord phi(const BlockWord& a) {
  std::vector<int> w = a.letters();
  for (int& l : w) l = other(l);
  return BlockWord::from_letters(w);
}

DihedralElement phi(const DihedralElement& a) { return {phi(a.word), a.power}; }

DeltaForm dihedral_delta_form(const DihedralContext& ctx, const DihedralElement& a) {
  long k = a.power / ctx.e;
  if (a.power % ctx.e != 0 && a.power < 0) --k;
  const long r = a.power - ctx.e * k;
  std::vector<int> w = a.word.letters();
  for (long i = 0; i < r; ++i) {
    const auto om = alternating(kS, ctx.m);
    w.insert(w.end(), om.begin(), om.end());
  }
  return {greedy_normalize(ctx.model, w), k};
}

GroupElement to_group(const DihedralContext& ctx, const DihedralElement& a) {
  return GroupElement(greedy_normalize(ctx.model, a.word.letters()), a.power);
}

DihedralElement from_group(const DihedralContext& ctx, const GroupElement& g) {
  require_same_model(*g.model(), *ctx.model);
  DihedralElement out = normalize_dihedral(ctx, g.part().word());
  out.power += g.omega_power();
  return out;
}

std::string to_string(const DihedralElement& a) {
  const std::vector<int> w = a.word.letters();
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (i > 0) os << ' ';
    os << (w[i] == kS ? 's' : 't');
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  if (a.power != 0) {
    if (!w.empty()) os << ' ';
    os << 'W';
    if (a.power != 1) os << '^' << a.power;
  }
  const std::string s = os.str();
  return s.empty() ? "1" : s;
}

namespace {

std::vector<int> crisp_image(int m, int letter) {
  std::vector<int> out;
  for (int r = (letter == kS ? 0 : 1); r < m - 1; r += 2) out.push_back(r);
  return out;
}

}  // namespace

SignedWord crisp_embed_word(int m, const SignedWord& word) {
  SignedWord out;
  for (const Letter& l : word) {
    const auto image = crisp_image(m, l.atom);
    for (int i = 0; i < std::abs(l.exponent); ++i) {
      if (l.exponent > 0) {
        for (int r : image) out.push_back({r, 1});
      } else {
        for (auto it = image.rbegin(); it != image.rend(); ++it) out.push_back({*it, -1});
      }
    }
  }
  return out;
}

GroupElement crisp_embed(const DihedralContext& ctx, const DihedralElement& a,
                         const BraidContext& target) {
  if (target.n != ctx.m - 1) {
    throw ContextMismatch("embedding of " + ctx.model->name() + " targets B_" +
                          std::to_string(ctx.m) + ", got " + target.model->name());
  }
  std::vector<int> positive, omega_image;
  for (int l : a.word.letters()) {
    const auto image = crisp_image(ctx.m, l);
    positive.insert(positive.end(), image.begin(), image.end());
  }
  for (int l : alternating(kS, ctx.m)) {
    const auto image = crisp_image(ctx.m, l);
    omega_image.insert(omega_image.end(), image.begin(), image.end());
  }
  return multiply(to_group(greedy_normalize(target.model, positive)),
                  power(to_group(greedy_normalize(target.model, omega_image)), a.power));
}

}  // namespace garside

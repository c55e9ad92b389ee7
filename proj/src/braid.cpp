#include "garside/braid.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace garside {

namespace {

constexpr int kBits = 4;

int entry(std::uint64_t code, int j) { return static_cast<int>((code >> (kBits * j)) & 0xF); }

std::uint64_t with_entry(std::uint64_t code, int j, int v) {
  const std::uint64_t mask = std::uint64_t{0xF} << (kBits * j);
  return (code & ~mask) | (static_cast<std::uint64_t>(v) << (kBits * j));
}

std::uint64_t swap_positions(std::uint64_t code, int i) {
  const int a = entry(code, i), b = entry(code, i + 1);
  return with_entry(with_entry(code, i, b), i + 1, a);
}

}  // namespace

BraidModel::BraidModel(int n) : Model("A" + std::to_string(n)), n_(n) {
  if (n < 1 || n > kMaxGenerators) {
    throw std::invalid_argument("braid model needs 1 <= n <= " + std::to_string(kMaxGenerators));
  }
}

std::string BraidModel::atom_name(int atom) const { return "s" + std::to_string(atom + 1); }

bool BraidModel::is_parabolic_subset(AtomMask atoms) const {
  if (atoms == 0) return false;
  // consecutive bits only
  const AtomMask shifted = atoms >> std::countr_zero(atoms);
  return (shifted & (shifted + 1)) == 0;
}

Simple BraidModel::identity() const {
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) code = with_entry(code, j, j);
  return {code};
}

Simple BraidModel::omega() const {
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) code = with_entry(code, j, n_ - j);
  return {code};
}

Simple BraidModel::atom(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("braid generator out of range");
  return {swap_positions(identity().code, i)};
}

int BraidModel::length(Simple x) const {
  int inv = 0;
  for (int i = 0; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (entry(x.code, i) > entry(x.code, j)) ++inv;
  return inv;
}

AtomMask BraidModel::right_descents(Simple x) const {
  AtomMask mask = 0;
  for (int i = 0; i < n_; ++i)
    if (entry(x.code, i) > entry(x.code, i + 1)) mask |= atom_bit(i);
  return mask;
}

AtomMask BraidModel::left_descents(Simple x) const {
  return right_descents(reverse(x));
}

Simple BraidModel::product(Simple x, Simple y) const {
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) code = with_entry(code, j, entry(x.code, entry(y.code, j)));
  return {code};
}

Simple BraidModel::right_quotient(Simple x, Simple y) const { return product(x, reverse(y)); }

Simple BraidModel::left_quotient(Simple x, Simple y) const { return product(reverse(y), x); }

Simple BraidModel::reverse(Simple x) const {
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) code = with_entry(code, entry(x.code, j), j);
  return {code};
}

std::vector<int> BraidModel::word(Simple x) const {
  std::vector<int> out;
  std::uint64_t code = x.code;
  for (;;) {
    const AtomMask d = right_descents({code});
    if (d == 0) break;
    const int i = std::countr_zero(d);
    out.push_back(i);
    code = swap_positions(code, i);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Simple BraidModel::omega_conjugate(Simple x, int k) const {
  if (k % 2 == 0) return x;
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) code = with_entry(code, j, n_ - entry(x.code, n_ - j));
  return {code};
}

std::vector<int> BraidModel::permutation(Simple x) const {
  std::vector<int> out(static_cast<std::size_t>(n_ + 1));
  for (int j = 0; j <= n_; ++j) out[static_cast<std::size_t>(j)] = entry(x.code, j);
  return out;
}

Simple BraidModel::from_permutation(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_ + 1) throw std::invalid_argument("wrong permutation size");
  std::vector<bool> seen(perm.size());
  std::uint64_t code = 0;
  for (int j = 0; j <= n_; ++j) {
    const int v = perm[static_cast<std::size_t>(j)];
    if (v < 0 || v > n_ || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
    code = with_entry(code, j, v);
  }
  return {code};
}

BraidContext make_braid_context(int n) {
  BraidContext ctx;
  ctx.n = n;
  ctx.braid = std::make_shared<BraidModel>(n);
  ctx.model = ctx.braid;
  ctx.omega = omega_element(ctx.model);
  ctx.delta = delta_element(ctx.model);
  if (n >= 2) {
    const AtomMask all = (AtomMask{1} << n) - 1;
    ctx.structure = make_structure(ctx.model, all & ~atom_bit(n - 1), all & ~atom_bit(0), 1);
    ctx.delta1 = ctx.structure.g1.delta;
    ctx.lambda = ctx.structure.h.delta;
    ctx.theta = ctx.structure.theta;
  }
  return ctx;
}

BraidContext crisp_target_context(int m) {
  if (m < 4) throw std::invalid_argument("embedding target needs m >= 4");
  return make_braid_context(m - 1);
}

NormalForm rev(const NormalForm& a) { return reverse(a); }

GroupElement flip(const GroupElement& alpha) { return omega_conjugate(alpha, 1); }

Sign breadth_sign(const NormalForm& a, int k, const BraidContext& ctx) {
  if (k < 1) throw std::invalid_argument("breadth_sign needs k >= 1");
  const int bh = alternating_form(a, ctx.structure).breadth;
  if (k >= std::max(1, bh - 1)) return Sign::Negative;
  const GroupElement g = multiply(omega_group_element(ctx.model, -k), to_group(a));
  const auto [num, den] = orthogonal_form(g);
  if (in_parabolic(num, ctx.structure.g1) && in_parabolic(den, ctx.structure.g1)) {
    return Sign::InG1;
  }
  return Sign::Positive;
}

}  // namespace garside

#include "garside/model.hpp"

#include <bit>

namespace garside {

namespace {

int lowest_atom(AtomMask mask) { return std::countr_zero(mask); }

}  // namespace

// Common right divisors of x and y that are multiples of an atom a are
// exactly (common divisors of xa⁻¹ and ya⁻¹)·a, so atoms can be stripped one
// at a time.
Simple Model::right_meet(Simple x, Simple y) const {
  Simple acc = identity();
  for (;;) {
    const AtomMask common = right_descents(x) & right_descents(y);
    if (common == 0) return acc;
    const Simple a = atom(lowest_atom(common));
    x = right_quotient(x, a);
    y = right_quotient(y, a);
    acc = product(a, acc);
  }
}

Simple Model::left_meet(Simple x, Simple y) const {
  Simple acc = identity();
  for (;;) {
    const AtomMask common = left_descents(x) & left_descents(y);
    if (common == 0) return acc;
    const Simple a = atom(lowest_atom(common));
    x = left_quotient(x, a);
    y = left_quotient(y, a);
    acc = product(acc, a);
  }
}

// x ↦ left_complement(x) reverses ≤_R into ≤_L on Div(Ω).
Simple Model::right_join(Simple x, Simple y) const {
  return right_complement(left_meet(left_complement(x), left_complement(y)));
}

Simple Model::omega_conjugate(Simple x, int k) const {
  const int order = omega_conjugation_order();
  k %= order;
  if (k < 0) k += order;
  for (int i = 0; i < k; ++i) x = left_complement(left_complement(x));
  return x;
}

AtomMask Model::support(Simple x) const {
  AtomMask mask = 0;
  for (int a : word(x)) mask |= atom_bit(a);
  return mask;
}

}  // namespace garside

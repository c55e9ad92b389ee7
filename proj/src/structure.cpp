#include "garside/structure.hpp"

namespace garside {

DehornoyStructureSpec make_structure(const ModelPtr& model, AtomMask h_atoms, AtomMask g1_atoms,
                                     int zeta) {
  const AtomMask all = (AtomMask{1} << model->num_atoms()) - 1;
  if (h_atoms == all || g1_atoms == all) throw StructureError("H and G1 must be proper parabolics");
  if ((h_atoms | g1_atoms) != all) throw StructureError("N ∪ M1 does not generate the monoid");
  if (zeta < 1) throw StructureError("zeta must be positive");

  DehornoyStructureSpec spec;
  spec.model = model;
  spec.h = make_parabolic(model, h_atoms);
  spec.g1 = make_parabolic(model, g1_atoms);
  spec.zeta = zeta;

  const NormalForm delta = delta_element(model);
  for (int i = 0; i < model->num_atoms(); ++i) {
    const NormalForm s = atom_element(model, i);
    if (!(multiply(s, delta) == multiply(delta, s))) throw StructureError("Δ is not central");
    if (spec.g1.contains_atom(i) &&
        !(multiply(s, spec.g1.delta) == multiply(spec.g1.delta, s))) {
      throw StructureError("Δ1 is not central in G1");
    }
  }
  const auto theta = divide_right(delta, spec.g1.delta);
  if (!theta) throw StructureError("Δ1 does not right-divide Δ");
  spec.theta = *theta;
  return spec;
}

AlternatingForm alternating_form(const NormalForm& a, const DehornoyStructureSpec& spec) {
  return alternating_form(a, spec.h, spec.g1);
}

int depth(const NormalForm& a, const DehornoyStructureSpec& spec) {
  return alternating_form(a, spec).depth;
}

bool in_m1(const NormalForm& a, const DehornoyStructureSpec& spec) {
  return in_parabolic(a, spec.g1);
}

// a = θ^k a0 forces a0 = τ_{M1}(a), so only the quotient needs checking.
std::optional<ThetaDecomposition> theta_decompose(const NormalForm& a,
                                                  const DehornoyStructureSpec& spec) {
  NormalForm a0 = tail(a, spec.g1);
  NormalForm rest = *divide_right(a, a0);
  int k = 0;
  while (!rest.is_identity()) {
    auto q = divide_right(rest, spec.theta);
    if (!q) return std::nullopt;
    rest = std::move(*q);
    ++k;
  }
  if (k == 0) return std::nullopt;
  return ThetaDecomposition{k, std::move(a0)};
}

bool in_theta(const NormalForm& a, const DehornoyStructureSpec& spec) {
  return theta_decompose(a, spec).has_value();
}

bool in_theta_bar(const NormalForm& a, const DehornoyStructureSpec& spec) {
  return in_m1(a, spec) || in_theta(a, spec);
}

}  // namespace garside

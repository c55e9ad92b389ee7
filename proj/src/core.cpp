#include "garside/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace garside {

namespace {

const Model& model_of(const NormalForm& a) {
  if (!a.model()) throw std::invalid_argument("element has no model");
  return *a.model();
}

// a·d⁻¹ for a simple d with d ≤_R a.
NormalForm strip_right(const NormalForm& a, Simple d) {
  const Model& m = model_of(a);
  std::vector<Simple> factors = a.factors();
  const Simple last = factors.back();
  factors.pop_back();
  NormalForm out = NormalForm::from_greedy_factors(a.model(), std::move(factors));
  out.append(m.right_quotient(last, d));
  return out;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void require_same_model(const Model& a, const Model& b) {
  if (!same_model(a, b)) {
    throw ContextMismatch("elements of different groups: " + a.name() + " and " + b.name());
  }
}

NormalForm greedy_normalize(const ModelPtr& model, std::span<const int> word) {
  NormalForm out(model);
  for (int a : word) {
    if (a < 0 || a >= model->num_atoms()) {
      throw std::out_of_range("unknown atom " + std::to_string(a) + " for " + model->name());
    }
    out.append(model->atom(a));
  }
  return out;
}

NormalForm atom_element(const ModelPtr& model, int atom) {
  const int w[] = {atom};
  return greedy_normalize(model, w);
}

NormalForm omega_element(const ModelPtr& model, int power) {
  return NormalForm::from_greedy_factors(model, std::vector<Simple>(power, model->omega()));
}

NormalForm delta_element(const ModelPtr& model, int power) {
  return omega_element(model, power * model->delta_exponent());
}

NormalForm multiply(const NormalForm& u, const NormalForm& v) {
  require_same_model(model_of(u), model_of(v));
  NormalForm out = u;
  for (Simple x : v.factors()) out.append(x);
  return out;
}

NormalForm product(const ModelPtr& model, std::span<const NormalForm> factors) {
  NormalForm out(model);
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

// Any common simple right divisor divides both last factors; strip their
// meet and recurse on the quotients.
NormalForm right_gcd(const NormalForm& u, const NormalForm& v) {
  require_same_model(model_of(u), model_of(v));
  const Model& m = *u.model();
  NormalForm a = u, b = v;
  std::vector<Simple> stripped;
  while (!a.is_identity() && !b.is_identity()) {
    const Simple d = m.right_meet(a.factors().back(), b.factors().back());
    if (m.is_identity(d)) break;
    a = strip_right(a, d);
    b = strip_right(b, d);
    stripped.push_back(d);
  }
  std::reverse(stripped.begin(), stripped.end());
  return NormalForm::from_simples(u.model(), stripped);
}

NormalForm left_gcd(const NormalForm& u, const NormalForm& v) {
  return reverse(right_gcd(reverse(u), reverse(v)));
}

// With D = Δ^N central and both u, v ≤_R D, the map c ↦ D·c⁻¹ turns common
// right multiples of u and v below D into common left divisors of D·u⁻¹ and
// D·v⁻¹, reversing the order.
NormalForm right_lcm(const NormalForm& u, const NormalForm& v) {
  require_same_model(model_of(u), model_of(v));
  const ModelPtr& model = u.model();
  const int e = model->delta_exponent();
  const int n = std::max((u.sup() + e - 1) / e, (v.sup() + e - 1) / e);
  const GroupElement d = delta_group_element(model, n);
  const auto co_u = multiply(d, inverse(to_group(u))).to_positive();
  const auto co_v = multiply(d, inverse(to_group(v))).to_positive();
  if (!co_u || !co_v) throw std::logic_error("right_lcm: element does not divide Δ^N");
  const NormalForm g = left_gcd(*co_u, *co_v);
  const auto lcm = multiply(inverse(to_group(g)), d).to_positive();
  if (!lcm) throw std::logic_error("right_lcm: complement is not positive");
  return *lcm;
}

std::optional<NormalForm> divide_right(const NormalForm& a, const NormalForm& b) {
  require_same_model(model_of(a), model_of(b));
  const Model& m = *a.model();
  NormalForm rest = a;
  const auto& bf = b.factors();
  for (auto it = bf.rbegin(); it != bf.rend(); ++it) {
    if (rest.is_identity() || !m.right_divides(*it, rest.factors().back())) return std::nullopt;
    rest = strip_right(rest, *it);
  }
  return rest;
}

std::optional<NormalForm> divide_left(const NormalForm& a, const NormalForm& b) {
  require_same_model(model_of(a), model_of(b));
  return multiply(inverse(to_group(b)), to_group(a)).to_positive();
}

bool right_divides(const NormalForm& b, const NormalForm& a) {
  return divide_right(a, b).has_value();
}

NormalForm reverse(const NormalForm& a) {
  const Model& m = model_of(a);
  std::vector<Simple> rev;
  rev.reserve(a.factors().size());
  for (auto it = a.factors().rbegin(); it != a.factors().rend(); ++it) rev.push_back(m.reverse(*it));
  return NormalForm::from_simples(a.model(), rev);
}

NormalForm omega_conjugate(const NormalForm& a, int k) {
  const Model& m = model_of(a);
  std::vector<Simple> out;
  out.reserve(a.factors().size());
  for (Simple x : a.factors()) out.push_back(m.omega_conjugate(x, k));
  return NormalForm::from_greedy_factors(a.model(), std::move(out));
}

bool is_unmovable(const NormalForm& a) { return a.inf() < model_of(a).delta_exponent(); }

bool is_omega_unmovable(const NormalForm& a) { return a.inf() == 0; }

int canonical_length_delta(const NormalForm& a) {
  const int e = model_of(a).delta_exponent();
  return (a.sup() + e - 1) / e;
}

NormalForm complement(const NormalForm& a) {
  if (!is_unmovable(a)) throw std::invalid_argument("complement: element is not unmovable");
  const int p = canonical_length_delta(a);
  const auto c = multiply(inverse(to_group(a)), delta_group_element(a.model(), p)).to_positive();
  if (!c) throw std::logic_error("complement: a does not divide Δ^lg(a)");
  return *c;
}

GroupElement to_group(const NormalForm& a) { return GroupElement(a, 0); }

GroupElement atom_group_element(const ModelPtr& model, int atom, int exponent) {
  if (atom < 0 || atom >= model->num_atoms()) {
    throw std::out_of_range("unknown atom " + std::to_string(atom) + " for " + model->name());
  }
  GroupElement one(model);
  if (exponent >= 0) return power(to_group(atom_element(model, atom)), exponent);
  // s⁻¹ = rc(s)·Ω⁻¹
  NormalForm rc(model);
  rc.append(model->right_complement(model->atom(atom)));
  return power(GroupElement(rc, -1), -exponent);
}

GroupElement omega_group_element(const ModelPtr& model, long power) {
  return GroupElement(NormalForm(model), power);
}

GroupElement delta_group_element(const ModelPtr& model, long power) {
  return omega_group_element(model, power * model->delta_exponent());
}

GroupElement from_letters(const ModelPtr& model, std::span<const Letter> word) {
  GroupElement out(model);
  for (const Letter& l : word) out = multiply(out, atom_group_element(model, l.atom, l.exponent));
  return out;
}

// (x·Ω^q)(y·Ω^r) = x·τ^q(y)·Ω^{q+r} with τ = conjugation by Ω.
GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  require_same_model(*g.model(), *h.model());
  const Model& m = *g.model();
  const int q = static_cast<int>(g.omega_power() % std::max(1, m.omega_conjugation_order()));
  NormalForm prod = g.part();
  for (Simple y : h.part().factors()) prod.append(m.omega_conjugate(y, q));
  return GroupElement(std::move(prod), g.omega_power() + h.omega_power());
}

// (u_p ⋯ u_1·Ω^q)⁻¹ = Ω^{-q}·rc(u_1)Ω⁻¹·rc(u_2)Ω⁻¹ ⋯ rc(u_p)Ω⁻¹, with the
// negative Ω-powers pushed to the right.
GroupElement inverse(const GroupElement& g) {
  const Model& m = *g.model();
  const auto& f = g.part().factors();
  const long p = static_cast<long>(f.size());
  const long q = g.omega_power();
  const int order = std::max(1, m.omega_conjugation_order());
  NormalForm acc(g.model());
  for (long i = 0; i < p; ++i) {
    const Simple u = f[static_cast<std::size_t>(p - 1 - i)];
    const int shift = static_cast<int>((-(i + q)) % order);
    acc.append(m.omega_conjugate(m.right_complement(u), shift));
  }
  return GroupElement(std::move(acc), -q - p);
}

GroupElement power(const GroupElement& g, long k) {
  GroupElement base = k >= 0 ? g : inverse(g);
  GroupElement out(g.model());
  for (long n = std::labs(k); n > 0; n >>= 1) {
    if (n & 1) out = multiply(out, base);
    if (n > 1) base = multiply(base, base);
  }
  return out;
}

GroupElement omega_conjugate(const GroupElement& g, int k) {
  return GroupElement(omega_conjugate(g.part(), k), g.omega_power());
}

SignedWord to_letters(const GroupElement& g) {
  const Model& m = *g.model();
  SignedWord out;
  for (int a : g.part().word()) out.push_back({a, 1});
  const auto omega_word = m.word(m.omega());
  for (long i = 0; i < std::labs(g.omega_power()); ++i) {
    if (g.omega_power() > 0) {
      for (int a : omega_word) out.push_back({a, 1});
    } else {
      for (auto it = omega_word.rbegin(); it != omega_word.rend(); ++it) out.push_back({*it, -1});
    }
  }
  return out;
}

std::pair<NormalForm, NormalForm> orthogonal_form(const GroupElement& g) {
  if (g.omega_power() >= 0) return {*g.to_positive(), NormalForm(g.model())};
  const NormalForm denominator = omega_element(g.model(), static_cast<int>(-g.omega_power()));
  const NormalForm d = right_gcd(g.part(), denominator);
  return {*divide_right(g.part(), d), *divide_right(denominator, d)};
}

DeltaForm delta_form(const GroupElement& g) {
  const Model& m = *g.model();
  const long e = m.delta_exponent();
  const long k = floor_div(g.omega_power(), e);
  const long r = g.omega_power() - e * k;
  NormalForm unmovable = g.part();
  for (long i = 0; i < r; ++i) unmovable.append(m.omega());
  return {std::move(unmovable), k};
}

GroupElement recompose(const DeltaForm& form) {
  return GroupElement(form.unmovable, form.power * form.unmovable.model()->delta_exponent());
}

ParabolicSet make_parabolic(const ModelPtr& model, AtomMask atoms) {
  const AtomMask all = (AtomMask{1} << model->num_atoms()) - 1;
  if (atoms == 0 || (atoms & ~all) != 0 || !model->is_parabolic_subset(atoms)) {
    throw ParabolicError("atom set is not a standard parabolic of " + model->name());
  }
  Simple omega = model->identity();
  for (int i = 0; i < model->num_atoms(); ++i) {
    if (atoms & atom_bit(i)) omega = model->right_join(omega, model->atom(i));
  }
  ParabolicSet out;
  out.atoms = atoms;
  out.omega = omega;
  out.delta = NormalForm::from_simples(
      model, std::vector<Simple>(static_cast<std::size_t>(model->delta_exponent()), omega));
  return out;
}

bool in_parabolic(const NormalForm& a, const ParabolicSet& n) {
  const Model& m = model_of(a);
  for (Simple x : a.factors()) {
    if ((m.support(x) & ~n.atoms) != 0) return false;
  }
  return true;
}

// d = (a ∧_R Ω) ∧_R Ω_N is the greatest simple of N right-dividing a, and
// τ_N(a·d⁻¹) = τ_N(a)·d⁻¹, so stripping until nothing is left yields τ_N(a).
NormalForm tail(const NormalForm& a, const ParabolicSet& n) {
  const Model& m = model_of(a);
  require_same_model(m, *n.model());
  NormalForm rest = a;
  std::vector<Simple> stripped;
  while (!rest.is_identity()) {
    const Simple d = m.right_meet(rest.factors().back(), n.omega);
    if (m.is_identity(d)) break;
    rest = strip_right(rest, d);
    stripped.push_back(d);
  }
  std::reverse(stripped.begin(), stripped.end());
  return NormalForm::from_simples(a.model(), stripped);
}

AlternatingForm alternating_form(const NormalForm& a, const ParabolicSet& n2,
                                 const ParabolicSet& n1) {
  const Model& m = model_of(a);
  const AtomMask all = (AtomMask{1} << m.num_atoms()) - 1;
  if ((n1.atoms | n2.atoms) != all) {
    throw ParabolicError("alternating form: N2 ∪ N1 does not generate the monoid");
  }
  AlternatingForm out;
  NormalForm rest = a;
  for (int i = 1;; ++i) {
    const ParabolicSet& n = (i % 2 == 1) ? n1 : n2;
    NormalForm t = tail(rest, n);
    if (i >= 2 && t.is_identity()) throw std::logic_error("alternating form: empty inner factor");
    rest = *divide_right(rest, t);
    out.factors.push_back(std::move(t));
    if (rest.is_identity()) break;
  }
  std::reverse(out.factors.begin(), out.factors.end());
  out.breadth = static_cast<int>(out.factors.size());
  out.depth = out.breadth % 2 == 1 ? (out.breadth - 1) / 2 : out.breadth / 2;
  return out;
}

}  // namespace garside

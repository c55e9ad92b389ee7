// Instantiates the depth lemmas over enumerated elements.

#include <sstream>

#include "garside/verifier.hpp"

namespace garside {

namespace {

struct Checker {
  CheckReport& report;

  void expect(bool ok, const std::string& lemma, const std::string& instance,
              const std::string& detail) {
    ++report.instances;
    ++report.coverage[lemma];
    if (!ok) report.fail(lemma + ": " + instance, detail);
  }
};

std::string eq_detail(long got, long want) {
  return "got " + std::to_string(got) + ", expected " + std::to_string(want);
}

NormalForm theta_power(const DehornoyStructureSpec& spec, int k) {
  NormalForm out(spec.model);
  for (int i = 0; i < k; ++i) out = multiply(out, spec.theta);
  return out;
}

std::vector<NormalForm> filter(const std::vector<NormalForm>& xs, auto pred) {
  std::vector<NormalForm> out;
  for (const auto& x : xs)
    if (pred(x)) out.push_back(x);
  return out;
}

void theta_identities(const DehornoyStructureSpec& spec, const EnumerationBudget& budget, Checker& c) {
  const ModelPtr& model = spec.model;
  const auto positives = enumerate_positive(model, budget.max_length);
  const auto m1 = filter(positives, [&](const NormalForm& a) { return in_m1(a, spec); });
  const int kmax = std::min(budget.max_power, 3);

  for (const NormalForm& a : m1) {
    const std::string inst = to_string(a);
    c.expect(right_gcd(spec.theta, a).is_identity(), "theta coprime to M1", inst, "θ ∧_R a != 1");
    const NormalForm ta = multiply(spec.theta, a);
    c.expect(right_lcm(spec.theta, a) == ta && multiply(a, spec.theta) == ta, "theta lcm with M1", inst,
             "θ ∨_R a = " + to_string(right_lcm(spec.theta, a)) + ", θa = " + to_string(ta));
  }

  std::vector<NormalForm> thetas;  // θ^k a0
  for (int k = 1; k <= kmax; ++k) {
    const NormalForm tk = theta_power(spec, k);
    for (const NormalForm& a0 : m1) {
      const NormalForm a = multiply(tk, a0);
      thetas.push_back(a);
      const std::string inst = "θ^" + std::to_string(k) + " · " + to_string(a0);
      c.expect(depth(a, spec) == spec.zeta * k + 1, "theta depth", inst,
               eq_detail(depth(a, spec), spec.zeta * k + 1));
      const auto dec = theta_decompose(a, spec);
      c.expect(dec && dec->k == k && dec->a0 == a0, "theta decomposition", inst,
               dec ? "k " + std::to_string(dec->k) + ", a0 " + to_string(dec->a0) : "none");
      c.expect(is_unmovable(a) == !right_divides(spec.g1.delta, a0), "theta unmovable iff a0 unmovable in M1", inst,
               std::string("unmovable ") + (is_unmovable(a) ? "yes" : "no"));
    }
  }

  std::vector<NormalForm> unmovable = filter(positives, [](const NormalForm& a) { return is_unmovable(a); });
  for (const NormalForm& a : thetas)
    if (is_unmovable(a)) unmovable.push_back(a);
  for (const NormalForm& a : unmovable) {
    const NormalForm ca = complement(a);
    c.expect(in_theta_bar(a, spec) == in_theta_bar(ca, spec), "complement preserves closed theta set", to_string(a),
             "com(a) = " + to_string(ca));
  }

  // α = x y⁻¹ with x, y ∈ M1 and α ∉ M1.
  const int half = std::max(1, budget.max_length / 2);
  const auto small_m1 = filter(m1, [&](const NormalForm& a) { return a.word_length() <= half; });
  for (const NormalForm& x : small_m1) {
    for (const NormalForm& y : small_m1) {
      const GroupElement alpha = multiply(to_group(x), inverse(to_group(y)));
      if (alpha.to_positive()) continue;
      const DeltaForm df = delta_form(alpha);
      const auto dec = theta_decompose(df.unmovable, spec);
      c.expect(df.power <= -1 && dec && dec->k == -df.power, "M1 quotient has theta delta-form",
               to_string(x) + " · (" + to_string(y) + ")^-1",
               "Δ-form " + to_string(df.unmovable) + " Δ^" + std::to_string(df.power));
    }
  }

  std::vector<NormalForm> closed = m1;
  closed.insert(closed.end(), thetas.begin(), thetas.end());
  const auto outside = filter(positives, [&](const NormalForm& b) { return !in_theta_bar(b, spec); });
  for (const NormalForm& a : closed) {
    if (a.word_length() > budget.max_length) continue;
    for (const NormalForm& b : outside) {
      const bool ok = !in_theta_bar(multiply(a, b), spec) && !in_theta_bar(multiply(b, a), spec);
      c.expect(ok, "outside factor leaves closed theta set", to_string(a) + ", " + to_string(b), "product in the closed theta set");
    }
  }
}

}  // namespace

CheckReport check_lemma_suite(const BraidContext& ctx, const EnumerationBudget& budget) {
  CheckReport report;
  report.name = "lemma suite on " + ctx.model->name();
  Checker c{report};
  const DehornoyStructureSpec& spec = ctx.structure;
  theta_identities(spec, budget, c);

  const auto positives = enumerate_positive(ctx.model, budget.max_length);
  const auto m1 = filter(positives, [&](const NormalForm& a) { return in_m1(a, spec); });
  const auto not_m1 = filter(positives, [&](const NormalForm& a) { return !in_m1(a, spec); });

  for (const NormalForm& a : positives) {
    c.expect(depth(rev(a), spec) == depth(a, spec), "depth under rev", to_string(a),
             eq_detail(depth(rev(a), spec), depth(a, spec)));
  }
  for (const NormalForm& a : not_m1) {
    NormalForm at = a;
    for (int k = 1; k <= 2; ++k) {
      at = multiply(at, ctx.theta);
      c.expect(depth(at, spec) == depth(a, spec) + k, "theta adds one depth", to_string(a) + " θ^" + std::to_string(k),
               eq_detail(depth(at, spec), depth(a, spec) + k));
    }
  }
  for (const NormalForm& a : m1) {
    for (const NormalForm& b : not_m1) {
      const int db = depth(b, spec);
      c.expect(depth(multiply(a, b), spec) == db && depth(multiply(b, a), spec) == db, "M1 factor keeps depth",
               to_string(a) + ", " + to_string(b), "depth of ab or ba differs from dpt(b)");
    }
  }
  std::vector<NormalForm> thetas;
  for (int k = 1; k <= 2; ++k) {
    for (const NormalForm& a0 : m1) {
      if (a0.word_length() > 2) continue;
      thetas.push_back(multiply(theta_power(spec, k), a0));
    }
  }
  for (const NormalForm& a : thetas) {
    const int da = depth(a, spec);
    for (const NormalForm& b : not_m1) {
      const int want = da + depth(b, spec) - 1;
      c.expect(depth(multiply(a, b), spec) == want && depth(multiply(b, a), spec) == want, "theta factor adds depth minus one",
               to_string(a) + ", " + to_string(b), "expected " + std::to_string(want));
    }
  }
  std::vector<NormalForm> candidates = positives;
  candidates.insert(candidates.end(), thetas.begin(), thetas.end());
  for (const NormalForm& a : candidates) {
    for (int k = 0; k <= budget.max_power; ++k) {
      const GroupElement g = multiply(to_group(a), delta_group_element(ctx.model, -k));
      if (!parabolic_member(g, spec.g1)) continue;
      c.expect(in_theta_bar(a, spec), "G1 times delta power lies in closed theta set", to_string(a) + " Δ^-" + std::to_string(k),
               "a is not in the closed theta set");
    }
  }
  return report;
}

namespace {

struct Blocks {
  int dpt = 0;
  bool trivial = true;
  int first = kS;
  int last = kS;
};

// Depth via the alternating form, letters via the block word; the two
// representations are also checked against each other.
Blocks inspect(const DihedralContext& ctx, const NormalForm& a, Checker& c) {
  Blocks out;
  out.dpt = depth(a, ctx.structure);
  const DihedralElement d = from_group(ctx, to_group(a));
  if (d.power == 0) {
    c.expect(d.word.depth() == out.dpt, "block depth = alternating depth", to_string(a),
             eq_detail(d.word.depth(), out.dpt));
    if (!d.word.is_identity()) {
      out.trivial = false;
      std::tie(out.first, out.last) = first_last_letters(d);
    }
  }
  return out;
}

std::vector<NormalForm> simples_of(const DihedralContext& ctx) {
  std::vector<NormalForm> out;
  for (int first : {kS, kT}) {
    for (int len = 0; len <= ctx.m; ++len) {
      if ((len == 0 || len == ctx.m) && first == kT) continue;
      out.push_back(NormalForm::from_simples(ctx.model, std::vector<Simple>{ctx.dihedral->make(first, len)}));
    }
  }
  return out;
}

}  // namespace

CheckReport check_lemma_suite(const DihedralContext& ctx, const EnumerationBudget& budget) {
  CheckReport report;
  report.name = "lemma suite on " + ctx.model->name();
  Checker c{report};
  const DehornoyStructureSpec& spec = ctx.structure;
  theta_identities(spec, budget, c);

  const auto ou = enumerate_omega_unmovable(ctx.model, budget.max_length);
  std::vector<Blocks> info;
  for (const NormalForm& a : ou) info.push_back(inspect(ctx, a, c));

  const std::string one = "depth of unmovable product";
  for (std::size_t i = 0; i < ou.size(); ++i) {
    for (std::size_t j = 0; j < ou.size(); ++j) {
      const NormalForm ab = multiply(ou[i], ou[j]);
      if (!is_omega_unmovable(ab)) continue;
      const bool drop = !info[i].trivial && !info[j].trivial && info[i].last == kS && info[j].first == kS;
      const int want = info[i].dpt + info[j].dpt - (drop ? 1 : 0);
      const int got = depth(ab, spec);
      c.expect(got == want, one, to_string(ou[i]) + ", " + to_string(ou[j]), eq_detail(got, want));
    }
  }

  const auto simples = simples_of(ctx);
  for (const NormalForm& a : simples) {
    const NormalForm b = *divide_left(ctx.omega, a);
    if (ctx.even) {
      c.expect(depth(a, spec) + depth(b, spec) == ctx.k, "depth of simple and complement, even m", to_string(a),
               eq_detail(depth(a, spec) + depth(b, spec), ctx.k));
      continue;
    }
    if (a.is_identity() || b.is_identity()) continue;
    const Blocks ia = inspect(ctx, a, c);
    const int want = ia.first == kS ? ctx.k + 1 : ctx.k;
    c.expect(depth(a, spec) + depth(b, spec) == want, "depth of simple and complement, odd m", to_string(a),
             eq_detail(depth(a, spec) + depth(b, spec), want));
    // a·φ(b') = Ω with b' = φ(a⁻¹Ω)
    const NormalForm b2 = omega_conjugate(b, 1);
    const int want5 = ia.last == kS ? ctx.k + 1 : ctx.k;
    c.expect(depth(a, spec) + depth(b2, spec) == want5, "depth of simple and twisted complement", to_string(a),
             eq_detail(depth(a, spec) + depth(b2, spec), want5));
  }
  if (ctx.even) return report;

  for (std::size_t i = 0; i < ou.size(); ++i) {
    const NormalForm& cc = ou[i];
    const Blocks& b = info[i];
    const NormalForm fc = omega_conjugate(cc, 1);
    const DihedralElement swapped = phi(from_group(ctx, to_group(cc)));
    c.expect(from_group(ctx, to_group(fc)) == swapped, "phi is conjugation by W", to_string(cc),
             "W c W^-1 = " + to_string(fc));
    int want = b.dpt;
    if (!b.trivial && b.first == kT && b.last == kT) want = b.dpt + 1;
    if (!b.trivial && b.first == kS && b.last == kS) want = b.dpt - 1;
    c.expect(depth(fc, spec) == want, "depth under W conjugation", to_string(cc), eq_detail(depth(fc, spec), want));
    const NormalForm cw = multiply(cc, ctx.omega);
    const int want4 = (!b.trivial && b.last == kS) ? b.dpt + ctx.k - 1 : b.dpt + ctx.k;
    c.expect(depth(cw, spec) == want4, "depth of c W", to_string(cc), eq_detail(depth(cw, spec), want4));
  }

  // All nontrivial proper simples a1, a2.
  for (const NormalForm& a1 : simples) {
    if (a1.is_identity() || a1 == ctx.omega) continue;
    const NormalForm b1 = *divide_left(ctx.omega, a1);
    for (const NormalForm& a2 : simples) {
      if (a2.is_identity() || a2 == ctx.omega) continue;
      const NormalForm b2 = omega_conjugate(*divide_left(ctx.omega, a2), 1);
      const Blocks x1 = inspect(ctx, a1, c), x2 = inspect(ctx, a2, c);
      const Blocks y1 = inspect(ctx, b1, c), y2 = inspect(ctx, b2, c);
      if (x1.first != x2.last || y1.last != y2.first) continue;
      const int u = (x1.first == kS) + (x2.first == kS);
      const int v = (y1.last == kS) + (y2.last == kS);
      const int sum = x1.dpt + x2.dpt + y1.dpt + y2.dpt;
      c.expect(sum == 2 * ctx.k - 1 + u + v, "depth of two simples and complements", to_string(a1) + ", " + to_string(a2),
               eq_detail(sum, 2 * ctx.k - 1 + u + v));
    }
  }
  return report;
}

}  // namespace garside

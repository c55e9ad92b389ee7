#include "garside/verifier.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace garside {

void CheckReport::merge(const CheckReport& other) {
  instances += other.instances;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  for (const auto& [key, count] : other.coverage) coverage[key] += count;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << name << ": " << (pass() ? "PASS" : "FAIL") << " (instances " << instances << ", failures "
     << failures.size() << ", seed " << seed << ")\n";
  for (const auto& [key, count] : coverage) os << "  coverage " << key << ": " << count << '\n';
  for (const auto& note : notes) os << "  " << note << '\n';
  for (const auto& f : failures) os << "  FAILED " << f.instance << "\n    " << f.trace << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<NormalForm> enumerate_positive(const ModelPtr& model, int max_length) {
  std::vector<NormalForm> all{NormalForm(model)};
  std::unordered_set<NormalForm, ElementHash> seen{all.front()};
  std::vector<NormalForm> layer = all;
  for (int len = 1; len <= max_length; ++len) {
    std::vector<NormalForm> next;
    for (const NormalForm& x : layer) {
      for (int a = 0; a < model->num_atoms(); ++a) {
        NormalForm y = x;
        y.append(model->atom(a));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

std::vector<NormalForm> enumerate_unmovable(const ModelPtr& model, int max_length) {
  std::vector<NormalForm> out;
  for (auto& a : enumerate_positive(model, max_length)) {
    if (is_unmovable(a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<NormalForm> enumerate_omega_unmovable(const ModelPtr& model, int max_length) {
  std::vector<NormalForm> out;
  for (auto& a : enumerate_positive(model, max_length)) {
    if (is_omega_unmovable(a)) out.push_back(std::move(a));
  }
  return out;
}

std::vector<GroupElement> enumerate_ball(const ModelPtr& model, int radius) {
  std::vector<GroupElement> letters;
  for (int a = 0; a < model->num_atoms(); ++a) {
    letters.push_back(atom_group_element(model, a, 1));
    letters.push_back(atom_group_element(model, a, -1));
  }
  std::vector<GroupElement> all{GroupElement(model)};
  std::unordered_set<GroupElement, ElementHash> seen{all.front()};
  std::vector<GroupElement> layer = all;
  for (int r = 1; r <= radius; ++r) {
    std::vector<GroupElement> next;
    for (const GroupElement& x : layer) {
      for (const GroupElement& l : letters) {
        GroupElement y = multiply(x, l);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return all;
}

SignedWord random_signed_word(const std::vector<int>& atoms, int max_length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(0, max_length);
  std::uniform_int_distribution<std::size_t> atom_dist(0, atoms.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  SignedWord w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) {
    const int a = atoms[atom_dist(rng)];
    w.push_back({a, sign_dist(rng) == 0 ? -1 : 1});
  }
  return w;
}

SignedWord random_signed_word(int num_atoms, int max_length, std::mt19937_64& rng) {
  std::vector<int> atoms(static_cast<std::size_t>(num_atoms));
  for (int i = 0; i < num_atoms; ++i) atoms[static_cast<std::size_t>(i)] = i;
  return random_signed_word(atoms, max_length, rng);
}

// ---------------------------------------------------------------------------
// Rewriting oracles

namespace {

Word alternating_word(int a, int b, int len) {
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? a : b);
  return w;
}

}  // namespace

std::vector<std::pair<Word, Word>> defining_relations(const Model& model) {
  std::vector<std::pair<Word, Word>> rels;
  const auto coxeter = [&](int i, int j) -> int {
    if (const auto* d = dynamic_cast<const DihedralModel*>(&model)) return d->m();
    if (dynamic_cast<const BraidModel*>(&model)) return std::abs(i - j) == 1 ? 3 : 2;
    throw std::invalid_argument("no presentation known for " + model.name());
  };
  for (int i = 0; i < model.num_atoms(); ++i) {
    for (int j = i + 1; j < model.num_atoms(); ++j) {
      const int m = coxeter(i, j);
      rels.emplace_back(alternating_word(i, j, m), alternating_word(j, i, m));
    }
  }
  return rels;
}

std::set<Word> rewriting_closure(const Word& w, const std::vector<std::pair<Word, Word>>& rels) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    const Word x = std::move(todo.front());
    todo.pop_front();
    for (const auto& [l, r] : rels) {
      for (int dir = 0; dir < 2; ++dir) {
        const Word& from = dir == 0 ? l : r;
        const Word& to = dir == 0 ? r : l;
        if (from.size() > x.size()) continue;
        for (std::size_t pos = 0; pos + from.size() <= x.size(); ++pos) {
          if (!std::equal(from.begin(), from.end(), x.begin() + static_cast<long>(pos))) continue;
          Word y = x;
          std::copy(to.begin(), to.end(), y.begin() + static_cast<long>(pos));
          if (seen.insert(y).second) todo.push_back(std::move(y));
        }
      }
    }
  }
  return seen;
}

NormalForm brute_force_tail(const NormalForm& a, const ParabolicSet& n) {
  const Model& model = *a.model();
  const auto rels = defining_relations(model);
  const std::set<Word> words = rewriting_closure(a.word(), rels);

  // Right divisors lying in N, grouped into equivalence classes.
  std::map<Word, std::set<Word>> classes;  // keyed by least word
  std::map<Word, Word> class_of;
  for (const Word& w : words) {
    for (std::size_t start = 0; start <= w.size(); ++start) {
      Word suffix(w.begin() + static_cast<long>(start), w.end());
      const bool inside = std::all_of(suffix.begin(), suffix.end(),
                                      [&](int x) { return n.contains_atom(x); });
      if (!inside || class_of.count(suffix)) continue;
      std::set<Word> cls = rewriting_closure(suffix, rels);
      const Word key = *cls.begin();
      for (const Word& v : cls) class_of[v] = key;
      classes.emplace(key, std::move(cls));
    }
  }

  // e ≤_R d iff some word for d ends with a word for e.
  const auto divides = [&](const Word& e, const Word& d) {
    const auto& ce = classes.at(e);
    for (const Word& v : classes.at(d)) {
      if (v.size() < e.size()) return false;
      if (ce.count(Word(v.end() - static_cast<long>(e.size()), v.end()))) return true;
    }
    return false;
  };
  std::vector<Word> maxima;
  for (const auto& [d, _] : classes) {
    bool is_max = true;
    for (const auto& [e, __] : classes) {
      if (!divides(e, d)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maxima.push_back(d);
  }
  if (maxima.size() != 1) {
    throw std::logic_error("brute_force_tail: no unique greatest divisor in N for " + to_string(a));
  }
  return greedy_normalize(a.model(), maxima.front());
}

// ---------------------------------------------------------------------------
// Traces

namespace {

std::string describe(const NormalForm& a, const DehornoyStructureSpec& spec) {
  const AlternatingForm af = alternating_form(a, spec);
  std::ostringstream os;
  os << to_string(a) << " [alt:";
  for (const auto& f : af.factors) os << ' ' << '(' << to_string(f) << ')';
  os << ", bh " << af.breadth << ", dpt " << af.depth << ']';
  return os.str();
}

std::string signed_text(const Model& model, const SignedWord& w) {
  return format_signed_word(model, w);
}

// A thrown error (e.g. a trichotomy violation) counts as a failed instance.
template <class F>
void guarded(CheckReport& report, const std::string& instance, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report.fail(instance, e.what());
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Conditions A and B

CheckReport check_condition_A(const DehornoyStructureSpec& spec, int max_power) {
  CheckReport report;
  report.name = "condition A on " + spec.model->name();
  std::ostringstream depths;
  depths << "depths";
  for (int k = 1; k <= max_power; ++k) {
    const NormalForm d = delta_element(spec.model, k);
    const int got = depth(d, spec);
    depths << ' ' << got;
    ++report.instances;
    if (got != spec.zeta * k + 1) {
      report.fail("Δ^" + std::to_string(k),
                  "dpt " + std::to_string(got) + ", expected ζk+1 = " +
                      std::to_string(spec.zeta * k + 1) + "; " + describe(d, spec));
    }
  }
  report.notes.push_back(depths.str());
  return report;
}

CheckReport check_condition_B(const DehornoyStructureSpec& spec, int max_length) {
  CheckReport report;
  report.name = "condition B on " + spec.model->name();
  const std::vector<NormalForm> u = enumerate_unmovable(spec.model, max_length);
  std::vector<int> dpt(u.size());
  std::vector<bool> theta(u.size()), theta_bar(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    dpt[i] = depth(u[i], spec);
    theta[i] = in_theta(u[i], spec);
    theta_bar[i] = theta[i] || in_m1(u[i], spec);
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (theta_bar[i] && theta_bar[j]) {
        ++report.coverage["skipped: both in closed theta set"];
        continue;
      }
      ++report.instances;
      const DeltaForm df = delta_form(to_group(multiply(u[i], u[j])));
      const int dc = depth(df.unmovable, spec);
      const long eps = dpt[i] + dpt[j] - spec.zeta * df.power - dc;
      const bool c_m1 = in_m1(df.unmovable, spec);
      if (theta[i]) ++report.coverage["forced: a in Theta"];
      if (theta[j]) ++report.coverage["forced: b in Theta"];
      if (c_m1) ++report.coverage["forced: c in M1"];
      ++report.coverage[eps == 0 ? "epsilon 0" : "epsilon 1"];
      const bool forced = theta[i] || theta[j] || c_m1;
      if ((eps != 0 && eps != 1) || (forced && eps != 1)) {
        std::ostringstream tr;
        tr << "a = " << describe(u[i], spec) << "; b = " << describe(u[j], spec)
           << "; c = " << describe(df.unmovable, spec) << "; t = " << df.power
           << "; epsilon = " << eps << (forced ? " (forced to 1)" : "");
        report.fail(to_string(u[i]) + " * " + to_string(u[j]), tr.str());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Trichotomy, cones and order laws

CheckReport check_trichotomy(const DehornoyStructureSpec& spec, int radius) {
  CheckReport report;
  report.name = "trichotomy on " + spec.model->name();
  for (const GroupElement& g : enumerate_ball(spec.model, radius)) {
    ++report.instances;
    try {
      ++report.coverage[to_string(sign(g, spec))];
    } catch (const TrichotomyViolation& e) {
      report.fail(to_string(g), e.what());
    }
  }
  return report;
}

namespace {

std::vector<int> atoms_of(AtomMask mask, int num_atoms) {
  std::vector<int> out;
  for (int i = 0; i < num_atoms; ++i)
    if (mask & atom_bit(i)) out.push_back(i);
  return out;
}

Comparison opposite(Comparison c) {
  if (c == Comparison::Less) return Comparison::Greater;
  if (c == Comparison::Greater) return Comparison::Less;
  return c;
}

}  // namespace

CheckReport check_cone_axioms(const OrderChain& chain, const EnumerationBudget& budget) {
  const DehornoyStructureSpec& spec = chain.levels.front();
  const ModelPtr& model = spec.model;
  CheckReport report = check_trichotomy(spec, budget.max_length);
  report.name = "cone axioms on " + model->name();
  report.seed = budget.seed;

  std::mt19937_64 rng(budget.seed);
  const auto random_element = [&](const std::vector<int>& atoms) {
    return from_letters(model, random_signed_word(atoms, budget.max_length, rng));
  };
  const std::vector<int> all = atoms_of(~AtomMask{0}, model->num_atoms());
  const std::vector<int> g1 = atoms_of(spec.g1.atoms, model->num_atoms());

  std::vector<GroupElement> positives;
  for (int tries = 0; static_cast<int>(positives.size()) < budget.samples && tries < 20 * budget.samples;
       ++tries) {
    GroupElement g = random_element(all);
    guarded(report, to_string(g), [&] {
      if (sign(g, spec) == Sign::Positive) positives.push_back(g);
    });
  }
  for (std::size_t i = 0; i + 1 < positives.size(); ++i) {
    const GroupElement& a = positives[i];
    const GroupElement& b = positives[i + 1];
    ++report.instances;
    ++report.coverage["closure PP in P"];
    guarded(report, "closure", [&] {
      if (sign(multiply(a, b), spec) != Sign::Positive) {
        report.fail("closure", to_string(a) + " * " + to_string(b) + " is not positive");
      }
    });
    const GroupElement h = random_element(g1);
    ++report.instances;
    ++report.coverage["absorption G1 P G1 in P"];
    guarded(report, "absorption", [&] {
      if (sign(multiply(h, a), spec) != Sign::Positive || sign(multiply(a, h), spec) != Sign::Positive ||
          sign(multiply(multiply(h, a), inverse(h)), spec) != Sign::Positive) {
        report.fail("absorption", "h = " + to_string(h) + ", p = " + to_string(a));
      }
    });
  }
  report.merge(check_order_laws(chain, budget));
  return report;
}

CheckReport check_order_laws(const OrderChain& chain, const EnumerationBudget& budget) {
  const ModelPtr& model = chain.levels.front().model;
  CheckReport report;
  report.name = "order laws on " + model->name();
  report.seed = budget.seed;
  std::mt19937_64 rng(budget.seed ^ 0x5bd1e995ULL);
  const auto random_element = [&] {
    return from_letters(model, random_signed_word(model->num_atoms(), budget.max_length, rng));
  };
  for (int i = 0; i < budget.samples; ++i) {
    const GroupElement x = random_element(), y = random_element(), z = random_element();
    const std::string inst = "(" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")";
    ++report.instances;
    guarded(report, inst, [&] {
    const Comparison xy = compare(x, y, chain);
    const Comparison yz = compare(y, z, chain);
    const Comparison xz = compare(x, z, chain);
    if ((xy == Comparison::Equal) != (x == y)) report.fail(inst, "equality mismatch for (x, y)");
    if (compare(multiply(z, x), multiply(z, y), chain) != xy) {
      report.fail(inst, "left invariance: compare(zx, zy) != compare(x, y)");
    }
    ++report.coverage["left invariance"];
    if (compare(y, x, chain) != opposite(xy)) report.fail(inst, "antisymmetry fails for (x, y)");
    ++report.coverage["antisymmetry"];
    // every orientation of the triangle x, y, z
    const Comparison rel[3][3] = {{Comparison::Equal, xy, xz},
                                  {opposite(xy), Comparison::Equal, yz},
                                  {opposite(xz), opposite(yz), Comparison::Equal}};
    const auto le = [](Comparison c) { return c != Comparison::Greater; };
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int r = 0; r < 3; ++r) {
          if (p == q || q == r || p == r) continue;
          if (le(rel[p][q]) && le(rel[q][r]) && !le(rel[p][r])) {
            report.fail(inst, "transitivity fails");
          }
        }
    ++report.coverage["transitivity"];
    });
  }
  return report;
}

CheckReport check_tail_oracle(const DehornoyStructureSpec& spec, int max_length) {
  CheckReport report;
  report.name = "tail oracle on " + spec.model->name();
  for (const NormalForm& a : enumerate_positive(spec.model, max_length)) {
    for (const ParabolicSet* n : {&spec.h, &spec.g1}) {
      ++report.instances;
      try {
        const NormalForm fast = tail(a, *n);
        const NormalForm slow = brute_force_tail(a, *n);
        if (!(fast == slow)) {
          report.fail(to_string(a), "tail " + to_string(fast) + " vs oracle " + to_string(slow));
        }
      } catch (const std::exception& e) {
        report.fail(to_string(a), e.what());
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Cross-validation against handle reduction

CheckReport cross_validate_signs(const BraidContext& ctx, const EnumerationBudget& budget) {
  CheckReport report;
  report.name = "sign vs handle reduction on " + ctx.model->name();
  report.seed = budget.seed;
  std::mt19937_64 rng(budget.seed);
  for (int i = 0; i < budget.samples; ++i) {
    const SignedWord w = random_signed_word(ctx.n, budget.max_length, rng);
    ++report.instances;
    guarded(report, signed_text(*ctx.model, w), [&] {
      const Sign oracle = handle_reduction_sign(w);
      ++report.coverage[to_string(oracle)];
      const Sign ours = sign(from_letters(ctx.model, w), ctx.structure);
      if (ours != oracle) {
        report.fail(signed_text(*ctx.model, w), std::string("order sign ") + to_string(ours) +
                                                    ", handle reduction " + to_string(oracle));
      }
    });
  }
  return report;
}

CheckReport cross_validate_breadth(const BraidContext& ctx, const EnumerationBudget& budget) {
  CheckReport report;
  report.name = "breadth criterion vs handle reduction on " + ctx.model->name();
  const std::vector<int> omega = ctx.model->word(ctx.model->omega());
  for (const NormalForm& a : enumerate_unmovable(ctx.model, budget.max_length)) {
    for (int k = 1; k <= budget.max_power; ++k) {
      SignedWord w;
      for (int r = 0; r < k; ++r)
        for (auto it = omega.rbegin(); it != omega.rend(); ++it) w.push_back({*it, -1});
      for (int x : a.word()) w.push_back({x, 1});
      ++report.instances;
      const std::string inst = "W^-" + std::to_string(k) + " " + to_string(a);
      guarded(report, inst, [&] {
        const Sign oracle = handle_reduction_sign(w);
        ++report.coverage[to_string(oracle)];
        const Sign ours = breadth_sign(a, k, ctx);
        if (ours != oracle) {
          report.fail(inst, std::string("breadth ") + to_string(ours) + ", handle reduction " +
                                to_string(oracle) + "; " + describe(a, ctx.structure));
        }
      });
    }
  }
  return report;
}

CheckReport cross_validate_signs(const DihedralContext& ctx, const EnumerationBudget& budget) {
  CheckReport report;
  report.name = "sign vs embedded handle reduction on " + ctx.model->name();
  report.seed = budget.seed;
  std::mt19937_64 rng(budget.seed);
  for (int i = 0; i < budget.samples; ++i) {
    const SignedWord w = random_signed_word(2, budget.max_length, rng);
    ++report.instances;
    guarded(report, signed_text(*ctx.model, w), [&] {
      const Sign oracle = handle_reduction_sign(crisp_embed_word(ctx.m, w));
      ++report.coverage[to_string(oracle)];
      const Sign ours = sign(from_letters(ctx.model, w), ctx.structure);
      if (ours != oracle) {
        report.fail(signed_text(*ctx.model, w), std::string("order sign ") + to_string(ours) +
                                                    ", r1-sign of the image " + to_string(oracle));
      }
    });
  }
  return report;
}

}  // namespace garside

#include "garside/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>

#include "garside/braid.hpp"
#include "garside/dihedral.hpp"
#include "garside/order.hpp"
#include "garside/verifier.hpp"
#include "garside/word.hpp"

namespace garside {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string group = "an";
  int n = 2;
  int m = 4;
  std::string epsilon;
  int max_len = 6;
  int max_power = 4;
  int samples = 1000;
  std::uint64_t seed = 1;
  bool json = false;
  std::vector<std::string> words;
  std::string check;
};

// Either a braid or a dihedral context, built once per invocation.
struct Group {
  std::unique_ptr<BraidContext> braid;
  std::unique_ptr<DihedralContext> dihedral;

  const ModelPtr& model() const { return braid ? braid->model : dihedral->model; }
  const DehornoyStructureSpec& spec() const { return braid ? braid->structure : dihedral->structure; }
  std::size_t chain_depth() const { return braid ? static_cast<std::size_t>(braid->n) : 2; }
};

Group make_group(const Options& o) {
  Group g;
  if (o.group == "an") {
    if (o.n < 2 || o.n > BraidModel::kMaxGenerators) throw UsageError("--n must be in 2..15");
    g.braid = std::make_unique<BraidContext>(make_braid_context(o.n));
  } else {
    if (o.m < 4) throw UsageError("--m must be at least 4");
    g.dihedral = std::make_unique<DihedralContext>(make_dihedral_context(o.m));
  }
  return g;
}

OrderChain make_chain(const Group& g, const Options& o) {
  std::vector<int> eps = o.epsilon.empty() ? std::vector<int>(g.chain_depth(), 1) : parse_epsilon(o.epsilon);
  if (eps.size() != g.chain_depth()) {
    throw UsageError("--epsilon needs " + std::to_string(g.chain_depth()) + " characters for this group");
  }
  return g.braid ? braid_order_chain(g.braid->n, eps) : dihedral_order_chain(g.dihedral->m, eps);
}

GroupElement parse_element(const Group& g, const std::string& text) {
  return evaluate_word(parse_word(text), g.model());
}

NormalForm parse_positive(const Group& g, const std::string& text) {
  const auto a = parse_element(g, text).to_positive();
  if (!a) throw UsageError("\"" + text + "\" is not a positive element");
  return *a;
}

ordered_json delta_json(const DeltaForm& df) {
  return {{"unmovable", to_string(df.unmovable)}, {"power", df.power}};
}

std::string delta_text(const DeltaForm& df) {
  std::ostringstream os;
  os << to_string(df.unmovable);
  if (df.power != 0) os << " D^" << df.power;
  return os.str();
}

void require_words(const Options& o, std::size_t count, const char* cmd) {
  if (o.words.size() != count) {
    throw UsageError(std::string(cmd) + " takes " + std::to_string(count) + " word argument(s)");
  }
}

struct Result {
  ordered_json json = ordered_json::object();
  std::string text;
  int code = 0;
};

Result run_nf(const Group& g, const Options& o) {
  require_words(o, 1, "nf");
  const GroupElement x = parse_element(g, o.words[0]);
  Result r;
  ordered_json factors = ordered_json::array();
  for (Simple s : x.part().factors()) factors.push_back(format_word(*g.model(), g.model()->word(s)));
  r.json = {{"normal_form", to_string(x)}, {"factors", factors}, {"omega_power", x.omega_power()}};
  r.text = "normal form: " + to_string(x) + "\n";
  return r;
}

Result run_delta_form(const Group& g, const Options& o) {
  require_words(o, 1, "delta-form");
  const DeltaForm df = delta_form(parse_element(g, o.words[0]));
  Result r;
  r.json = {{"delta_form", delta_json(df)}};
  r.text = "delta form: " + delta_text(df) + "\n";
  return r;
}

Result run_alt_form(const Group& g, const Options& o) {
  require_words(o, 1, "alt-form");
  const AlternatingForm af = alternating_form(parse_positive(g, o.words[0]), g.spec());
  Result r;
  ordered_json factors = ordered_json::array();
  std::string joined;
  for (const auto& f : af.factors) {
    factors.push_back(to_string(f));
    joined += (joined.empty() ? "" : " | ") + to_string(f);
  }
  r.json = {{"factors", factors}, {"breadth", af.breadth}, {"depth", af.depth}};
  r.text = "alternating form: " + joined + "\nbreadth: " + std::to_string(af.breadth) +
           "\ndepth: " + std::to_string(af.depth) + "\n";
  return r;
}

Result run_depth(const Group& g, const Options& o) {
  require_words(o, 1, "depth");
  const int d = depth(parse_positive(g, o.words[0]), g.spec());
  Result r;
  r.json = {{"depth", d}};
  r.text = "depth: " + std::to_string(d) + "\n";
  return r;
}

Result run_sign(const Group& g, const Options& o) {
  require_words(o, 1, "sign");
  const GroupElement x = parse_element(g, o.words[0]);
  const Sign s = sign(x, g.spec());
  const DeltaForm df = delta_form(x);
  const int d = depth(df.unmovable, g.spec());
  Result r;
  r.json = {{"sign", to_string(s)}, {"delta_form", delta_json(df)}, {"depth", d}};
  r.text = std::string(to_string(s)) + "\ndelta form: " + delta_text(df) + "\ndepth: " + std::to_string(d) + "\n";
  return r;
}

std::string comparison_word(Comparison c) {
  switch (c) {
    case Comparison::Less: return "Less";
    case Comparison::Equal: return "Equal";
    case Comparison::Greater: return "Greater";
  }
  return "?";
}

Result run_compare(const Group& g, const Options& o) {
  require_words(o, 2, "compare");
  const OrderChain chain = make_chain(g, o);
  const Comparison c = compare(parse_element(g, o.words[0]), parse_element(g, o.words[1]), chain);
  Result r;
  r.json = {{"comparison", comparison_word(c)}};
  r.text = comparison_word(c) + "\n";
  return r;
}

Result run_embed(const Group& g, const Options& o) {
  require_words(o, 1, "embed");
  if (!g.dihedral) throw UsageError("embed needs --group i2");
  const DihedralContext& ctx = *g.dihedral;
  const BraidContext target = crisp_target_context(ctx.m);
  const SignedWord w = expand_word(parse_word(o.words[0]), *ctx.model);
  const GroupElement image = crisp_embed(ctx, from_group(ctx, from_letters(ctx.model, w)), target);
  const std::string word = format_signed_word(*target.model, crisp_embed_word(ctx.m, w));
  Result r;
  r.json = {{"target", target.model->name()}, {"image_word", word}, {"normal_form", to_string(image)}};
  r.text = "target: B" + std::to_string(ctx.m) + " (" + target.model->name() + ")\nimage word: " + word +
           "\nnormal form: " + to_string(image) + "\n";
  return r;
}

Result run_sort(const Group& g, const Options& o) {
  if (o.words.empty()) throw UsageError("sort takes at least one word");
  const OrderChain chain = make_chain(g, o);
  std::vector<std::pair<std::string, GroupElement>> items;
  for (const auto& w : o.words) items.emplace_back(w, parse_element(g, w));
  std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
    return compare(a.second, b.second, chain) == Comparison::Less;
  });
  Result r;
  ordered_json sorted = ordered_json::array();
  for (const auto& [w, x] : items) {
    sorted.push_back(w);
    r.text += w + "\n";
  }
  r.json = {{"sorted", sorted}};
  return r;
}

Result run_verify(const Group& g, const Options& o) {
  const EnumerationBudget budget{o.max_len, o.max_power, o.samples, o.seed};
  if (budget.max_length < 1 || budget.max_power < 1 || budget.samples < 1) {
    throw UsageError("budgets must be at least 1");
  }
  CheckReport report;
  if (o.check == "condA") {
    report = check_condition_A(g.spec(), budget.max_power);
  } else if (o.check == "condB") {
    report = check_condition_B(g.spec(), budget.max_length);
  } else if (o.check == "cone") {
    report = check_cone_axioms(make_chain(g, o), budget);
  } else if (o.check == "lemmas") {
    report = g.braid ? check_lemma_suite(*g.braid, budget) : check_lemma_suite(*g.dihedral, budget);
  } else {
    if (g.braid) {
      report = cross_validate_signs(*g.braid, budget);
      report.merge(cross_validate_breadth(*g.braid, budget));
    } else {
      report = cross_validate_signs(*g.dihedral, budget);
    }
  }
  Result r;
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.failures) failures.push_back({{"instance", f.instance}, {"trace", f.trace}});
  r.json = {{"check", report.name},
            {"pass", report.pass()},
            {"instances", report.instances},
            {"seed", report.seed},
            {"coverage", report.coverage},
            {"notes", report.notes},
            {"failures", failures}};
  r.text = report.to_text();
  r.code = report.pass() ? 0 : 1;
  return r;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Garside normal forms and Dehornoy-structure orders on braid and dihedral Artin groups",
               "garside"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--group", o.group, "Group family")->check(CLI::IsMember({"an", "i2"}));
  app.add_option("--n", o.n, "Generators of A_n (B_{n+1})");
  app.add_option("--m", o.m, "Parameter of I2(m)");
  app.add_option("--epsilon", o.epsilon, "Signs per order level, e.g. +-+");
  app.add_option("--max-len", o.max_len, "Maximal word length L");
  app.add_option("--max-power", o.max_power, "Maximal Δ-power K");
  app.add_option("--samples", o.samples, "Random samples");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_flag("--json", o.json, "Machine-readable output");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"nf", "Greedy normal form"},
      {"delta-form", "Δ-form a·Δ^k"},
      {"alt-form", "Alternating form of a positive element"},
      {"depth", "Depth of a positive element"},
      {"sign", "(H, G1)-sign"},
      {"compare", "Compare two elements in the chain order"},
      {"embed", "Embed an I2(m) element into B_m"},
      {"sort", "Sort elements in the chain order"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("words", o.words, "Words")->expected(0, -1);
    subs[name] = sub;
  }
  CLI::App* verify = app.add_subcommand("verify", "Run a verification");
  verify->add_option("check", o.check, "condA, condB, cone, lemmas or cross")
      ->required()
      ->check(CLI::IsMember({"condA", "condB", "cone", "lemmas", "cross"}));
  subs["verify"] = verify;

  std::vector<const char*> argv{"garside"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  std::string command;
  for (const auto& [name, sub] : subs)
    if (sub->parsed()) command = name;

  try {
    const Group g = make_group(o);
    Result r;
    if (command == "nf") r = run_nf(g, o);
    else if (command == "delta-form") r = run_delta_form(g, o);
    else if (command == "alt-form") r = run_alt_form(g, o);
    else if (command == "depth") r = run_depth(g, o);
    else if (command == "sign") r = run_sign(g, o);
    else if (command == "compare") r = run_compare(g, o);
    else if (command == "embed") r = run_embed(g, o);
    else if (command == "sort") r = run_sort(g, o);
    else r = run_verify(g, o);

    if (o.json) {
      ordered_json doc;
      doc["command"] = command == "verify" ? "verify " + o.check : command;
      doc["group"] = g.model()->name();
      doc["inputs"] = o.words;
      doc["result"] = r.json;
      out << doc.dump(2) << '\n';
    } else {
      out << r.text;
    }
    return r.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace garside

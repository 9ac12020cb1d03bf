#include "cohere/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "cohere/kb.hpp"
#include "cohere/report.hpp"
#include "cohere/sweep.hpp"

namespace cohere::cli {

namespace {

struct Settings {
  std::size_t max_props = logic::kDefaultMaxProps;
  std::string format = "human";
  std::string alpha;
  std::uint64_t seed = 1;
  bool json() const { return format == "json"; }
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

kb::KnowledgeBase load(const Settings& s, const std::string& path) {
  kb::Options options;
  options.max_props = s.max_props;
  if (!s.alpha.empty()) {
    try {
      options.alpha = parse_rational(s.alpha);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("--alpha: ") + e.what());
    }
  }
  try {
    return kb::load_kb(path, options);
  } catch (const kb::KbError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

// Syntax errors inside a command-line argument, located by column.
template <typename F>
auto argument(const std::string& name, F&& fn) {
  try {
    return fn();
  } catch (const logic::SyntaxError& e) {
    throw InputError(name + ": column " + std::to_string(e.offset() + 1) + ": " + e.message());
  }
}

int emit(std::ostream& out, const Settings& s, const report::Json& json, const std::string& human, int code) {
  if (s.json())
    out << json.dump(2) << "\n";
  else
    out << human;
  return code;
}

int cmd_check(const Settings& s, const std::string& path, std::ostream& out) {
  const auto kb = load(s, path);
  const auto a = kb.assessment();
  const auto verdict = coherence::check_coherence(a);
  return emit(out, s, report::check_json(a, verdict), report::check_human(a, verdict),
              coherence::is_coherent(verdict) ? kPositive : kNegative);
}

int cmd_atoms(const Settings& s, const std::string& path, std::ostream& out) {
  const auto kb = load(s, path);
  const auto atoms = coherence::atoms_for(kb.assessment());
  auto json = report::envelope("atoms");
  json.update(report::atoms_json(*atoms));
  return emit(out, s, json, report::atoms_human(*atoms), kPositive);
}

int cmd_extend(const Settings& s, const std::string& path, const std::string& target_text, std::ostream& out,
               std::ostream& err) {
  const auto kb = load(s, path);
  const auto& v = kb.universe->vocabulary();
  std::vector<logic::ConditionalEvent> targets;
  if (!target_text.empty())
    targets.push_back(argument("event", [&] { return logic::parse_conditional(target_text, v); }));
  else
    targets = kb.queries;
  if (targets.empty()) throw InputError("no conditional event given and the knowledge base has no query lines");
  for (const auto& t : targets)
    if (!kb.universe->possible(t.conditioning)) throw InputError("impossible conditioning event");

  const auto a = kb.assessment();
  report::Json results = report::Json::array();
  std::string human;
  try {
    for (const auto& t : targets) {
      const auto interval = extension::coherent_interval(a, t);
      results.push_back(report::extend_json(v, t, interval));
      human += targets.size() == 1 ? report::interval_text(interval) + "\n"
                                   : logic::to_string(t, v) + ": " + report::interval_text(interval) + "\n";
    }
  } catch (const extension::IncoherentBase& e) {
    err << e.what() << "\n";
    auto json = report::envelope("extend");
    json["error"] = e.what();
    if (s.json()) out << json.dump(2) << "\n";
    return kNegative;
  }
  return emit(out, s, results.size() == 1 ? results[0] : results, human, kPositive);
}

int cmd_entails(const Settings& s, const std::string& path, const std::string& rule_text, std::ostream& out) {
  const auto kb = load(s, path);
  const auto rule = argument("rule", [&] { return kb::parse_rule(rule_text, kb.universe->vocabulary()); });
  if (!kb.universe->possible(rule.antecedent)) throw InputError("impossible antecedent");
  try {
    const auto result = defaults::query(kb.default_kb(), rule);
    return emit(out, s, report::entails_json(kb.universe->vocabulary(), rule, result), report::entails_human(result),
                result.entailed ? kPositive : kNegative);
  } catch (const defaults::InconsistentKB& e) {
    throw InputError(e.what());
  }
}

int cmd_defaults(const Settings& s, const std::string& path, std::ostream& out) {
  const auto kb = load(s, path).default_kb();
  report::DefaultsResult result{defaults::consistent_boolean(kb.rules_only()), defaults::consistent_coherence(kb)};
  const bool positive =
      std::holds_alternative<defaults::Consistent>(result.boolean) && coherence::is_coherent(result.coherence);
  return emit(out, s, report::defaults_json(kb, result), report::defaults_human(kb, result),
              positive ? kPositive : kNegative);
}

struct RulesArgs {
  std::string schema;
  std::string a, b, c;
  std::size_t random = 0;
  int depth = 1;
};

int cmd_rules(const Settings& s, const std::string& path, const RulesArgs& args, std::ostream& out) {
  const auto kb = load(s, path);
  const auto schema = defaults::parse_schema(args.schema);
  if (!schema) throw InputError("unknown schema '" + args.schema + "'");
  const auto base = kb.default_kb();
  const auto& v = kb.universe->vocabulary();

  if (args.random > 0) {
    if (v.size() == 0) throw InputError("random instances need at least one proposition");
    const auto instances = sweep::random_instances(s.seed, args.random, v.size(), args.depth);
    const auto t = sweep::schema_sweep(*schema, instances, base);
    auto json = report::envelope("rules");
    json["schema"] = std::string(defaults::schema_name(*schema));
    json["seed"] = s.seed;
    json["instances"] = t.instances;
    json["applicable"] = t.applicable;
    json["entailed"] = t.entailed;
    json["counterexamples"] = t.counterexamples;
    std::string human = "schema " + std::string(defaults::schema_name(*schema)) + "; " +
                        std::to_string(t.instances) + " instances, " + std::to_string(t.applicable) +
                        " applicable, " + std::to_string(t.entailed) + " entailed, " +
                        std::to_string(t.counterexamples) + " counterexamples\n";
    if (t.first_counterexample) {
      const auto& inst = instances[*t.first_counterexample];
      const auto r = defaults::check_rule_schema(*schema, inst, base);
      json["first_counterexample"] = report::schema_json(v, inst, r);
      human += "first counterexample:\n" + report::schema_human(v, inst, r);
    }
    return emit(out, s, json, human, t.counterexamples == 0 ? kPositive : kNegative);
  }

  if (args.a.empty() || args.b.empty() || args.c.empty())
    throw InputError("give --a, --b and --c, or --random <n>");
  defaults::Instance inst{argument("--a", [&] { return logic::parse_formula(args.a, v); }),
                          argument("--b", [&] { return logic::parse_formula(args.b, v); }),
                          argument("--c", [&] { return logic::parse_formula(args.c, v); })};
  const auto r = defaults::check_rule_schema(*schema, inst, base);
  return emit(out, s, report::schema_json(v, inst, r), report::schema_human(v, inst, r),
              r.upholds_schema() ? kPositive : kNegative);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherence of conditional probability assessments and default reasoning", "cohere"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--max-props", s.max_props, "Proposition bound")->check(CLI::Range(1, int(logic::kHardPropLimit)));
  app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--alpha", s.alpha, "Value bound to `alpha` in the knowledge base");
  app.add_option("--seed", s.seed, "Seed for random rule-schema sweeps");

  std::string path, text;
  RulesArgs rules;
  auto* check = app.add_subcommand("check", "Coherence verdict, agreeing class and zero-layers");
  auto* extend = app.add_subcommand("extend", "Coherent interval of a new conditional event");
  auto* entails = app.add_subcommand("entails", "Whether the default rules entail H => E");
  auto* dflt = app.add_subcommand("defaults", "Consistency of the default rules");
  auto* rules_cmd = app.add_subcommand("rules", "Check a rule schema on an instance or a random sweep");
  auto* atoms = app.add_subcommand("atoms", "Atom table of the assessed events");
  for (auto* sub : {check, extend, entails, dflt, rules_cmd, atoms}) {
    sub->fallthrough();
    sub->add_option("kb", path, "Knowledge base file")->required();
  }
  extend->add_option("event", text, "\"E | H\"; defaults to the query lines");
  entails->add_option("rule", text, "\"H => E\"")->required();
  rules_cmd->add_option("--schema", rules.schema, "Schema name")->required();
  rules_cmd->add_option("--a", rules.a, "Formula for A");
  rules_cmd->add_option("--b", rules.b, "Formula for B");
  rules_cmd->add_option("--c", rules.c, "Formula for C");
  rules_cmd->add_option("--random", rules.random, "Number of random instances");
  rules_cmd->add_option("--depth", rules.depth, "Connective depth of random formulas")->check(CLI::Range(0, 4));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPositive : kInputError;
  }

  try {
    if (*check) return cmd_check(s, path, out);
    if (*atoms) return cmd_atoms(s, path, out);
    if (*extend) return cmd_extend(s, path, text, out, err);
    if (*entails) return cmd_entails(s, path, text, out);
    if (*dflt) return cmd_defaults(s, path, out);
    if (*rules_cmd) return cmd_rules(s, path, rules, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const logic::BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace cohere::cli

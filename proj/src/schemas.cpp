#include <array>
#include <utility>

#include "cohere/defaults.hpp"

namespace cohere::defaults {

namespace {

constexpr std::array<std::pair<Schema, std::string_view>, 14> kNames{{
    {Schema::Reflexivity, "reflexivity"},
    {Schema::LeftLogicalEquivalence, "left-logical-equivalence"},
    {Schema::RightWeakening, "right-weakening"},
    {Schema::Cut, "cut"},
    {Schema::CautiousMonotonicity, "cautious-monotonicity"},
    {Schema::Equivalence, "equivalence"},
    {Schema::And, "and"},
    {Schema::Or, "or"},
    {Schema::Monotonicity, "monotonicity"},
    {Schema::Transitivity, "transitivity"},
    {Schema::Contraposition, "contraposition"},
    {Schema::NegationRationality, "negation-rationality"},
    {Schema::DisjunctiveRationality, "disjunctive-rationality"},
    {Schema::RationalMonotonicity, "rational-monotonicity"},
}};

DefaultRule rule(logic::Formula h, logic::Formula e) { return {std::move(h), std::move(e)}; }

}  // namespace

std::string_view schema_name(Schema s) {
  for (const auto& [schema, name] : kNames)
    if (schema == s) return name;
  return "unknown";
}

std::optional<Schema> parse_schema(std::string_view name) {
  for (const auto& [schema, n] : kNames)
    if (n == name) return schema;
  return std::nullopt;
}

SchemaKind schema_kind(Schema s) {
  switch (s) {
    case Schema::Monotonicity:
    case Schema::Transitivity:
    case Schema::Contraposition:
      return SchemaKind::Failing;
    case Schema::NegationRationality:
    case Schema::DisjunctiveRationality:
    case Schema::RationalMonotonicity:
      return SchemaKind::Rationality;
    default:
      return SchemaKind::Sound;
  }
}

SchemaShape instantiate(Schema s, const Instance& inst) {
  using logic::Formula;
  const Formula& a = inst.a;
  const Formula& b = inst.b;
  const Formula& c = inst.c;
  switch (s) {
    case Schema::Reflexivity:
      return {{}, {}, {}, rule(a, a)};
    case Schema::LeftLogicalEquivalence:
      return {{Formula::implication(a, b) && Formula::implication(b, a)}, {rule(a, c)}, {}, rule(b, c)};
    case Schema::RightWeakening:
      return {{Formula::implication(a, b)}, {rule(c, a)}, {}, rule(c, b)};
    case Schema::Cut:
      return {{}, {rule(a && b, c), rule(a, b)}, {}, rule(a, c)};
    case Schema::CautiousMonotonicity:
      return {{}, {rule(a, b), rule(a, c)}, {}, rule(a && b, c)};
    case Schema::Equivalence:
      return {{}, {rule(a, b), rule(b, a), rule(a, c)}, {}, rule(b, c)};
    case Schema::And:
      return {{}, {rule(a, b), rule(a, c)}, {}, rule(a, b && c)};
    case Schema::Or:
      return {{}, {rule(a, c), rule(b, c)}, {}, rule(a || b, c)};
    case Schema::Monotonicity:
      return {{Formula::implication(a, b)}, {rule(b, c)}, {}, rule(a, c)};
    case Schema::Transitivity:
      return {{}, {rule(a, b), rule(b, c)}, {}, rule(a, c)};
    case Schema::Contraposition:
      return {{}, {rule(a, b)}, {}, rule(!b, !a)};
    case Schema::NegationRationality:
      return {{}, {}, {rule(a && c, b), rule(a && !c, b)}, rule(a, b)};
    case Schema::DisjunctiveRationality:
      return {{}, {}, {rule(a, c), rule(b, c)}, rule(a || b, c)};
    case Schema::RationalMonotonicity:
      return {{}, {}, {rule(a && b, c), rule(a, !b)}, rule(a, c)};
  }
  throw std::invalid_argument("unknown schema");
}

bool SchemaReport::upholds_schema() const {
  switch (kind) {
    case SchemaKind::Sound:
      return !(premises_wellformed && premises_consistent && conclusion_wellformed) || conclusion_entailed;
    case SchemaKind::Rationality:
      return !(premises_wellformed && premises_consistent && conclusion_wellformed && absent_hold) ||
             !conclusion_entailed;
    case SchemaKind::Failing:
      return true;
  }
  return true;
}

SchemaReport check_rule_schema(Schema s, const Instance& inst, const DefaultKB& base) {
  SchemaReport report;
  report.schema = s;
  report.kind = schema_kind(s);
  const SchemaShape shape = instantiate(s, inst);

  auto universe = shape.side_axioms.empty()
                      ? base.universe_ptr()
                      : std::make_shared<const logic::Universe>(base.universe().with_axioms(shape.side_axioms));

  report.premises_wellformed = true;
  for (const auto& r : base.rules()) report.premises_wellformed &= universe->possible(r.antecedent);
  for (const auto& e : base.extra()) report.premises_wellformed &= universe->possible(e.event.conditioning);
  for (const auto& r : shape.premises) report.premises_wellformed &= universe->possible(r.antecedent);
  for (const auto& r : shape.absent) report.premises_wellformed &= universe->possible(r.antecedent);
  report.conclusion_wellformed = universe->possible(shape.conclusion.antecedent);
  if (!report.premises_wellformed) {
    report.note = "a premise has an impossible conditioning event";
    return report;
  }

  auto rules = base.rules();
  rules.insert(rules.end(), shape.premises.begin(), shape.premises.end());
  const DefaultKB kb(universe, std::move(rules), base.extra());
  const auto assessment = kb.assessment();
  report.premises_consistent = coherence::is_coherent(coherence::check_coherence(assessment));
  if (!report.premises_consistent) {
    report.note = "premises are not consistent";
    return report;
  }

  if (report.kind == SchemaKind::Rationality) {
    report.absent_hold = true;
    for (const auto& r : shape.absent) {
      report.absent_intervals.push_back(extension::coherent_interval(assessment, r.event()));
      report.absent_hold &= report.absent_intervals.back().hi < 1;
    }
    report.note = "a rule counts as absent when every coherent value of it is below 1";
  }

  if (!report.conclusion_wellformed) {
    if (report.note.empty()) report.note = "the conclusion has an impossible conditioning event";
    return report;
  }
  report.conclusion = extension::coherent_interval(assessment, shape.conclusion.event());
  report.conclusion_entailed = report.conclusion->lo == 1;
  return report;
}

}  // namespace cohere::defaults

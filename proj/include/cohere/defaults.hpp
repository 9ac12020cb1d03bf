#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cohere/coherence.hpp"
#include "cohere/extension.hpp"

namespace cohere::defaults {

/// H ↦ E: the conditional event E|H assessed at 1.
struct DefaultRule {
  logic::Formula antecedent;  // H
  logic::Formula consequent;  // E

  logic::ConditionalEvent event() const { return {consequent, antecedent}; }
};

/// A set of default rules, optionally inside a larger assessment whose other
/// entries carry values below 1.
class DefaultKB {
 public:
  DefaultKB(std::shared_ptr<const logic::Universe> universe, std::vector<DefaultRule> rules,
            std::vector<coherence::Entry> extra = {});

  const logic::Universe& universe() const { return *universe_; }
  const std::shared_ptr<const logic::Universe>& universe_ptr() const { return universe_; }
  const std::vector<DefaultRule>& rules() const { return rules_; }
  const std::vector<coherence::Entry>& extra() const { return extra_; }

  /// Rules at value 1 followed by the extra entries.
  coherence::Assessment assessment() const;
  DefaultKB rules_only() const { return DefaultKB(universe_, rules_); }

 private:
  std::shared_ptr<const logic::Universe> universe_;
  std::vector<DefaultRule> rules_;
  std::vector<coherence::Entry> extra_;
};

struct Consistent {};
struct Violated {
  std::vector<std::size_t> subset;  // rule indices, ascending; no single removal repairs it
};
using Consistency = std::variant<Consistent, Violated>;

/// Purely Boolean criterion: for every nonempty subset S of rules some atom
/// lies in ⋁_S (E ∧ H) but outside ⋁_S (E^c ∧ H). Throws std::invalid_argument
/// if the KB has extra entries, and logic::BoundExceeded beyond 24 rules.
Consistency consistent_boolean(const DefaultKB& kb);

/// The Boolean condition for one subset of rule indices.
bool subset_condition_holds(const DefaultKB& kb, const std::vector<std::size_t>& subset);

/// Coherence of the whole assessment (rules at 1 plus extra entries).
coherence::Verdict consistent_coherence(const DefaultKB& kb);

/// Layer-by-layer witness from the Boolean criterion: each layer spreads mass
/// uniformly over atoms inside some open E ∧ H and outside every open E^c ∧ H.
/// nullopt when some layer has no such atom. Pure-default KBs only.
std::optional<coherence::AgreeingClass> witness_class(const DefaultKB& kb);

class InconsistentKB : public std::runtime_error {
 public:
  InconsistentKB() : std::runtime_error("the knowledge base is not consistent") {}
};

struct Entailment {
  bool entailed;
  extension::CoherentInterval interval;
};

/// Throws InconsistentKB.
Entailment query(const DefaultKB& kb, const DefaultRule& rule);
inline bool entails(const DefaultKB& kb, const DefaultRule& rule) { return query(kb, rule).entailed; }

enum class Schema {
  Reflexivity,
  LeftLogicalEquivalence,
  RightWeakening,
  Cut,
  CautiousMonotonicity,
  Equivalence,
  And,
  Or,
  Monotonicity,
  Transitivity,
  Contraposition,
  NegationRationality,
  DisjunctiveRationality,
  RationalMonotonicity,
};

enum class SchemaKind {
  Sound,        // conclusion entailed whenever premises are consistent
  Failing,      // may fail; instances serve as counterexamples
  Rationality,  // negative premises, checked through interval upper bounds
};

inline constexpr Schema kAllSchemas[] = {
    Schema::Reflexivity,          Schema::LeftLogicalEquivalence, Schema::RightWeakening,
    Schema::Cut,                  Schema::CautiousMonotonicity,   Schema::Equivalence,
    Schema::And,                  Schema::Or,                     Schema::Monotonicity,
    Schema::Transitivity,         Schema::Contraposition,         Schema::NegationRationality,
    Schema::DisjunctiveRationality, Schema::RationalMonotonicity};

std::string_view schema_name(Schema s);
std::optional<Schema> parse_schema(std::string_view name);
SchemaKind schema_kind(Schema s);

struct Instance {
  logic::Formula a, b, c;
};

/// Premises, side axioms, and conclusion of a schema instance.
struct SchemaShape {
  std::vector<logic::Formula> side_axioms;
  std::vector<DefaultRule> premises;         // positive premises added to the KB
  std::vector<DefaultRule> absent;           // rationality premises: rules required to be absent
  DefaultRule conclusion;
};

SchemaShape instantiate(Schema s, const Instance& inst);

struct SchemaReport {
  Schema schema;
  SchemaKind kind;
  bool premises_wellformed = false;   // every conditioning event is possible
  bool premises_consistent = false;
  bool conclusion_wellformed = false;
  std::optional<extension::CoherentInterval> conclusion;
  bool conclusion_entailed = false;
  // Rationality schemas: interval of each absent rule and whether all have hi < 1.
  std::vector<extension::CoherentInterval> absent_intervals;
  bool absent_hold = false;
  std::string note;

  /// False only when the report contradicts what the schema asserts.
  bool upholds_schema() const;
};

/// Adds the instance's side axioms to the universe and its premises to `base`,
/// then evaluates the conclusion through entailment. Inconsistent or
/// ill-formed premises are reported, not thrown.
SchemaReport check_rule_schema(Schema s, const Instance& inst, const DefaultKB& base);

}  // namespace cohere::defaults

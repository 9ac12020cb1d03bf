#include <doctest.h>

#include <random>

#include "cohere/sweep.hpp"
#include "support.hpp"

using namespace cohere;
using namespace testing_support;
using defaults::DefaultKB;
using defaults::Schema;

namespace {

std::shared_ptr<const logic::Universe> tweety_universe() {
  return universe({"tweety", "penguin", "bird", "fly"}, {"tweety -> penguin", "penguin -> bird"});
}

DefaultKB tweety_kb() {
  auto u = tweety_universe();
  return DefaultKB(u, {rule(*u, "penguin", "bird"), rule(*u, "tweety", "penguin"), rule(*u, "penguin", "~fly")});
}

bool boolean_consistent(const DefaultKB& kb) {
  return std::holds_alternative<defaults::Consistent>(defaults::consistent_boolean(kb));
}

}  // namespace

TEST_CASE("Tweety defaults: consistent, no conclusion about flying") {
  const auto kb = tweety_kb();
  const auto& u = kb.universe();
  CHECK(boolean_consistent(kb));
  CHECK(coherence::is_coherent(defaults::consistent_coherence(kb)));
  CHECK_FALSE(defaults::entails(kb, rule(u, "tweety", "fly")));
  CHECK_FALSE(defaults::entails(kb, rule(u, "tweety", "~fly")));
  CHECK(defaults::entails(kb, rule(u, "tweety", "bird")));
  CHECK(defaults::entails(kb, rule(u, "penguin", "~fly & bird")));
}

TEST_CASE("contradictory defaults are caught with a minimal subset") {
  auto u = universe({"a", "b", "c"});
  DefaultKB kb(u, {rule(*u, "c", "b"), rule(*u, "a", "b"), rule(*u, "a", "~b")});
  const auto r = defaults::consistent_boolean(kb);
  REQUIRE(std::holds_alternative<defaults::Violated>(r));
  CHECK(std::get<defaults::Violated>(r).subset == std::vector<std::size_t>{1, 2});
  CHECK_FALSE(coherence::is_coherent(defaults::consistent_coherence(kb)));
  CHECK_FALSE(defaults::witness_class(kb).has_value());
  CHECK_THROWS_AS(defaults::query(kb, rule(*u, "a", "c")), defaults::InconsistentKB);

  DefaultKB mixed(u, {rule(*u, "a", "b")}, {{conditional(*u, "c | true"), Rational(1, 2)}});
  CHECK_THROWS_AS(defaults::consistent_boolean(mixed), std::invalid_argument);
}

TEST_CASE("witness class is an agreeing class") {
  const auto kb = tweety_kb();
  const auto cls = defaults::witness_class(kb);
  REQUIRE(cls.has_value());
  CHECK_FALSE(coherence::verify_class(kb.assessment(), *cls).has_value());
}

TEST_CASE("Boolean criterion agrees with coherence on random rule sets") {
  std::mt19937_64 rng(101);
  auto u = universe({"a", "b", "c"});
  std::uniform_int_distribution<int> size(1, 4);
  int consistent = 0, inconsistent = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<defaults::DefaultRule> rules;
    for (int i = 0, n = size(rng); i < n; ++i) {
      logic::Formula h;
      do h = sweep::random_formula(rng, 3, 1);
      while (!u->possible(h));
      rules.push_back({h, sweep::random_formula(rng, 3, 1)});
    }
    DefaultKB kb(u, rules);
    const bool boolean = boolean_consistent(kb);
    REQUIRE(boolean == coherence::is_coherent(defaults::consistent_coherence(kb)));
    const auto w = defaults::witness_class(kb);
    CHECK(w.has_value() == boolean);
    if (w) CHECK_FALSE(coherence::verify_class(kb.assessment(), *w).has_value());
    (boolean ? consistent : inconsistent)++;
  }
  CHECK(consistent > 50);
  CHECK(inconsistent > 50);
}

TEST_CASE("schema names round-trip") {
  for (auto s : defaults::kAllSchemas) CHECK(defaults::parse_schema(defaults::schema_name(s)) == s);
  CHECK_FALSE(defaults::parse_schema("nonsense").has_value());
}

TEST_CASE("sound schemas on fixed instances") {
  auto u = universe({"a", "b", "c"});
  const DefaultKB empty(u, {});
  const defaults::Instance inst{formula(*u, "a"), formula(*u, "b"), formula(*u, "c")};
  for (auto s : {Schema::Reflexivity, Schema::Cut, Schema::CautiousMonotonicity, Schema::Equivalence, Schema::And,
                 Schema::Or, Schema::RightWeakening, Schema::LeftLogicalEquivalence}) {
    CAPTURE(defaults::schema_name(s));
    const auto r = defaults::check_rule_schema(s, inst, empty);
    CHECK(r.premises_wellformed);
    CHECK(r.premises_consistent);
    CHECK(r.conclusion_entailed);
    CHECK(r.upholds_schema());
  }
}

TEST_CASE("failing schemas have counterexamples") {
  auto u = tweety_universe();
  const DefaultKB empty(u, {});
  // Transitivity: tweety => penguin, penguin => ~fly does not give tweety => ~fly.
  auto t = defaults::check_rule_schema(
      Schema::Transitivity, {formula(*u, "tweety"), formula(*u, "penguin"), formula(*u, "~fly")}, empty);
  CHECK(t.premises_consistent);
  CHECK_FALSE(t.conclusion_entailed);
  // Monotonicity: penguin -> bird and bird => fly does not give penguin => fly.
  auto m = defaults::check_rule_schema(
      Schema::Monotonicity, {formula(*u, "penguin"), formula(*u, "bird"), formula(*u, "fly")},
      DefaultKB(u, {rule(*u, "penguin", "~fly")}));
  CHECK(m.premises_consistent);
  CHECK_FALSE(m.conclusion_entailed);
  CHECK(m.conclusion == extension::CoherentInterval{Rational(0), Rational(0)});

  auto v = universe({"a", "b"});
  auto c = defaults::check_rule_schema(Schema::Contraposition, {formula(*v, "a"), formula(*v, "b"), formula(*v, "a")},
                                       DefaultKB(v, {}));
  CHECK(c.premises_consistent);
  CHECK_FALSE(c.conclusion_entailed);
  CHECK(c.conclusion->lo == 0);
}

TEST_CASE("rationality schemas: absent rules keep the conclusion unentailed") {
  auto u = universe({"a", "b", "c"});
  // Both refinements of a => b are assessed below 1.
  const DefaultKB base(u, {}, {{conditional(*u, "b | a & c"), Rational(1, 2)}, {conditional(*u, "b | a & ~c"), Rational(1, 3)}});
  const auto r = defaults::check_rule_schema(Schema::NegationRationality,
                                             {formula(*u, "a"), formula(*u, "b"), formula(*u, "c")}, base);
  CHECK(r.premises_consistent);
  CHECK(r.absent_hold);
  CHECK_FALSE(r.conclusion_entailed);
  CHECK(r.upholds_schema());
}

TEST_CASE("schema sweeps: no counterexamples, parallel equals serial") {
  auto u = universe({"a", "b", "c"});
  const DefaultKB base(u, {});
  const auto instances = sweep::random_instances(8, 60, 3, 1);
  for (auto s : defaults::kAllSchemas) {
    CAPTURE(defaults::schema_name(s));
    const auto serial = sweep::schema_sweep_serial(s, instances, base);
    CHECK(serial == sweep::schema_sweep(s, instances, base));
    CHECK(serial.counterexamples == 0);
    if (defaults::schema_kind(s) == defaults::SchemaKind::Sound) CHECK(serial.entailed == serial.applicable);
  }
}

#include <doctest.h>

#include <random>

#include "cohere/kernels.hpp"
#include "cohere/sweep.hpp"
#include "support.hpp"

using namespace cohere;
using namespace testing_support;
using logic::Formula;

TEST_CASE("parse respects precedence and associativity") {
  auto u = universe({"a", "b", "c"});
  const auto& v = u->vocabulary();
  auto a = Formula::prop(0), b = Formula::prop(1), c = Formula::prop(2);
  CHECK(formula(*u, "a & b v c") == ((a && b) || c));
  CHECK(formula(*u, "a v b & c") == (a || (b && c)));
  CHECK(formula(*u, "~a & b") == (!a && b));
  CHECK(formula(*u, "a -> b -> c") == Formula::implication(a, Formula::implication(b, c)));
  CHECK(formula(*u, "a & b & c") == ((a && b) && c));
  CHECK(formula(*u, "(a)") == a);
  CHECK(formula(*u, "true").op() == logic::Op::True);
  CHECK(logic::to_string(formula(*u, "~(a v b) & c"), v) == "~(a v b) & c");
}

TEST_CASE("parse errors carry offsets") {
  auto u = universe({"a", "b"});
  const auto& v = u->vocabulary();
  auto offset_of = [&](const char* text) {
    try {
      logic::parse_formula(text, v);
    } catch (const logic::SyntaxError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("(") == 1);
  CHECK(offset_of("a & ") == 4);
  CHECK(offset_of("a $ b") == 2);
  CHECK(offset_of("zz") == 0);
  CHECK(offset_of("a b") == 2);

  auto bar_offset = [&](const char* text) {
    try {
      logic::parse_conditional(text, v);
    } catch (const logic::SyntaxError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(bar_offset("a") == 1);
  CHECK(bar_offset("a | b | a") == 6);
  CHECK(bar_offset("a | ") == 4);
}

TEST_CASE("vocabulary rejects reserved and malformed names") {
  logic::Vocabulary v;
  CHECK_THROWS(v.add("v"));
  CHECK_THROWS(v.add("true"));
  CHECK_THROWS(v.add("1x"));
  CHECK(v.add("x1") == v.add("x1"));
  CHECK(v.size() == 1);
}

TEST_CASE("printing round-trips through the parser") {
  auto u = universe({"a", "b", "c", "d"});
  const auto& v = u->vocabulary();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Formula f = sweep::random_formula(rng, 4, 4);
    const std::string text = logic::to_string(f, v);
    CAPTURE(text);
    CHECK(logic::parse_formula(text, v) == f);
  }
}

TEST_CASE("truth tables agree with per-world evaluation") {
  auto u = universe({"a", "b", "c", "d", "e", "f", "g"});
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Formula f = sweep::random_formula(rng, 7, 3);
    const auto t = u->table(f);
    for (std::size_t w = 0; w < u->world_count(); ++w) REQUIRE(t.test(w) == logic::evaluate(f, static_cast<logic::World>(w)));
  }
}

TEST_CASE("universe bound and axioms") {
  logic::Vocabulary v;
  for (int i = 0; i < 5; ++i) v.add("p" + std::to_string(i));
  CHECK_THROWS_AS(logic::Universe(v, {}, 4), logic::BoundExceeded);
  CHECK_THROWS_AS(logic::Universe(v, {}, 40), logic::BoundExceeded);

  auto u = universe({"tweety", "penguin", "bird"}, {"tweety -> penguin", "penguin -> bird"});
  CHECK(u->admissible().count() == 4);
  CHECK(u->implies(formula(*u, "tweety"), formula(*u, "bird")));
  CHECK_FALSE(u->implies(formula(*u, "bird"), formula(*u, "tweety")));
  CHECK(u->equivalent(formula(*u, "tweety & bird"), formula(*u, "tweety")));
  CHECK_FALSE(u->possible(formula(*u, "tweety & ~bird")));
}

TEST_CASE("same conditional compares H and E∧H") {
  auto u = universe({"a", "b"});
  CHECK(logic::same_conditional(*u, conditional(*u, "a | b"), conditional(*u, "a & b | b")));
  CHECK_FALSE(logic::same_conditional(*u, conditional(*u, "a | b"), conditional(*u, "a | a v b")));
}

TEST_CASE("atoms of the Tweety events") {
  auto u = universe({"tweety", "penguin", "bird", "fly"}, {"tweety -> penguin", "penguin -> bird"});
  std::vector<Formula> events{formula(*u, "bird"), formula(*u, "penguin"), formula(*u, "~fly")};
  logic::AtomTable atoms(u, events);
  // Four admissible tweety/penguin/bird patterns times fly; two of the
  // patterns differ only in tweety, which no event mentions.
  CHECK(atoms.size() == 6);
  std::size_t witnesses = 0;
  for (const auto& atom : atoms.atoms()) witnesses += atom.witnesses.size();
  CHECK(witnesses == u->admissible().count());
  CHECK_THROWS_AS(atoms.members(formula(*u, "tweety")), logic::OutsideAlgebra);
  auto m = atoms.members(formula(*u, "bird & ~fly"));
  std::size_t in = 0;
  for (bool b : m) in += b;
  CHECK(in == 2);
}

TEST_CASE("signature kernels: table-driven matches per-world reference") {
  std::mt19937_64 rng(5);
  for (std::size_t props : {1, 3, 6, 9, 13}) {
    logic::Vocabulary v;
    for (std::size_t i = 0; i < props; ++i) v.add("p" + std::to_string(i));
    std::vector<Formula> axioms{sweep::random_formula(rng, props, 1) || sweep::random_formula(rng, props, 1)};
    auto u = std::make_shared<const logic::Universe>(v, axioms);
    if (!u->admissible().any()) continue;
    std::vector<Formula> events;
    for (int i = 0; i < 70; ++i) events.push_back(sweep::random_formula(rng, props, 2));
    const auto a = kernels::signatures_serial(*u, events);
    const auto b = kernels::signatures_omp(*u, events);
    CHECK(a.worlds == b.worlds);
    CHECK(a.bits == b.bits);
    const auto x = logic::enumerate_atoms(*u, events);
    const auto y = logic::enumerate_atoms_reference(*u, events);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(x[i].signature == y[i].signature);
      CHECK(x[i].witnesses == y[i].witnesses);
    }
  }
}

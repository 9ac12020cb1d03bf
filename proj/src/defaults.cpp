#include "cohere/defaults.hpp"

#include <cstdint>

namespace cohere::defaults {

DefaultKB::DefaultKB(std::shared_ptr<const logic::Universe> universe, std::vector<DefaultRule> rules,
                     std::vector<coherence::Entry> extra)
    : universe_(std::move(universe)), rules_(std::move(rules)), extra_(std::move(extra)) {}

coherence::Assessment DefaultKB::assessment() const {
  std::vector<coherence::Entry> entries;
  entries.reserve(rules_.size() + extra_.size());
  for (const auto& r : rules_) entries.push_back({r.event(), Rational(1)});
  entries.insert(entries.end(), extra_.begin(), extra_.end());
  return coherence::Assessment(universe_, std::move(entries));
}

namespace {

// Admissible-world tables of E ∧ H and E^c ∧ H per rule.
struct RuleTables {
  std::vector<logic::TruthTable> verified, falsified;
};

RuleTables tables_for(const DefaultKB& kb) {
  RuleTables t;
  const auto& u = kb.universe();
  for (const auto& r : kb.rules()) {
    t.verified.push_back(u.admissible_table(r.consequent && r.antecedent));
    t.falsified.push_back(u.admissible_table(!r.consequent && r.antecedent));
  }
  return t;
}

bool holds(const RuleTables& t, const std::vector<std::size_t>& subset, std::size_t bits) {
  logic::TruthTable verified(bits, false), falsified(bits, false);
  for (auto k : subset) {
    verified |= t.verified[k];
    falsified |= t.falsified[k];
  }
  return !verified.subset_of(falsified);
}

}  // namespace

bool subset_condition_holds(const DefaultKB& kb, const std::vector<std::size_t>& subset) {
  return holds(tables_for(kb), subset, kb.universe().world_count());
}

Consistency consistent_boolean(const DefaultKB& kb) {
  if (!kb.extra().empty())
    throw std::invalid_argument("the Boolean criterion applies to knowledge bases of default rules only");
  const std::size_t n = kb.rules().size();
  if (n > 24) throw logic::BoundExceeded("too many rules for subset enumeration");
  const RuleTables t = tables_for(kb);
  const std::size_t bits = kb.universe().world_count();

  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t k = 0; k < n; ++k)
      if ((mask >> k) & 1U) subset.push_back(k);
    if (holds(t, subset, bits)) continue;

    // Greedy shrink: drop members while the subset still violates.
    for (std::size_t pos = 0; pos < subset.size() && subset.size() > 1;) {
      auto smaller = subset;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(pos));
      if (!holds(t, smaller, bits))
        subset = std::move(smaller);
      else
        ++pos;
    }
    return Violated{std::move(subset)};
  }
  return Consistent{};
}

coherence::Verdict consistent_coherence(const DefaultKB& kb) { return coherence::check_coherence(kb.assessment()); }

std::optional<coherence::AgreeingClass> witness_class(const DefaultKB& kb) {
  if (!kb.extra().empty()) throw std::invalid_argument("witness construction applies to default rules only");
  const auto assessment = kb.assessment();
  auto atoms = coherence::atoms_for(assessment);
  const std::size_t n = kb.rules().size();
  const std::size_t atom_count = atoms->size();

  std::vector<std::vector<bool>> h(n), eh(n), ech(n);
  for (std::size_t k = 0; k < n; ++k) {
    h[k] = atoms->event_members(2 * k + 1);
    auto e = atoms->event_members(2 * k);
    eh[k].resize(atom_count);
    ech[k].resize(atom_count);
    for (std::size_t r = 0; r < atom_count; ++r) {
      eh[k][r] = e[r] && h[k][r];
      ech[k][r] = !e[r] && h[k][r];
    }
  }

  coherence::AgreeingClass cls{atoms, {}, std::vector<std::size_t>(n, 0)};
  std::vector<bool> open(n, true);
  std::size_t remaining = n;
  while (remaining > 0) {
    coherence::Layer layer;
    std::vector<std::size_t> good;
    for (std::size_t r = 0; r < atom_count; ++r) {
      bool under = false, verified = false, falsified = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (!open[k]) continue;
        under = under || h[k][r];
        verified = verified || eh[k][r];
        falsified = falsified || ech[k][r];
      }
      if (under) layer.support.push_back(r);
      if (verified && !falsified) good.push_back(r);
    }
    if (good.empty()) return std::nullopt;
    layer.mass.assign(atom_count, Rational(0));
    const Rational share = Rational(1) / static_cast<unsigned long>(good.size());
    for (auto r : good) layer.mass[r] = share;

    const std::size_t index = cls.layers.size();
    for (std::size_t k = 0; k < n; ++k) {
      if (!open[k]) continue;
      bool hit = false;
      for (auto r : good) hit = hit || h[k][r];
      if (hit) {
        open[k] = false;
        cls.resolution[k] = index;
        --remaining;
      }
    }
    cls.layers.push_back(std::move(layer));
  }
  return cls;
}

Entailment query(const DefaultKB& kb, const DefaultRule& rule) {
  try {
    auto interval = extension::coherent_interval(kb.assessment(), rule.event());
    return {interval.lo == 1, interval};
  } catch (const extension::IncoherentBase&) {
    throw InconsistentKB();
  }
}

}  // namespace cohere::defaults

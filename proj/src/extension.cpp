#include "cohere/extension.hpp"

#include <stdexcept>

#include "cohere/lp.hpp"

namespace cohere::extension {

namespace {

struct Masks {
  std::vector<std::vector<bool>> h, eh;
  std::vector<bool> target_h, target_eh;
};

Masks masks_for(const logic::AtomTable& atoms, std::size_t n) {
  Masks m;
  auto conj = [](std::vector<bool> a, const std::vector<bool>& b) {
    for (std::size_t r = 0; r < a.size(); ++r) a[r] = a[r] && b[r];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    m.h.push_back(atoms.event_members(2 * i + 1));
    m.eh.push_back(conj(atoms.event_members(2 * i), m.h.back()));
  }
  m.target_h = atoms.event_members(2 * n + 1);
  m.target_eh = conj(atoms.event_members(2 * n), m.target_h);
  return m;
}

// Homogeneous row  sum_{E_i H_i} x - p_i sum_{H_i} x = 0  over `domain`.
void add_entry_row(ratlp::LinearProgram& lp, const std::vector<std::size_t>& domain, const std::vector<bool>& h,
                   const std::vector<bool>& eh, const Rational& p) {
  std::vector<Rational> row(domain.size(), Rational(0));
  bool nonzero = false;
  for (std::size_t k = 0; k < domain.size(); ++k) {
    if (!h[domain[k]]) continue;
    row[k] = eh[domain[k]] ? Rational(1 - p) : Rational(-p);
    nonzero = nonzero || sgn(row[k]) != 0;
  }
  if (nonzero) lp.add(std::move(row), ratlp::Relation::Equal, Rational(0));
}

std::vector<std::size_t> positions(const std::vector<std::size_t>& domain, const std::vector<bool>& set) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < domain.size(); ++k)
    if (set[domain[k]]) out.push_back(k);
  return out;
}

}  // namespace

std::vector<CandidateLayer> candidate_layers(const coherence::Assessment& a, const logic::ConditionalEvent& target) {
  if (!a.universe().possible(target.conditioning))
    throw std::invalid_argument("conditioning event of the target is impossible");
  auto atoms = coherence::atoms_for(a, {target.consequent, target.conditioning});
  if (!coherence::is_coherent(coherence::check_coherence(a, atoms))) throw IncoherentBase();

  const std::size_t n = a.size();
  const std::size_t atom_count = atoms->size();
  const Masks m = masks_for(*atoms, n);
  std::vector<bool> open(n, true);
  std::size_t remaining = n;
  std::vector<CandidateLayer> out;

  for (std::size_t layer = 0;; ++layer) {
    std::vector<std::size_t> domain;
    for (std::size_t r = 0; r < atom_count; ++r) {
      bool under = m.target_h[r];
      for (std::size_t i = 0; i < n && !under; ++i) under = open[i] && m.h[i][r];
      if (under) domain.push_back(r);
    }

    // H first carries mass here; scale so that P(H) = 1.
    ratlp::LinearProgram ratio(domain.size());
    for (std::size_t i = 0; i < n; ++i)
      if (open[i]) add_entry_row(ratio, domain, m.h[i], m.eh[i], a.entries()[i].value);
    ratio.add_sum(positions(domain, m.target_h), ratlp::Relation::Equal, Rational(1));
    const auto eh = positions(domain, m.target_eh);
    ratio.minimize_sum(eh);
    auto low = ratlp::solve(ratio);
    if (auto* lo = std::get_if<ratlp::Optimal>(&low)) {
      ratio.maximize_sum(eh);
      auto high = ratlp::solve(ratio);
      out.push_back({layer, lo->value, std::get<ratlp::Optimal>(high).value});
    }
    if (remaining == 0) break;

    // Otherwise H stays at zero mass and the open entries advance alone.
    std::vector<std::size_t> rest;
    for (auto r : domain)
      if (!m.target_h[r]) rest.push_back(r);
    if (rest.empty()) break;
    ratlp::LinearProgram zero(rest.size());
    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> group_entry;
    for (std::size_t i = 0; i < n; ++i) {
      if (!open[i]) continue;
      add_entry_row(zero, rest, m.h[i], m.eh[i], a.entries()[i].value);
      groups.push_back(positions(rest, m.h[i]));
      group_entry.push_back(i);
    }
    std::vector<std::size_t> all(rest.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    zero.add_sum(all, ratlp::Relation::Equal, Rational(1));
    auto support = ratlp::max_support(zero, groups);
    if (std::holds_alternative<ratlp::Infeasible>(support)) break;
    const auto& result = std::get<ratlp::SupportResult>(support);
    std::size_t resolved = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (result.positive[g]) {
        open[group_entry[g]] = false;
        ++resolved;
      }
    }
    if (resolved == 0) throw std::logic_error("feasible layer resolved no entry");
    remaining -= resolved;
  }
  return out;
}

CoherentInterval coherent_interval(const coherence::Assessment& a, const logic::ConditionalEvent& target) {
  auto candidates = candidate_layers(a, target);
  if (candidates.empty()) throw std::logic_error("no candidate layer for a coherent base assessment");
  CoherentInterval out{candidates.front().lo, candidates.front().hi};
  for (const auto& c : candidates) {
    if (c.lo < out.lo) out.lo = c.lo;
    if (c.hi > out.hi) out.hi = c.hi;
  }

  // The coherent values form an interval, so the endpoints suffice.
  std::vector<Rational> probes{out.lo};
  if (!out.degenerate()) probes.push_back(out.hi);
  for (const auto& p : probes) {
    if (!is_coherent_value(a, target, p))
      throw std::logic_error("interval certification failed at " + to_string(p));
  }
  return out;
}

bool is_coherent_value(const coherence::Assessment& a, const logic::ConditionalEvent& target, const Rational& p) {
  if (sgn(p) < 0 || p > 1) return false;
  return coherence::is_coherent(coherence::check_coherence(a.with({target, p})));
}

}  // namespace cohere::extension

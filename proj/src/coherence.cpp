#include "cohere/coherence.hpp"

#include <map>
#include <stdexcept>

#include "cohere/lp.hpp"

namespace cohere::coherence {

Assessment::Assessment(std::shared_ptr<const logic::Universe> universe, std::vector<Entry> entries)
    : universe_(std::move(universe)), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    e.value.canonicalize();
    if (!universe_->possible(e.event.conditioning))
      throw std::invalid_argument("entry " + std::to_string(i + 1) + ": conditioning event is impossible");
    if (sgn(e.value) < 0 || e.value > 1)
      throw std::invalid_argument("entry " + std::to_string(i + 1) + ": value outside [0, 1]");
  }
}

Assessment Assessment::with(Entry extra) const {
  auto entries = entries_;
  entries.push_back(std::move(extra));
  return Assessment(universe_, std::move(entries));
}

Assessment Assessment::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Entry> entries;
  for (auto i : indices) entries.push_back(entries_.at(i));
  return Assessment(universe_, std::move(entries));
}

std::vector<logic::Formula> Assessment::events(const std::vector<logic::Formula>& extra) const {
  std::vector<logic::Formula> out;
  out.reserve(2 * entries_.size() + extra.size());
  for (const auto& e : entries_) {
    out.push_back(e.event.consequent);
    out.push_back(e.event.conditioning);
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

std::shared_ptr<const logic::AtomTable> atoms_for(const Assessment& a, const std::vector<logic::Formula>& extra) {
  return std::make_shared<const logic::AtomTable>(a.universe_ptr(), a.events(extra));
}

Verdict check_coherence(const Assessment& a) { return check_coherence(a, atoms_for(a)); }

Verdict check_coherence(const Assessment& a, std::shared_ptr<const logic::AtomTable> atoms) {
  const std::size_t n = a.size();
  const std::size_t atom_count = atoms->size();
  std::vector<std::vector<bool>> under_h(n), under_eh(n);
  for (std::size_t i = 0; i < n; ++i) {
    under_h[i] = atoms->event_members(2 * i + 1);
    under_eh[i] = atoms->event_members(2 * i);
    for (std::size_t r = 0; r < atom_count; ++r) under_eh[i][r] = under_eh[i][r] && under_h[i][r];
  }

  AgreeingClass cls{atoms, {}, std::vector<std::size_t>(n, 0)};
  std::vector<bool> open(n, true);
  std::size_t remaining = n;

  for (std::size_t layer = 0; remaining > 0; ++layer) {
    std::vector<std::size_t> domain;
    std::vector<std::size_t> var(atom_count, atom_count);
    for (std::size_t r = 0; r < atom_count; ++r) {
      bool under = false;
      for (std::size_t i = 0; i < n && !under; ++i) under = open[i] && under_h[i][r];
      if (under) {
        var[r] = domain.size();
        domain.push_back(r);
      }
    }

    ratlp::LinearProgram lp(domain.size());
    std::vector<std::vector<std::size_t>> groups;
    std::map<std::vector<std::size_t>, std::size_t> group_of;
    std::vector<std::size_t> entry_group(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!open[i]) continue;
      const Rational& p = a.entries()[i].value;
      std::vector<Rational> row(domain.size(), Rational(0));
      std::vector<std::size_t> group;
      bool nonzero = false;
      for (std::size_t k = 0; k < domain.size(); ++k) {
        const std::size_t r = domain[k];
        if (!under_h[i][r]) continue;
        group.push_back(k);
        row[k] = under_eh[i][r] ? Rational(1 - p) : Rational(-p);
        nonzero = nonzero || sgn(row[k]) != 0;
      }
      if (nonzero) lp.add(std::move(row), ratlp::Relation::Equal, Rational(0));
      auto [it, inserted] = group_of.emplace(group, groups.size());
      if (inserted) groups.push_back(std::move(group));
      entry_group[i] = it->second;
    }
    std::vector<std::size_t> all(domain.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    lp.add_sum(all, ratlp::Relation::Equal, Rational(1));

    auto support = ratlp::max_support(lp, groups);
    if (std::holds_alternative<ratlp::Infeasible>(support)) return Incoherent{layer};
    const auto& result = std::get<ratlp::SupportResult>(support);

    Layer current;
    current.support = domain;
    current.mass.assign(atom_count, Rational(0));
    for (std::size_t k = 0; k < domain.size(); ++k) current.mass[domain[k]] = result.point[k];

    std::size_t resolved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (open[i] && result.positive[entry_group[i]]) {
        open[i] = false;
        cls.resolution[i] = layer;
        ++resolved;
      }
    }
    // Normalization puts mass on some atom, and every atom of the domain lies
    // under an open H_i.
    if (resolved == 0) throw std::logic_error("feasible layer resolved no entry");
    remaining -= resolved;
    cls.layers.push_back(std::move(current));
  }
  return Coherent{std::move(cls)};
}

}  // namespace cohere::coherence

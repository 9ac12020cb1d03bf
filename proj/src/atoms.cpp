#include "cohere/kernels.hpp"
#include "cohere/logic.hpp"

namespace cohere::logic {

std::vector<Atom> enumerate_atoms(const Universe& universe, std::span<const Formula> events) {
  return kernels::group_signatures(kernels::signatures_omp(universe, events));
}

std::vector<Atom> enumerate_atoms_reference(const Universe& universe, std::span<const Formula> events) {
  return kernels::group_signatures(kernels::signatures_serial(universe, events));
}

AtomTable::AtomTable(std::shared_ptr<const Universe> universe, std::vector<Formula> events)
    : universe_(std::move(universe)), events_(std::move(events)), atoms_(enumerate_atoms(*universe_, events_)) {}

std::vector<bool> AtomTable::members(const Formula& f) const {
  TruthTable t = universe_->table(f);
  std::vector<bool> out(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& w = atoms_[i].witnesses;
    bool first = t.test(w.front());
    for (World x : w) {
      if (t.test(x) != first) throw OutsideAlgebra("formula splits an atom of the generated algebra");
    }
    out[i] = first;
  }
  return out;
}

std::vector<bool> AtomTable::event_members(std::size_t e) const {
  std::vector<bool> out(atoms_.size());
  for (std::size_t i = 0; i < atoms_.size(); ++i) out[i] = atoms_[i].signature.at(e);
  return out;
}

std::string AtomTable::describe(std::size_t i) const {
  const auto& vocab = universe_->vocabulary();
  const Atom& atom = atoms_.at(i);
  const TruthTable& admissible = universe_->admissible();

  // Prefer proposition literals when the ones shared by every witness pin the
  // atom down exactly.
  World fixed = ~World{0};
  const World first = atom.witnesses.front();
  for (World w : atom.witnesses) fixed &= ~(w ^ first);
  fixed &= static_cast<World>(universe_->world_count() - 1);
  std::size_t matching = 0;
  for (std::size_t w = 0; w < universe_->world_count(); ++w)
    if (admissible.test(w) && ((static_cast<World>(w) ^ first) & fixed) == 0) ++matching;
  if (matching == atom.witnesses.size()) {
    std::string out;
    for (std::size_t p = 0; p < vocab.size(); ++p) {
      if (!((fixed >> p) & 1U)) continue;
      if (!out.empty()) out += " & ";
      out += ((first >> p) & 1U) ? vocab.name(p) : "~" + vocab.name(p);
    }
    return out.empty() ? "true" : out;
  }

  // Otherwise one literal per event, skipping events that are constant or equivalent to
  // an earlier event or its complement.
  std::vector<TruthTable> seen;
  std::string out;
  for (std::size_t e = 0; e < events_.size(); ++e) {
    const TruthTable t = universe_->admissible_table(events_[e]);
    const TruthTable c = ~t & admissible;
    if (!t.any() || !c.any()) continue;
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == t || s == c;
    if (dup) continue;
    seen.push_back(t);
    const Formula& f = events_[e];
    std::string lit;
    if (atom.signature[e])
      lit = f.op() == Op::Prop || f.op() == Op::Not ? to_string(f, vocab) : "(" + to_string(f, vocab) + ")";
    else if (f.op() == Op::Not)
      lit = f.operand().op() == Op::Prop ? to_string(f.operand(), vocab) : "(" + to_string(f.operand(), vocab) + ")";
    else
      lit = f.op() == Op::Prop ? "~" + to_string(f, vocab) : "~(" + to_string(f, vocab) + ")";
    if (!out.empty()) out += " & ";
    out += lit;
  }
  return out.empty() ? "true" : out;
}

}  // namespace cohere::logic

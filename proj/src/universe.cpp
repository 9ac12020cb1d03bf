#include "cohere/logic.hpp"

#include <bit>

namespace cohere::logic {

TruthTable::TruthTable(std::size_t bits, bool value)
    : bits_(bits), words_((bits + 63) / 64, value ? ~std::uint64_t{0} : 0) {
  trim();
}

void TruthTable::trim() {
  if (std::size_t rem = bits_ & 63; rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

TruthTable TruthTable::operator~() const {
  TruthTable out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

bool TruthTable::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t TruthTable::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool TruthTable::subset_of(const TruthTable& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

namespace {

TruthTable prop_table(std::size_t bits, std::size_t index) {
  static constexpr std::uint64_t kLow[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  TruthTable t(bits, false);
  auto words = t.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (index < 6)
      words[k] = kLow[index];
    else
      words[k] = ((k >> (index - 6)) & 1U) ? ~std::uint64_t{0} : 0;
  }
  // Re-trim the partial last word.
  return t & TruthTable(bits, true);
}

TruthTable build(const Formula& f, std::size_t bits) {
  switch (f.op()) {
    case Op::True:
      return TruthTable(bits, true);
    case Op::False:
      return TruthTable(bits, false);
    case Op::Prop:
      return prop_table(bits, f.prop_index());
    case Op::Not:
      return ~build(f.operand(), bits);
    case Op::And:
      return build(f.lhs(), bits) & build(f.rhs(), bits);
    case Op::Or:
      return build(f.lhs(), bits) | build(f.rhs(), bits);
    case Op::Implies:
      return ~build(f.lhs(), bits) | build(f.rhs(), bits);
  }
  return TruthTable(bits, false);
}

}  // namespace

Universe::Universe(Vocabulary vocabulary, std::vector<Formula> axioms, std::size_t max_props)
    : vocabulary_(std::move(vocabulary)), axioms_(std::move(axioms)), max_props_(max_props) {
  if (max_props_ > kHardPropLimit)
    throw BoundExceeded("proposition bound " + std::to_string(max_props_) + " exceeds the hard limit of " +
                        std::to_string(kHardPropLimit));
  if (vocabulary_.size() > max_props_)
    throw BoundExceeded(std::to_string(vocabulary_.size()) + " propositions exceed the bound of " +
                        std::to_string(max_props_));
  admissible_ = TruthTable(world_count(), true);
  for (const auto& axiom : axioms_) admissible_ &= table(axiom);
}

TruthTable Universe::table(const Formula& f) const {
  if (f.prop_span() > vocabulary_.size())
    throw std::invalid_argument("formula references an unregistered proposition");
  return build(f, world_count());
}

std::vector<World> Universe::worlds() const {
  std::vector<World> out;
  out.reserve(admissible_.count());
  for (std::size_t w = 0; w < world_count(); ++w)
    if (admissible_.test(w)) out.push_back(static_cast<World>(w));
  return out;
}

bool Universe::implies(const Formula& a, const Formula& b) const {
  return admissible_table(a).subset_of(table(b));
}

bool Universe::equivalent(const Formula& a, const Formula& b) const {
  return admissible_table(a) == admissible_table(b);
}

Universe Universe::with_axioms(std::span<const Formula> extra) const {
  std::vector<Formula> all = axioms_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Universe(vocabulary_, std::move(all), max_props_);
}

bool same_conditional(const Universe& universe, const ConditionalEvent& a, const ConditionalEvent& b) {
  return universe.equivalent(a.conditioning, b.conditioning) &&
         universe.equivalent(a.consequent && a.conditioning, b.consequent && b.conditioning);
}

}  // namespace cohere::logic

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cohere::logic {

/// Propositions are limited by the width of a World.
inline constexpr std::size_t kHardPropLimit = 26;
inline constexpr std::size_t kDefaultMaxProps = 16;

/// A truth assignment; bit i holds the value of proposition i.
using World = std::uint32_t;

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }
  /// The message without the offset prefix.
  const std::string& message() const { return message_; }

 private:
  std::size_t offset_;
  std::string message_;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a formula splits an atom, i.e. lies outside the generated algebra.
class OutsideAlgebra : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Vocabulary {
 public:
  /// Registers `name` (idempotent) and returns its index.
  std::size_t add(std::string_view name);
  std::optional<std::size_t> find(std::string_view name) const;
  const std::string& name(std::size_t index) const { return names_.at(index); }
  std::size_t size() const { return names_.size(); }

  static bool is_identifier(std::string_view text);
  static bool is_reserved(std::string_view text);

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class Op { True, False, Prop, Not, And, Or, Implies };

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  Formula();  // the constant `true`

  static Formula truth();
  static Formula falsity();
  static Formula prop(std::size_t index);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Op op() const;
  std::size_t prop_index() const;
  const Formula& operand() const { return lhs(); }
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Structural equality.
  bool operator==(const Formula& other) const;

  /// Largest proposition index referenced plus one.
  std::size_t prop_span() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

inline Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
inline Formula operator&&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
inline Formula operator||(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }

/// Truth value of `f` in `world`; the per-world reference evaluator.
bool evaluate(const Formula& f, World world);

/// Renders with minimal parentheses; parse_formula inverts it.
std::string to_string(const Formula& f, const Vocabulary& vocabulary);

/// Grammar: `~` > `&` > `v` > `->`; `&`/`v` associate left, `->` right.
/// Constants `true`/`false`. `v` is reserved and cannot name a proposition.
Formula parse_formula(std::string_view text, const Vocabulary& vocabulary);

struct ConditionalEvent {
  Formula consequent;   // E
  Formula conditioning; // H
};

/// Parses `E | H` with exactly one bar.
ConditionalEvent parse_conditional(std::string_view text, const Vocabulary& vocabulary);

std::string to_string(const ConditionalEvent& ce, const Vocabulary& vocabulary);

/// Fixed-width bitset over the 2^n worlds of a universe.
class TruthTable {
 public:
  TruthTable() = default;
  TruthTable(std::size_t bits, bool value);

  std::size_t size() const { return bits_; }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  TruthTable& operator&=(const TruthTable& other);
  TruthTable& operator|=(const TruthTable& other);
  TruthTable operator~() const;
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
  bool operator==(const TruthTable& other) const = default;

  bool any() const;
  std::size_t count() const;
  bool subset_of(const TruthTable& other) const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

 private:
  void trim();
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Propositions plus certain background constraints (axioms). The admissible
/// worlds are those satisfying every axiom.
class Universe {
 public:
  Universe(Vocabulary vocabulary, std::vector<Formula> axioms,
           std::size_t max_props = kDefaultMaxProps);

  const Vocabulary& vocabulary() const { return vocabulary_; }
  const std::vector<Formula>& axioms() const { return axioms_; }
  std::size_t max_props() const { return max_props_; }
  std::size_t world_count() const { return std::size_t{1} << vocabulary_.size(); }

  /// Unmasked truth table of `f` over all 2^n worlds.
  TruthTable table(const Formula& f) const;
  /// Truth table of `f` restricted to admissible worlds.
  TruthTable admissible_table(const Formula& f) const { return table(f) & admissible_; }
  const TruthTable& admissible() const { return admissible_; }
  std::vector<World> worlds() const;

  bool possible(const Formula& f) const { return admissible_table(f).any(); }
  bool implies(const Formula& a, const Formula& b) const;
  bool equivalent(const Formula& a, const Formula& b) const;

  /// Same vocabulary with additional axioms.
  Universe with_axioms(std::span<const Formula> extra) const;

 private:
  Vocabulary vocabulary_;
  std::vector<Formula> axioms_;
  std::size_t max_props_;
  TruthTable admissible_;
};

/// Semantic equality of conditional events: same H and same E∧H.
bool same_conditional(const Universe& universe, const ConditionalEvent& a, const ConditionalEvent& b);

struct Atom {
  std::vector<bool> signature;   // truth value of each event
  std::vector<World> witnesses;  // ascending
};

/// Atoms of the algebra generated by `events`, ordered by first witness.
/// Signature classes without admissible witnesses are absent.
std::vector<Atom> enumerate_atoms(const Universe& universe, std::span<const Formula> events);

/// Per-world AST evaluation; kept as the reference for the table kernel.
std::vector<Atom> enumerate_atoms_reference(const Universe& universe, std::span<const Formula> events);

class AtomTable {
 public:
  AtomTable(std::shared_ptr<const Universe> universe, std::vector<Formula> events);

  std::size_t size() const { return atoms_.size(); }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Formula>& events() const { return events_; }
  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& universe_ptr() const { return universe_; }

  /// Atoms contained in `f`; throws OutsideAlgebra if `f` splits an atom.
  std::vector<bool> members(const Formula& f) const;
  /// Atoms contained in event number `e` (read off the signatures).
  std::vector<bool> event_members(std::size_t e) const;

  /// Conjunction of event literals describing atom `i`.
  std::string describe(std::size_t i) const;

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Formula> events_;
  std::vector<Atom> atoms_;
};

}  // namespace cohere::logic

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cohere/logic.hpp"
#include "cohere/rational.hpp"

namespace cohere::coherence {

struct Entry {
  logic::ConditionalEvent event;
  Rational value;
};

/// A finite set of conditional events with exact values, over a universe whose
/// axioms encode certain logical relations between the events.
class Assessment {
 public:
  /// Throws std::invalid_argument if some conditioning event is impossible or a
  /// value lies outside [0, 1].
  Assessment(std::shared_ptr<const logic::Universe> universe, std::vector<Entry> entries);

  const logic::Universe& universe() const { return *universe_; }
  const std::shared_ptr<const logic::Universe>& universe_ptr() const { return universe_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  Assessment with(Entry extra) const;
  Assessment subset(const std::vector<std::size_t>& indices) const;

  /// E_1, H_1, ..., E_n, H_n followed by `extra`.
  std::vector<logic::Formula> events(const std::vector<logic::Formula>& extra = {}) const;

 private:
  std::shared_ptr<const logic::Universe> universe_;
  std::vector<Entry> entries_;
};

/// One distribution of an agreeing class.
struct Layer {
  std::vector<std::size_t> support;  // the atoms under the still-unresolved H_i
  std::vector<Rational> mass;        // one value per atom, zero outside `support`
};

/// Layered distributions over the atoms of the assessment's events. Entry i is
/// represented at layer resolution[i], the first layer giving H_i positive mass.
struct AgreeingClass {
  std::shared_ptr<const logic::AtomTable> atoms;
  std::vector<Layer> layers;
  std::vector<std::size_t> resolution;

  std::size_t depth() const { return layers.size(); }
};

struct Coherent {
  AgreeingClass agreeing;
};
struct Incoherent {
  std::size_t layer;  // first layer whose system is infeasible
};
using Verdict = std::variant<Coherent, Incoherent>;

/// Decides coherence by solving the layer systems in turn. Each layer resolves
/// every entry whose conditioning event can carry positive mass, so the
/// returned class has maximal supports and pointwise minimal zero-layers.
Verdict check_coherence(const Assessment& a);

inline bool is_coherent(const Verdict& v) { return std::holds_alternative<Coherent>(v); }

/// Atom table over E_1, H_1, ..., E_n, H_n (plus `extra`).
std::shared_ptr<const logic::AtomTable> atoms_for(const Assessment& a, const std::vector<logic::Formula>& extra = {});

/// Runs the layer recursion on a prebuilt atom table whose first 2n events
/// are E_1, H_1, ..., E_n, H_n.
Verdict check_coherence(const Assessment& a, std::shared_ptr<const logic::AtomTable> atoms);

/// Checks every structural property of an agreeing class against `a`:
/// normalization, nesting, positivity at the resolving layer, and the
/// conditional-probability identity for each entry, all exactly.
/// Returns a description of the first violation, or nullopt.
std::optional<std::string> verify_class(const Assessment& a, const AgreeingClass& cls);

/// Natural number or +infinity.
class ZeroLayer {
 public:
  static ZeroLayer finite(std::size_t n) { return ZeroLayer(n); }
  static ZeroLayer infinite() { return ZeroLayer(); }

  bool is_infinite() const { return !value_; }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

  bool operator==(const ZeroLayer&) const = default;
  std::strong_ordering operator<=>(const ZeroLayer& other) const;

 private:
  ZeroLayer() = default;
  explicit ZeroLayer(std::size_t n) : value_(n) {}
  std::optional<std::size_t> value_;
};

/// ord of the event given as a set of atoms: first layer with positive mass,
/// depth() if every layer gives it zero, +inf if the set is empty.
ZeroLayer zero_layer(const AgreeingClass& cls, const std::vector<bool>& atom_set);

/// Throws logic::OutsideAlgebra if `event` splits an atom of the class.
ZeroLayer zero_layer(const AgreeingClass& cls, const logic::Formula& event);

/// ord(E ∧ H) - ord(H), never negative since E ∧ H ⊆ H; +inf when E ∧ H is
/// impossible. Throws std::invalid_argument if H is impossible.
ZeroLayer conditional_zero_layer(const AgreeingClass& cls, const logic::ConditionalEvent& ce);

}  // namespace cohere::coherence

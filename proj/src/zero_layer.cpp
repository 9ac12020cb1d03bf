#include <algorithm>
#include <stdexcept>

#include "cohere/coherence.hpp"

namespace cohere::coherence {

std::strong_ordering ZeroLayer::operator<=>(const ZeroLayer& other) const {
  if (is_infinite() || other.is_infinite()) return is_infinite() <=> other.is_infinite();
  return *value_ <=> *other.value_;
}

namespace {

Rational mass_of(const Layer& layer, const std::vector<bool>& set) {
  Rational s = 0;
  for (std::size_t r = 0; r < set.size(); ++r)
    if (set[r]) s += layer.mass[r];
  return s;
}

}  // namespace

std::optional<std::string> verify_class(const Assessment& a, const AgreeingClass& cls) {
  const std::size_t atom_count = cls.atoms->size();
  if (cls.resolution.size() != a.size()) return "resolution map has wrong length";

  for (std::size_t l = 0; l < cls.layers.size(); ++l) {
    const Layer& layer = cls.layers[l];
    const std::string where = "layer " + std::to_string(l) + ": ";
    if (layer.mass.size() != atom_count) return where + "mass vector has wrong length";
    std::vector<bool> in_support(atom_count, false);
    for (auto r : layer.support) in_support.at(r) = true;
    Rational total = 0;
    for (std::size_t r = 0; r < atom_count; ++r) {
      if (sgn(layer.mass[r]) < 0) return where + "negative mass";
      if (!in_support[r] && sgn(layer.mass[r]) != 0) return where + "mass outside support";
      total += layer.mass[r];
    }
    if (total != 1) return where + "masses sum to " + to_string(total);
    if (l + 1 < cls.layers.size()) {
      const Layer& next = cls.layers[l + 1];
      if (next.support.size() >= layer.support.size()) return where + "next support is not a strict subset";
      for (auto r : next.support) {
        if (!in_support[r]) return where + "next support is not a subset";
        if (sgn(layer.mass[r]) != 0) return where + "positive mass on an atom of the next support";
      }
    }
  }

  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& entry = a.entries()[i];
    const std::string where = "entry " + std::to_string(i + 1) + ": ";
    const std::size_t at = cls.resolution[i];
    if (at >= cls.layers.size()) return where + "resolution layer out of range";
    std::vector<bool> h = cls.atoms->members(entry.event.conditioning);
    std::vector<bool> eh = cls.atoms->members(entry.event.consequent && entry.event.conditioning);
    for (std::size_t l = 0; l < at; ++l)
      if (sgn(mass_of(cls.layers[l], h)) != 0) return where + "positive mass before its resolution layer";
    const Layer& layer = cls.layers[at];
    for (std::size_t r = 0; r < atom_count; ++r) {
      if (h[r] && std::find(layer.support.begin(), layer.support.end(), r) == layer.support.end())
        return where + "conditioning event not inside the support of its layer";
    }
    Rational ph = mass_of(layer, h);
    if (sgn(ph) <= 0) return where + "conditioning event has zero mass at its layer";
    if (mass_of(layer, eh) != entry.value * ph) return where + "conditional value not reproduced";
  }
  return std::nullopt;
}

ZeroLayer zero_layer(const AgreeingClass& cls, const std::vector<bool>& atom_set) {
  if (std::none_of(atom_set.begin(), atom_set.end(), [](bool b) { return b; })) return ZeroLayer::infinite();
  for (std::size_t l = 0; l < cls.layers.size(); ++l)
    if (sgn(mass_of(cls.layers[l], atom_set)) > 0) return ZeroLayer::finite(l);
  return ZeroLayer::finite(cls.layers.size());
}

ZeroLayer zero_layer(const AgreeingClass& cls, const logic::Formula& event) {
  return zero_layer(cls, cls.atoms->members(event));
}

ZeroLayer conditional_zero_layer(const AgreeingClass& cls, const logic::ConditionalEvent& ce) {
  ZeroLayer h = zero_layer(cls, ce.conditioning);
  if (h.is_infinite()) throw std::invalid_argument("conditioning event is impossible");
  ZeroLayer eh = zero_layer(cls, ce.consequent && ce.conditioning);
  if (eh.is_infinite()) return eh;
  return ZeroLayer::finite(eh.value() - h.value());
}

}  // namespace cohere::coherence

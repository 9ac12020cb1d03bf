#pragma once

#include <stdexcept>
#include <vector>

#include "cohere/coherence.hpp"

namespace cohere::extension {

/// Closed interval [lo, hi] of coherent values for one new conditional event.
struct CoherentInterval {
  Rational lo;
  Rational hi;

  bool degenerate() const { return lo == hi; }
  bool contains(const Rational& p) const { return lo <= p && p <= hi; }
  bool operator==(const CoherentInterval&) const = default;
};

class IncoherentBase : public std::runtime_error {
 public:
  IncoherentBase() : std::runtime_error("the base assessment is not coherent") {}
};

/// Range of P(E|H) over the distributions of one layer at which H can first
/// carry positive mass.
struct CandidateLayer {
  std::size_t layer;
  Rational lo;
  Rational hi;
};

/// Uncertified per-layer ranges. At each layer of the augmented recursion the
/// ratio P(E∧H)/P(H) is optimized with P(H) = 1 under the homogeneous
/// constraints of the entries still open there; the walk then continues with
/// H forced to zero mass. Throws IncoherentBase.
std::vector<CandidateLayer> candidate_layers(const coherence::Assessment& a, const logic::ConditionalEvent& target);

/// Every p in the result makes a ∪ {(target, p)} coherent and no other p does.
/// The endpoints and two interior probes are certified with check_coherence.
/// Throws IncoherentBase, or std::invalid_argument if H is impossible.
CoherentInterval coherent_interval(const coherence::Assessment& a, const logic::ConditionalEvent& target);

/// check_coherence on the augmented assessment; false for p outside [0, 1].
bool is_coherent_value(const coherence::Assessment& a, const logic::ConditionalEvent& target, const Rational& p);

}  // namespace cohere::extension

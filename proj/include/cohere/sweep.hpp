#pragma once

// Batch evaluation across many independent instances. Each parallel routine
// has a serial counterpart returning identical results.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "cohere/defaults.hpp"

namespace cohere::sweep {

/// Random formula over propositions 0..props-1 with at most `depth` binary
/// connectives along any path.
logic::Formula random_formula(std::mt19937_64& rng, std::size_t props, int depth);

/// `count` instances with pairwise distinct formulas (structurally).
std::vector<defaults::Instance> random_instances(std::uint64_t seed, std::size_t count, std::size_t props, int depth);

struct SchemaTally {
  std::size_t instances = 0;
  std::size_t applicable = 0;  // premises well formed and consistent, conclusion well formed
  std::size_t entailed = 0;    // among applicable
  std::size_t counterexamples = 0;
  std::optional<std::size_t> first_counterexample;

  bool operator==(const SchemaTally&) const = default;
};

SchemaTally schema_sweep_serial(defaults::Schema s, std::span<const defaults::Instance> instances,
                                const defaults::DefaultKB& base);
SchemaTally schema_sweep(defaults::Schema s, std::span<const defaults::Instance> instances,
                         const defaults::DefaultKB& base);

/// Coherence verdict per assessment.
std::vector<bool> coherent_batch_serial(std::span<const coherence::Assessment> batch);
std::vector<bool> coherent_batch(std::span<const coherence::Assessment> batch);

}  // namespace cohere::sweep

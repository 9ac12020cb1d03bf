#include "cohere/sweep.hpp"

#include <exception>
#include <mutex>

namespace cohere::sweep {

using logic::Formula;

Formula random_formula(std::mt19937_64& rng, std::size_t props, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 1);
  std::uniform_int_distribution<std::size_t> prop(0, props - 1);
  switch (pick(rng)) {
    case 0:
      return Formula::prop(prop(rng));
    case 1:
      return !Formula::prop(prop(rng));
    case 2:
      return !random_formula(rng, props, depth - 1);
    case 3:
      return random_formula(rng, props, depth - 1) && random_formula(rng, props, depth - 1);
    case 4:
      return random_formula(rng, props, depth - 1) || random_formula(rng, props, depth - 1);
    default:
      return Formula::implication(random_formula(rng, props, depth - 1), random_formula(rng, props, depth - 1));
  }
}

std::vector<defaults::Instance> random_instances(std::uint64_t seed, std::size_t count, std::size_t props, int depth) {
  std::mt19937_64 rng(seed);
  std::vector<defaults::Instance> out;
  out.reserve(count);
  while (out.size() < count) {
    defaults::Instance inst{random_formula(rng, props, depth), random_formula(rng, props, depth),
                            random_formula(rng, props, depth)};
    if (inst.a == inst.b || inst.a == inst.c || inst.b == inst.c) continue;
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

struct Outcome {
  bool applicable = false;
  bool entailed = false;
  bool counterexample = false;
};

Outcome classify(defaults::Schema s, const defaults::Instance& inst, const defaults::DefaultKB& base) {
  const auto r = defaults::check_rule_schema(s, inst, base);
  return {r.premises_wellformed && r.premises_consistent && r.conclusion_wellformed, r.conclusion_entailed,
          !r.upholds_schema()};
}

SchemaTally tally(const std::vector<Outcome>& outcomes) {
  SchemaTally t;
  t.instances = outcomes.size();
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].applicable) {
      ++t.applicable;
      if (outcomes[i].entailed) ++t.entailed;
    }
    if (outcomes[i].counterexample) {
      ++t.counterexamples;
      if (!t.first_counterexample) t.first_counterexample = i;
    }
  }
  return t;
}

// Runs fn(i) for i in [0, n) in parallel, rethrowing the first exception.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
  std::exception_ptr error;
  std::mutex guard;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

SchemaTally schema_sweep_serial(defaults::Schema s, std::span<const defaults::Instance> instances,
                                const defaults::DefaultKB& base) {
  std::vector<Outcome> outcomes(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) outcomes[i] = classify(s, instances[i], base);
  return tally(outcomes);
}

SchemaTally schema_sweep(defaults::Schema s, std::span<const defaults::Instance> instances,
                         const defaults::DefaultKB& base) {
  std::vector<Outcome> outcomes(instances.size());
  parallel_for(instances.size(), [&](std::size_t i) { outcomes[i] = classify(s, instances[i], base); });
  return tally(outcomes);
}

std::vector<bool> coherent_batch_serial(std::span<const coherence::Assessment> batch) {
  std::vector<bool> out(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) out[i] = coherence::is_coherent(coherence::check_coherence(batch[i]));
  return out;
}

std::vector<bool> coherent_batch(std::span<const coherence::Assessment> batch) {
  // vector<bool> packs bits, so concurrent writes go through bytes.
  std::vector<unsigned char> flags(batch.size());
  parallel_for(batch.size(), [&](std::size_t i) { flags[i] = coherence::is_coherent(coherence::check_coherence(batch[i])); });
  return {flags.begin(), flags.end()};
}

}  // namespace cohere::sweep

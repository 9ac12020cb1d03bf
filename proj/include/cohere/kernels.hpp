#pragma once

// World-level kernels. Each OpenMP kernel has a serial counterpart that the
// tests compare against and the benchmark times.

#include <cstdint>
#include <span>
#include <vector>

#include "cohere/logic.hpp"

namespace cohere::kernels {

/// Row-major packed signatures, one row per admissible world.
struct SignatureMatrix {
  std::size_t events = 0;
  std::size_t words_per_row = 0;
  std::vector<logic::World> worlds;
  std::vector<std::uint64_t> bits;

  bool test(std::size_t row, std::size_t event) const {
    return (bits[row * words_per_row + (event >> 6)] >> (event & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits.data() + r * words_per_row, words_per_row};
  }
};

/// Evaluates every event's AST on every admissible world.
SignatureMatrix signatures_serial(const logic::Universe& universe, std::span<const logic::Formula> events);

/// Builds one truth table per event, then gathers rows in parallel.
SignatureMatrix signatures_omp(const logic::Universe& universe, std::span<const logic::Formula> events);

/// Groups rows into atoms ordered by first witness.
std::vector<logic::Atom> group_signatures(const SignatureMatrix& matrix);

}  // namespace cohere::kernels

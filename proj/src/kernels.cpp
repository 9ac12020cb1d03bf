#include "cohere/kernels.hpp"

#include <map>

namespace cohere::kernels {

namespace {

SignatureMatrix shape(const logic::Universe& universe, std::size_t events) {
  SignatureMatrix m;
  m.events = events;
  m.words_per_row = (events + 63) / 64;
  m.worlds = universe.worlds();
  m.bits.assign(m.worlds.size() * m.words_per_row, 0);
  return m;
}

}  // namespace

SignatureMatrix signatures_serial(const logic::Universe& universe, std::span<const logic::Formula> events) {
  SignatureMatrix m = shape(universe, events.size());
  for (std::size_t r = 0; r < m.worlds.size(); ++r) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      if (logic::evaluate(events[e], m.worlds[r]))
        m.bits[r * m.words_per_row + (e >> 6)] |= std::uint64_t{1} << (e & 63);
    }
  }
  return m;
}

SignatureMatrix signatures_omp(const logic::Universe& universe, std::span<const logic::Formula> events) {
  SignatureMatrix m = shape(universe, events.size());
  std::vector<logic::TruthTable> tables;
  tables.reserve(events.size());
  for (const auto& e : events) tables.push_back(universe.table(e));

  const auto rows = static_cast<std::int64_t>(m.worlds.size());
  const std::size_t wpr = m.words_per_row;
#pragma omp parallel for schedule(static) if (rows > 4096)
  for (std::int64_t r = 0; r < rows; ++r) {
    const logic::World w = m.worlds[static_cast<std::size_t>(r)];
    std::uint64_t* row = m.bits.data() + static_cast<std::size_t>(r) * wpr;
    for (std::size_t e = 0; e < tables.size(); ++e) {
      if (tables[e].test(w)) row[e >> 6] |= std::uint64_t{1} << (e & 63);
    }
  }
  return m;
}

std::vector<logic::Atom> group_signatures(const SignatureMatrix& matrix) {
  std::vector<logic::Atom> atoms;
  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t r = 0; r < matrix.worlds.size(); ++r) {
    auto row = matrix.row(r);
    std::vector<std::uint64_t> key(row.begin(), row.end());
    auto [it, inserted] = index.emplace(std::move(key), atoms.size());
    if (inserted) {
      logic::Atom atom;
      atom.signature.resize(matrix.events);
      for (std::size_t e = 0; e < matrix.events; ++e) atom.signature[e] = matrix.test(r, e);
      atoms.push_back(std::move(atom));
    }
    atoms[it->second].witnesses.push_back(matrix.worlds[r]);
  }
  return atoms;
}

}  // namespace cohere::kernels

#include "support.hpp"

#include <json.hpp>
#include <optional>

namespace testing_support {

std::shared_ptr<const logic::Universe> universe(std::initializer_list<const char*> props,
                                                std::initializer_list<const char*> axioms) {
  logic::Vocabulary v;
  for (const char* p : props) v.add(p);
  std::vector<logic::Formula> ax;
  for (const char* a : axioms) ax.push_back(logic::parse_formula(a, v));
  return std::make_shared<const logic::Universe>(std::move(v), std::move(ax));
}

logic::Formula formula(const logic::Universe& u, const std::string& text) {
  return logic::parse_formula(text, u.vocabulary());
}

logic::ConditionalEvent conditional(const logic::Universe& u, const std::string& text) {
  return logic::parse_conditional(text, u.vocabulary());
}

coherence::Assessment assessment(std::shared_ptr<const logic::Universe> u,
                                 const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<coherence::Entry> out;
  for (const auto& [event, value] : entries) out.push_back({conditional(*u, event), parse_rational(value)});
  return coherence::Assessment(std::move(u), std::move(out));
}

defaults::DefaultRule rule(const logic::Universe& u, const std::string& h, const std::string& e) {
  return {formula(u, h), formula(u, e)};
}

std::vector<std::string> formula_pool() {
  return {"a", "b", "c", "~a", "~b", "~c", "a & b", "a & c", "b & c", "a v b", "a v c", "b v c"};
}

// ---- vertex enumeration ----------------------------------------------------

namespace {

// Solves the square system M x = r; nullopt if singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> r) {
  const std::size_t n = r.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(r[pivot], r[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
      r[row] -= f * r[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / m[i][i];
  return x;
}

}  // namespace

ratlp::Outcome lp_by_vertices(const ratlp::LinearProgram& lp) {
  const std::size_t n = lp.variables();
  // Candidate tight hyperplanes: every constraint, then x_i = 0.
  std::vector<std::vector<Rational>> planes;
  std::vector<Rational> rhs;
  for (const auto& c : lp.constraints()) {
    planes.push_back(c.coefficients);
    rhs.push_back(c.rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row(n, Rational(0));
    row[i] = 1;
    planes.push_back(row);
    rhs.push_back(0);
  }
  const auto& obj = lp.objective();
  std::optional<ratlp::Optimal> best;
  std::vector<std::size_t> pick(n);
  // Enumerate n-subsets of the planes in lexicographic order.
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  if (planes.size() < n) return ratlp::Infeasible{};
  while (true) {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> r;
    for (auto k : pick) {
      m.push_back(planes[k]);
      r.push_back(rhs[k]);
    }
    if (auto x = solve_square(m, r); x && ratlp::satisfies(lp, *x)) {
      Rational value = 0;
      for (std::size_t i = 0; i < n; ++i) value += obj.coefficients[i] * (*x)[i];
      const bool better = !best || (obj.direction == ratlp::Direction::Maximize ? value > best->value
                                                                                : value < best->value);
      if (better) best = ratlp::Optimal{value, *x};
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == planes.size() - n + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) return ratlp::Infeasible{};
  return *best;
}

// ---- ordered-partition coherence oracle -------------------------------------

bool coherent_by_partitions(const coherence::Assessment& a) {
  const std::size_t n = a.size();
  if (n == 0) return true;
  const auto atoms = coherence::atoms_for(a);
  const std::size_t count = atoms->size();
  std::vector<std::vector<bool>> e(n), h(n);
  for (std::size_t j = 0; j < n; ++j) {
    e[j] = atoms->event_members(2 * j);
    h[j] = atoms->event_members(2 * j + 1);
  }

  std::vector<std::size_t> label(n, 0);
  while (true) {
    std::size_t layers = 0;
    for (auto l : label) layers = std::max(layers, l + 1);
    std::vector<bool> used(layers, false);
    for (auto l : label) used[l] = true;
    bool contiguous = true;
    for (bool u : used) contiguous = contiguous && u;

    bool feasible = contiguous;
    for (std::size_t layer = 0; feasible && layer < layers; ++layer) {
      std::vector<std::size_t> allowed;
      for (std::size_t r = 0; r < count; ++r) {
        bool under_now = false, under_later = false;
        for (std::size_t j = 0; j < n; ++j) {
          under_now = under_now || (label[j] == layer && h[j][r]);
          under_later = under_later || (label[j] > layer && h[j][r]);
        }
        if (under_now && !under_later) allowed.push_back(r);
      }
      ratlp::LinearProgram lp(allowed.size());
      for (std::size_t j = 0; j < n; ++j) {
        if (label[j] != layer) continue;
        const Rational& p = a.entries()[j].value;
        std::vector<Rational> row(allowed.size(), Rational(0));
        std::vector<Rational> mass(allowed.size(), Rational(0));
        for (std::size_t k = 0; k < allowed.size(); ++k) {
          const auto r = allowed[k];
          if (!h[j][r]) continue;
          row[k] = e[j][r] ? Rational(1 - p) : Rational(-p);
          mass[k] = 1;
        }
        lp.add(row, ratlp::Relation::Equal, 0);
        lp.add(mass, ratlp::Relation::GreaterEqual, 1);
      }
      feasible = !std::holds_alternative<ratlp::Infeasible>(ratlp::solve(lp));
    }
    if (feasible) return true;

    std::size_t pos = 0;
    while (pos < n && ++label[pos] == n) label[pos++] = 0;
    if (pos == n) return false;
  }
}

std::pair<Rational, Rational> interval_by_bisection(const coherence::Assessment& a,
                                                    const logic::ConditionalEvent& target, const Rational& seed,
                                                    int iterations) {
  auto ok = [&](const Rational& p) { return coherent_by_partitions(a.with({target, p})); };
  // Largest-known-coherent bracket on each side of the seed.
  Rational lo = seed, hi = seed;
  if (ok(Rational(0))) {
    lo = 0;
  } else {
    Rational bad = 0;
    for (int i = 0; i < iterations; ++i) {
      Rational mid = (bad + lo) / 2;
      if (ok(mid))
        lo = mid;
      else
        bad = mid;
    }
  }
  if (ok(Rational(1))) {
    hi = 1;
  } else {
    Rational bad = 1;
    for (int i = 0; i < iterations; ++i) {
      Rational mid = (bad + hi) / 2;
      if (ok(mid))
        hi = mid;
      else
        bad = mid;
    }
  }
  return {lo, hi};
}

std::vector<std::string> resubstitute_from_json(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  const auto& atoms = doc.at("atoms").at("atoms");
  const auto& layers = doc.at("layers");
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const auto& entry : doc.at("entries")) {
    const auto& masses = layers.at(entry.at("layer").get<std::size_t>()).at("mass");
    Rational eh = 0, h = 0;
    for (std::size_t r = 0; r < atoms.size(); ++r) {
      const auto sig = atoms[r].at("signature").get<std::string>();
      const Rational m = parse_rational(masses.at(r).get<std::string>());
      if (sig.at(2 * i + 1) == '1') {
        h += m;
        if (sig.at(2 * i) == '1') eh += m;
      }
    }
    out.push_back(to_string(Rational(eh / h)));
    ++i;
  }
  return out;
}

}  // namespace testing_support

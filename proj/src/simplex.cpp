#include <stdexcept>

#include "cohere/lp.hpp"

namespace cohere::ratlp {

LinearProgram::LinearProgram(std::size_t variables) : n_(variables) {
  objective_.coefficients.assign(n_, Rational(0));
}

void LinearProgram::add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
  if (coefficients.size() != n_) throw std::invalid_argument("constraint width does not match variable count");
  constraints_.push_back({std::move(coefficients), relation, std::move(rhs)});
}

void LinearProgram::add_sum(const std::vector<std::size_t>& indices, Relation relation, Rational rhs) {
  std::vector<Rational> row(n_, Rational(0));
  for (auto i : indices) row.at(i) += 1;
  add(std::move(row), relation, std::move(rhs));
}

void LinearProgram::set_objective(std::vector<Rational> coefficients, Direction direction) {
  if (coefficients.size() != n_) throw std::invalid_argument("objective width does not match variable count");
  objective_ = {std::move(coefficients), direction};
}

void LinearProgram::maximize_sum(const std::vector<std::size_t>& indices) {
  std::vector<Rational> c(n_, Rational(0));
  for (auto i : indices) c.at(i) += 1;
  set_objective(std::move(c), Direction::Maximize);
}

void LinearProgram::minimize_sum(const std::vector<std::size_t>& indices) {
  std::vector<Rational> c(n_, Rational(0));
  for (auto i : indices) c.at(i) += 1;
  set_objective(std::move(c), Direction::Minimize);
}

namespace {

using Row = std::vector<Rational>;

class Tableau {
 public:
  std::vector<Row> rows;           // B^-1 A | B^-1 b
  std::vector<std::size_t> basis;  // basic column per row
  std::size_t columns = 0;         // excluding rhs

  void pivot(std::size_t r, std::size_t e, Row& reduced) {
    Row& pr = rows[r];
    const Rational inv = 1 / pr[e];
    for (auto& v : pr)
      if (sgn(v) != 0) v *= inv;
    auto eliminate = [&](Row& row) {
      if (sgn(row[e]) == 0) return;
      const Rational f = row[e];
      for (std::size_t j = 0; j <= columns; ++j)
        if (sgn(pr[j]) != 0) row[j] -= f * pr[j];
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r) eliminate(rows[i]);
    eliminate(reduced);
    basis[r] = e;
  }

  Row reduced_costs(const Row& cost) const {
    Row red(columns + 1, Rational(0));
    for (std::size_t j = 0; j < columns; ++j) red[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= columns; ++j)
        if (sgn(rows[i][j]) != 0) red[j] -= cb * rows[i][j];
    }
    return red;
  }

  // Minimizes `cost` over columns [0, allowed). Returns false if unbounded.
  bool minimize(const Row& cost, std::size_t allowed) {
    Row red = reduced_costs(cost);
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(red[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rows[i][columns] / rows[i][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter, red);
    }
  }
};

}  // namespace

Outcome solve(const LinearProgram& lp) {
  const std::size_t n = lp.variables();
  const auto& cons = lp.constraints();
  const std::size_t m = cons.size();

  std::vector<Relation> rel(m);
  std::size_t slacks = 0, artificials = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = cons[i].relation;
    if (sgn(cons[i].rhs) < 0 && rel[i] != Relation::Equal)
      rel[i] = rel[i] == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    if (rel[i] != Relation::Equal) ++slacks;
    if (rel[i] != Relation::LessEqual) ++artificials;
  }

  Tableau t;
  t.columns = n + slacks + artificials;
  const std::size_t first_art = n + slacks;
  t.rows.assign(m, Row(t.columns + 1, Rational(0)));
  t.basis.assign(m, 0);
  std::size_t next_slack = n, next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(cons[i].rhs) < 0;
    Row& row = t.rows[i];
    for (std::size_t j = 0; j < n; ++j) row[j] = flip ? Rational(-cons[i].coefficients[j]) : cons[i].coefficients[j];
    row[t.columns] = flip ? Rational(-cons[i].rhs) : cons[i].rhs;
    if (rel[i] == Relation::LessEqual) {
      row[next_slack] = 1;
      t.basis[i] = next_slack++;
    } else {
      if (rel[i] == Relation::GreaterEqual) row[next_slack++] = -1;
      row[next_art] = 1;
      t.basis[i] = next_art++;
    }
  }

  if (artificials > 0) {
    Row phase1(t.columns, Rational(0));
    for (std::size_t j = first_art; j < t.columns; ++j) phase1[j] = 1;
    t.minimize(phase1, t.columns);
    Rational infeasibility = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i)
      if (t.basis[i] >= first_art) infeasibility += t.rows[i][t.columns];
    if (sgn(infeasibility) > 0) return Infeasible{};

    // Drive zero-level artificials out of the basis; drop redundant rows.
    Row scratch(t.columns + 1, Rational(0));
    for (std::size_t i = 0; i < t.rows.size();) {
      if (t.basis[i] < first_art) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < first_art && sgn(t.rows[i][j]) == 0) ++j;
      if (j < first_art) {
        t.pivot(i, j, scratch);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  const auto& obj = lp.objective();
  Row phase2(t.columns, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    phase2[j] = obj.direction == Direction::Maximize ? Rational(-obj.coefficients[j]) : obj.coefficients[j];
  if (!t.minimize(phase2, first_art)) return Unbounded{};

  Optimal out;
  out.point.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    if (t.basis[i] < n) out.point[t.basis[i]] = t.rows[i][t.columns];
  out.value = 0;
  for (std::size_t j = 0; j < n; ++j) out.value += obj.coefficients[j] * out.point[j];
  return out;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.variables()) return false;
  for (const auto& x : point)
    if (sgn(x) < 0) return false;
  for (const auto& c : lp.constraints()) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coefficients[j] * point[j];
    switch (c.relation) {
      case Relation::Equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::LessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::GreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace cohere::ratlp

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cohere/rational.hpp"

namespace cohere::ratlp {

enum class Relation { Equal, LessEqual, GreaterEqual };
enum class Direction { Maximize, Minimize };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::Equal;
  Rational rhs;
};

struct Objective {
  std::vector<Rational> coefficients;
  Direction direction = Direction::Maximize;
};

/// Variables are implicitly nonnegative. An all-zero objective turns solve()
/// into a feasibility check.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variables() const { return n_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Objective& objective() const { return objective_; }

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs);
  /// Sum of x_i over `indices` related to `rhs`.
  void add_sum(const std::vector<std::size_t>& indices, Relation relation, Rational rhs);
  void set_objective(std::vector<Rational> coefficients, Direction direction);
  void maximize_sum(const std::vector<std::size_t>& indices);
  void minimize_sum(const std::vector<std::size_t>& indices);

 private:
  std::size_t n_;
  std::vector<Constraint> constraints_;
  Objective objective_;
};

struct Infeasible {};
struct Unbounded {};
struct Optimal {
  Rational value;
  std::vector<Rational> point;
};

using Outcome = std::variant<Infeasible, Unbounded, Optimal>;

/// Two-phase dense tableau simplex over exact rationals. Bland's least-index
/// rule for both entering and leaving variables, so it terminates on
/// degenerate programs.
Outcome solve(const LinearProgram& lp);

/// True iff `point` satisfies every constraint exactly and is nonnegative.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& point);

struct SupportResult {
  std::vector<Rational> point;
  std::vector<bool> positive;  // per group: total mass at `point` is > 0
};

/// Feasible point giving positive mass to every group that can carry positive
/// mass in some feasible point. Maximizes the total mass of all groups first,
/// then solves one mass-maximization program per group not already covered by
/// an earlier optimum, and averages the optima with equal weights. The objective of `lp` is ignored. Returns Infeasible when `lp` is.
/// Throws std::logic_error if a group's mass is unbounded.
std::variant<Infeasible, SupportResult> max_support(const LinearProgram& lp,
                                                    const std::vector<std::vector<std::size_t>>& groups);

}  // namespace cohere::ratlp

#include <algorithm>
#include <stdexcept>

#include "cohere/lp.hpp"

namespace cohere::ratlp {

namespace {

Rational mass(const std::vector<Rational>& point, const std::vector<std::size_t>& group) {
  Rational s = 0;
  for (auto i : group) s += point[i];
  return s;
}

}  // namespace

std::variant<Infeasible, SupportResult> max_support(const LinearProgram& lp,
                                                    const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::vector<Rational>> optima;
  std::vector<Rational> fallback;

  // One probe over all groups together usually covers most of them.
  if (groups.size() > 1) {
    std::vector<std::size_t> all;
    for (const auto& group : groups) all.insert(all.end(), group.begin(), group.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    LinearProgram probe = lp;
    probe.maximize_sum(all);
    Outcome outcome = solve(probe);
    if (std::holds_alternative<Infeasible>(outcome)) return Infeasible{};
    if (std::holds_alternative<Unbounded>(outcome)) throw std::logic_error("group mass is unbounded");
    auto& opt = std::get<Optimal>(outcome);
    if (sgn(opt.value) > 0)
      optima.push_back(std::move(opt.point));
    else
      fallback = std::move(opt.point);
  }

  for (const auto& group : groups) {
    bool covered = false;
    for (const auto& p : optima) covered = covered || sgn(mass(p, group)) > 0;
    if (covered) continue;

    LinearProgram probe = lp;
    probe.maximize_sum(group);
    Outcome outcome = solve(probe);
    if (std::holds_alternative<Infeasible>(outcome)) return Infeasible{};
    if (std::holds_alternative<Unbounded>(outcome)) throw std::logic_error("group mass is unbounded");
    auto& opt = std::get<Optimal>(outcome);
    if (sgn(opt.value) > 0)
      optima.push_back(std::move(opt.point));
    else if (fallback.empty())
      fallback = std::move(opt.point);
  }

  SupportResult result;
  if (!optima.empty()) {
    result.point.assign(lp.variables(), Rational(0));
    for (const auto& p : optima)
      for (std::size_t j = 0; j < p.size(); ++j) result.point[j] += p[j];
    const Rational k(static_cast<long>(optima.size()));
    for (auto& x : result.point) x /= k;
  } else if (!fallback.empty()) {
    result.point = std::move(fallback);
  } else {
    LinearProgram probe = lp;
    probe.set_objective(std::vector<Rational>(lp.variables(), Rational(0)), Direction::Maximize);
    Outcome outcome = solve(probe);
    if (std::holds_alternative<Infeasible>(outcome)) return Infeasible{};
    result.point = std::move(std::get<Optimal>(outcome).point);
  }

  result.positive.reserve(groups.size());
  for (const auto& group : groups) result.positive.push_back(sgn(mass(result.point, group)) > 0);
  return result;
}

}  // namespace cohere::ratlp

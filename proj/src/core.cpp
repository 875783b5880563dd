#include "polyra/core.hpp"

#include <algorithm>
#include <numeric>

#include "polyra/lp.hpp"

namespace polyra {

void validate_instance(const ProblemInstance& inst) {
  if (inst.K < 2 || inst.rewards.size() != static_cast<size_t>(inst.K)) {
    throw ValidationError(ValidationIssue::BadTypeCount,
                          "instance needs K >= 2 types and K rewards");
  }
  if (inst.M < 0 || inst.M >= inst.K) {
    throw ValidationError(ValidationIssue::TooManyFlexibleTypes,
                          "M must satisfy 0 <= M < K");
  }
  if (!(inst.C > 0.0)) {
    throw ValidationError(ValidationIssue::NonpositiveCapacity, "C must be positive");
  }
  for (double r : inst.rewards) {
    if (!(r > 0.0)) {
      throw ValidationError(ValidationIssue::NonpositiveReward,
                            "rewards must be positive");
    }
  }
  for (int i = 1; i < inst.K; ++i) {
    if (!(inst.rewards[static_cast<size_t>(i - 1)] < inst.rewards[static_cast<size_t>(i)])) {
      throw ValidationError(ValidationIssue::RewardsNotIncreasing,
                            "rewards must be strictly increasing");
    }
  }
}

double opt_period(const ProblemInstance& inst, std::span<const ArrivalEvent> events) {
  // Unit-size fractional knapsack: take mass in descending reward order.
  std::vector<double> mass_by_type(static_cast<size_t>(inst.K), 0.0);
  for (const ArrivalEvent& e : events) {
    if (e.agent_type < 1 || e.agent_type > inst.K) {
      throw std::invalid_argument("arrival type out of range");
    }
    mass_by_type[static_cast<size_t>(e.agent_type - 1)] += e.mass;
  }
  double remaining = inst.C;
  double value = 0.0;
  for (int k = inst.K; k >= 1 && remaining > 0.0; --k) {
    double take = std::min(remaining, mass_by_type[static_cast<size_t>(k - 1)]);
    value += take * inst.reward(k);
    remaining -= take;
  }
  return value;
}

double opt_total_flexible(const ProblemInstance& inst, const ArrivalSequence& seq) {
  validate_instance(inst);
  const int T = static_cast<int>(seq.periods.size());
  if (T == 0) return 0.0;

  // Variables x_{e,tau}: mass of event e served in period tau. Inflexible
  // events serve in their arrival period; flexible ones may also wait one
  // period, as long as that period is within the horizon.
  struct ServeVar {
    int event_index;
    int period; // 1-based
    double reward;
  };
  std::vector<ServeVar> vars;
  std::vector<double> masses;
  int n_events = 0;
  for (int t = 1; t <= T; ++t) {
    for (const ArrivalEvent& e : seq.periods[static_cast<size_t>(t - 1)]) {
      if (e.agent_type < 1 || e.agent_type > inst.K) {
        throw std::invalid_argument("arrival type out of range");
      }
      const int idx = n_events++;
      masses.push_back(e.mass);
      vars.push_back({idx, t, inst.reward(e.agent_type)});
      if (inst.is_flexible(e.agent_type) && t + 1 <= T) {
        vars.push_back({idx, t + 1, inst.reward(e.agent_type)});
      }
    }
  }
  if (vars.empty()) return 0.0;

  LinearProgram lp;
  lp.objective.resize(vars.size());
  for (size_t v = 0; v < vars.size(); ++v) lp.objective[v] = vars[v].reward;
  // One capacity row per period, one mass row per event.
  for (int t = 1; t <= T; ++t) {
    LpConstraint c;
    c.coeffs.assign(vars.size(), 0.0);
    for (size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].period == t) c.coeffs[v] = 1.0;
    }
    c.rel = Relation::LessEq;
    c.rhs = inst.C;
    lp.constraints.push_back(std::move(c));
  }
  for (int e = 0; e < n_events; ++e) {
    LpConstraint c;
    c.coeffs.assign(vars.size(), 0.0);
    for (size_t v = 0; v < vars.size(); ++v) {
      if (vars[v].event_index == e) c.coeffs[v] = 1.0;
    }
    c.rel = Relation::LessEq;
    c.rhs = masses[static_cast<size_t>(e)];
    lp.constraints.push_back(std::move(c));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("flexible benchmark LP did not solve");
  }
  return sol.objective;
}

double big_G(const ProblemInstance& inst) {
  double sum = 0.0;
  for (int i = inst.M + 2; i <= inst.K; ++i) {
    sum += inst.reward(i - 1) / inst.reward(i);
  }
  return static_cast<double>(inst.K - inst.M) - sum;
}

double ball_queyranne_L(const ProblemInstance& inst) {
  double sum = 0.0;
  for (int i = 1; i < inst.K; ++i) {
    sum += inst.reward(i) / inst.reward(i + 1);
  }
  return 1.0 / (static_cast<double>(inst.K) - sum);
}

} // namespace polyra

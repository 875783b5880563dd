#include "polyra/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polyra {

BucketState BucketState::zero(const ProblemInstance& inst) {
  BucketState s;
  s.row1.assign(static_cast<size_t>(inst.K), 0.0);
  s.row2.assign(static_cast<size_t>(inst.M), 0.0);
  return s;
}

std::vector<double> BucketState::flatten() const {
  std::vector<double> flat;
  flat.reserve(row1.size() + row2.size());
  flat.insert(flat.end(), row1.begin(), row1.end());
  flat.insert(flat.end(), row2.begin(), row2.end());
  return flat;
}

AcceptResult polyra_accept(const ProblemInstance& inst, const Polytope& p,
                           BucketState& state, const ArrivalEvent& event) {
  if (event.agent_type < 1 || event.agent_type > inst.K) {
    throw std::invalid_argument("arrival type out of range");
  }
  AcceptResult res;
  if (event.mass <= 0.0) return res;

  const int k = event.agent_type;
  std::vector<double> flat = state.flatten();
  if (inst.is_flexible(k)) {
    // Second-row bucket first: commit without consuming this period's
    // capacity, then fall back to the first row for the remainder.
    const int coord2 = inst.K + (k - 1);
    res.accepted_row2 = max_increment(p, flat, coord2, event.mass);
    if (res.accepted_row2 > 0.0) {
      state.row2[static_cast<size_t>(k - 1)] += res.accepted_row2;
      flat[static_cast<size_t>(coord2)] += res.accepted_row2;
    }
    const double remaining = event.mass - res.accepted_row2;
    if (remaining > 0.0) {
      res.accepted_row1 = max_increment(p, flat, k - 1, remaining);
      if (res.accepted_row1 > 0.0) state.row1[static_cast<size_t>(k - 1)] += res.accepted_row1;
    }
  } else {
    res.accepted_row1 = max_increment(p, flat, k - 1, event.mass);
    if (res.accepted_row1 > 0.0) state.row1[static_cast<size_t>(k - 1)] += res.accepted_row1;
  }
  return res;
}

EndOfPeriodResult end_of_period(const ProblemInstance& inst, const BucketState& state) {
  EndOfPeriodResult out;
  double used = 0.0;
  double reward = 0.0;
  for (int i = 1; i <= inst.K; ++i) {
    used += state.row1[static_cast<size_t>(i - 1)];
    reward += state.row1[static_cast<size_t>(i - 1)] * inst.reward(i);
  }
  double leftover = inst.C - used;
  if (leftover < -kEps) {
    throw std::runtime_error("row 1 exceeds capacity; polytope must cap it at C");
  }
  leftover = std::max(leftover, 0.0);

  out.served_row2.assign(static_cast<size_t>(inst.M), 0.0);
  out.carried.assign(static_cast<size_t>(inst.M), 0.0);
  for (int i = inst.M; i >= 1; --i) { // higher rewards first
    const double waiting = state.row2[static_cast<size_t>(i - 1)];
    const double serve = std::min(leftover, waiting);
    out.served_row2[static_cast<size_t>(i - 1)] = serve;
    out.carried[static_cast<size_t>(i - 1)] = waiting - serve;
    leftover -= serve;
    reward += serve * inst.reward(i);
  }
  out.period_reward = reward;

  out.next_state = BucketState::zero(inst);
  for (int i = 0; i < inst.M; ++i) {
    out.next_state.row1[static_cast<size_t>(i)] = out.carried[static_cast<size_t>(i)];
  }
  return out;
}

SimulationReport run_simulation(const ProblemInstance& inst, const Polytope& p,
                                const ArrivalSequence& seq) {
  validate_instance(inst);
  if (p.dimension != inst.K + inst.M) {
    throw std::invalid_argument("polytope dimension does not match instance");
  }

  SimulationReport report;
  BucketState state = BucketState::zero(inst);
  const int T = static_cast<int>(seq.periods.size());
  static const PeriodEvents kNoArrivals;

  for (int t = 1; t <= T + 1; ++t) {
    const PeriodEvents& events = t <= T ? seq.periods[static_cast<size_t>(t - 1)] : kNoArrivals;
    PeriodReport pr;
    pr.accepted_by_type.assign(static_cast<size_t>(inst.K), 0.0);
    pr.rejected_by_type.assign(static_cast<size_t>(inst.K), 0.0);

    for (const ArrivalEvent& e : events) {
      if (e.mass < 0.0) throw std::invalid_argument("negative arrival mass");
      AcceptResult r = polyra_accept(inst, p, state, e);
      pr.accepted_by_type[static_cast<size_t>(e.agent_type - 1)] += r.accepted();
      pr.rejected_by_type[static_cast<size_t>(e.agent_type - 1)] += e.mass - r.accepted();
      if (!is_feasible(p, state.flatten())) {
        throw std::runtime_error("state left the polytope after an acceptance");
      }
    }

    EndOfPeriodResult eop = end_of_period(inst, state);
    pr.carried = eop.carried;
    pr.trace.t = t;
    pr.trace.served_mass_by_type = state.row1; // includes carried-in mass
    for (int i = 0; i < inst.M; ++i) {
      pr.trace.served_mass_by_type[static_cast<size_t>(i)] += eop.served_row2[static_cast<size_t>(i)];
    }
    pr.trace.reward_collected = eop.period_reward;
    pr.trace.opt = opt_period(inst, events);
    pr.trace.cr = pr.trace.opt > 0.0 ? eop.period_reward / pr.trace.opt : 1.0;

    report.total_reward += pr.trace.reward_collected;
    report.total_opt += pr.trace.opt;
    if (pr.trace.opt > 0.0) {
      report.min_period_cr = std::min(report.min_period_cr, pr.trace.cr);
    }
    report.periods.push_back(std::move(pr));

    state = std::move(eop.next_state);
    if (!is_feasible(p, state.flatten())) {
      throw std::runtime_error("rollover state left the polytope; polytope inconsistent");
    }
  }
  return report;
}

} // namespace polyra

#pragma once

#include <vector>

#include "polyra/core.hpp"
#include "polyra/polytope.hpp"

namespace polyra {

/// Bucket masses. row1[k-1] holds type-k mass already granted a resource
/// from the current period; row2[k-1] (flexible types only) holds accepted
/// mass still waiting for one.
struct BucketState {
  std::vector<double> row1; // length K
  std::vector<double> row2; // length M

  static BucketState zero(const ProblemInstance& inst);
  /// Concatenation in the shared coordinate order (row 1 then row 2).
  std::vector<double> flatten() const;
};

struct AcceptResult {
  double accepted_row2 = 0.0;
  double accepted_row1 = 0.0;
  double accepted() const { return accepted_row1 + accepted_row2; }
};

/// Processes one arrival against the state. Flexible types fill their
/// second-row bucket first, then their first-row bucket; inflexible types
/// fill their single bucket. Residual mass is rejected. The state is
/// updated in place and stays feasible.
AcceptResult polyra_accept(const ProblemInstance& inst, const Polytope& p,
                           BucketState& state, const ArrivalEvent& event);

struct EndOfPeriodResult {
  std::vector<double> served_row2; // length M, served with leftover capacity
  std::vector<double> carried;     // length M, rolls into next period's row 1
  double period_reward = 0.0;      // row 1 (incl. carried-in) + served_row2
  BucketState next_state;
};

/// Closes a period: leftover capacity C - sum(row1) serves second-row
/// buckets in descending type order; what remains carries into row 1 of the
/// next period. Carried mass earns its reward next period. Throws if row 1
/// exceeds capacity (the polytope failed to enforce it).
EndOfPeriodResult end_of_period(const ProblemInstance& inst, const BucketState& state);

struct PeriodReport {
  PeriodTrace trace;
  std::vector<double> accepted_by_type; // length K, mass accepted this period
  std::vector<double> rejected_by_type; // length K, residual mass dropped
  std::vector<double> carried;          // length M, into the next period
};

struct SimulationReport {
  std::vector<PeriodReport> periods; // includes the trailing no-arrival period
  double min_period_cr = 1.0;        // over periods with opt > 0
  double total_reward = 0.0;
  double total_opt = 0.0;
};

/// Runs the polytope policy over the sequence plus the trailing no-arrival
/// period. Deterministic; asserts feasibility after every accept and
/// rollover.
SimulationReport run_simulation(const ProblemInstance& inst, const Polytope& p,
                                const ArrivalSequence& seq);

} // namespace polyra

#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyra {

/// Global tolerance for feasibility and equality checks. All problems here
/// are tiny and well conditioned, so a single absolute epsilon suffices.
inline constexpr double kEps = 1e-9;

/// An allocation problem: K agent types with strictly increasing rewards,
/// the first M of which are time-flexible, and per-period capacity C.
struct ProblemInstance {
  int K = 0;                   // number of agent types (>= 2)
  int M = 0;                   // number of flexible types (0 <= M < K)
  double C = 0.0;              // capacity per period (> 0)
  std::vector<double> rewards; // r_1 < r_2 < ... < r_K, all positive

  double reward(int type) const { return rewards[static_cast<size_t>(type - 1)]; }
  bool is_flexible(int type) const { return type <= M; }
};

enum class ValidationIssue {
  BadTypeCount,        // K < 2 or rewards.size() != K
  RewardsNotIncreasing,
  NonpositiveReward,
  TooManyFlexibleTypes, // M >= K or M < 0
  NonpositiveCapacity,
};

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationIssue issue, const std::string& what)
      : std::runtime_error(what), issue_(issue) {}
  ValidationIssue issue() const { return issue_; }

 private:
  ValidationIssue issue_;
};

/// Throws ValidationError unless every ProblemInstance invariant holds.
void validate_instance(const ProblemInstance& inst);

/// A (possibly fractional) batch of arriving agents of one type.
struct ArrivalEvent {
  int agent_type = 0; // 1-based index in [K]
  double mass = 0.0;  // > 0 in stored sequences
};

using PeriodEvents = std::vector<ArrivalEvent>;

/// Ordered per-period arrival lists. The trailing no-arrival period that
/// lets last-period flexible agents be served is implicit; the simulation
/// materializes it.
struct ArrivalSequence {
  std::vector<PeriodEvents> periods;
};

/// What one simulated period looked like from the accounting side.
struct PeriodTrace {
  int t = 0;                              // 1-based period index
  std::vector<double> served_mass_by_type; // length K, includes carried-in mass
  double reward_collected = 0.0;
  double opt = 0.0;                        // inflexible clairvoyant optimum
  double cr = 1.0;                         // reward/opt, 1 when opt == 0
};

/// Inflexible clairvoyant optimum for a single period: fractional knapsack
/// with unit-size items, capacity C. Empty input yields 0.
double opt_period(const ProblemInstance& inst, std::span<const ArrivalEvent> events);

/// Flexible clairvoyant optimum over the whole sequence, via a small LP:
/// an event arriving in period t may be served in t, and in t+1 when its
/// type is flexible and t+1 is still within the sequence horizon. Capacity
/// is C per period over exactly the listed periods, so the benchmark gets
/// T*C capacity in total.
double opt_total_flexible(const ProblemInstance& inst, const ArrivalSequence& seq);

/// G = K - M - sum_{i=M+2..K} r_{i-1}/r_i. Lies in [1, K-M); equals 1
/// exactly when K - M == 1.
double big_G(const ProblemInstance& inst);

/// The classic no-flexibility bound 1 / (K - sum_{i<K} r_i/r_{i+1}).
double ball_queyranne_L(const ProblemInstance& inst);

} // namespace polyra

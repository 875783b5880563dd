#include "polyra/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace polyra {
namespace {

ArrivalSequence blocks_to_sequence(const std::vector<std::vector<ArrivalEvent>>& periods) {
  ArrivalSequence seq;
  seq.periods = periods;
  return seq;
}

// All block-boundary prefixes of a two-or-more-period block layout, shortest
// first, each keeping the full period structure (later periods empty).
std::vector<ArrivalSequence> block_truncations(const std::vector<PeriodEvents>& periods) {
  std::vector<ArrivalSequence> out;
  ArrivalSequence prefix;
  prefix.periods.assign(periods.size(), {});
  for (size_t t = 0; t < periods.size(); ++t) {
    for (const ArrivalEvent& block : periods[t]) {
      prefix.periods[t].push_back(block);
      out.push_back(prefix);
    }
  }
  return out;
}

} // namespace

SequenceFamily staircase_family(const ProblemInstance& inst) {
  validate_instance(inst);
  std::vector<PeriodEvents> periods(2);
  for (int k = 1; k <= inst.K; ++k) periods[0].push_back({k, inst.C});
  for (int k = inst.M + 1; k <= inst.K; ++k) periods[1].push_back({k, inst.C});

  SequenceFamily fam;
  fam.label = "staircase";
  fam.sequences.push_back(blocks_to_sequence(periods));
  for (ArrivalSequence& trunc : block_truncations(periods)) {
    fam.sequences.push_back(std::move(trunc));
  }
  return fam;
}

SequenceFamily three_type_inputs(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.K != 3 || (inst.M != 1 && inst.M != 2)) {
    throw std::invalid_argument("three-type inputs need K = 3 and M in {1,2}");
  }
  const double C = inst.C;
  SequenceFamily fam;
  fam.label = "three-type-abcd";

  std::vector<PeriodEvents> a(2);
  a[0] = {{1, 2.0 * C}, {2, C}, {3, C}};
  for (int k = inst.M + 1; k <= 3; ++k) a[1].push_back({k, C});
  fam.sequences.push_back(blocks_to_sequence(a));

  std::vector<PeriodEvents> b(2);
  b[0] = {{1, C}, {2, C}, {3, C}};
  b[1] = {{inst.M + 1, C}};
  fam.sequences.push_back(blocks_to_sequence(b));

  fam.sequences.push_back(blocks_to_sequence({{{1, C}, {2, C}}, {}}));
  fam.sequences.push_back(blocks_to_sequence({{{1, C}}, {}}));
  return fam;
}

WorstCaseVariants alternative_worstcase_variants(const ProblemInstance& inst) {
  validate_instance(inst);
  WorstCaseVariants out;
  out.below_four_types = inst.K < 4;

  // Dropping flexible types j..M from the staircase, one family per j.
  for (int j = inst.M; j >= 1; --j) {
    std::vector<PeriodEvents> periods(2);
    for (int k = 1; k < j; ++k) periods[0].push_back({k, inst.C});
    for (int k = inst.M + 1; k <= inst.K; ++k) periods[0].push_back({k, inst.C});
    for (int k = inst.M + 1; k <= inst.K; ++k) periods[1].push_back({k, inst.C});

    SequenceFamily fam;
    fam.label = "staircase-drop-" + std::to_string(j);
    fam.sequences.push_back(blocks_to_sequence(periods));
    for (ArrivalSequence& trunc : block_truncations(periods)) {
      fam.sequences.push_back(std::move(trunc));
    }
    out.families.push_back(std::move(fam));
  }

  // Full staircase twice, then the inflexible tail in a third period.
  {
    std::vector<PeriodEvents> periods(3);
    for (int t = 0; t < 2; ++t) {
      for (int k = 1; k <= inst.K; ++k) periods[static_cast<size_t>(t)].push_back({k, inst.C});
    }
    for (int k = inst.M + 1; k <= inst.K; ++k) periods[2].push_back({k, inst.C});

    SequenceFamily fam;
    fam.label = "three-period";
    fam.sequences.push_back(blocks_to_sequence(periods));
    for (ArrivalSequence& trunc : block_truncations(periods)) {
      fam.sequences.push_back(std::move(trunc));
    }
    out.families.push_back(std::move(fam));
  }
  return out;
}

SequenceFamily flex_benchmark_family(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.M != inst.K - 1) {
    throw std::invalid_argument("flexible-benchmark family needs M = K-1");
  }
  const double C = inst.C;
  SequenceFamily fam;
  fam.label = "flex-benchmark";

  std::vector<PeriodEvents> full(2);
  for (int k = 1; k <= inst.K; ++k) full[0].push_back({k, 2.0 * C});
  full[1] = full[0];
  fam.sequences.push_back(blocks_to_sequence(full)); // primary I^K

  for (int j = 1; j < inst.K; ++j) {
    std::vector<PeriodEvents> periods(2);
    for (int k = 1; k <= j; ++k) periods[0].push_back({k, 2.0 * C});
    fam.sequences.push_back(blocks_to_sequence(periods)); // I^j
  }
  return fam;
}

namespace {

// Flat-state simulator used only by the exhaustive search. Mirrors the
// engine's acceptance and serving rules but works in place on small arrays
// so the enumeration stays allocation-free.
struct FastSearch {
  const ProblemInstance& inst;
  const Polytope& p;
  int K, M, dim;
  int q, B;
  double C;
  std::vector<double> grid; // event masses C/q .. C

  // Per-depth scratch: state and per-type arrived mass.
  std::vector<std::vector<double>> state_at;
  std::vector<std::vector<double>> arrived_at;
  std::vector<ArrivalEvent> events; // current partial period list
  std::vector<double> roll_buf;     // rollover scratch, reused across nodes
  std::vector<long long> key_buf;   // quantized-state scratch

  double best_cr = std::numeric_limits<double>::infinity();
  ArrivalSequence witness;
  long long evaluated = 0;

  // Distinct start-of-period states discovered for the next level, in
  // discovery order, each with the shortest prefix reaching it.
  std::map<std::vector<long long>, size_t> seen;
  std::vector<std::vector<double>> next_states;
  std::vector<std::vector<PeriodEvents>> next_prefixes;

  FastSearch(const ProblemInstance& inst_, const Polytope& p_, int q_, int B_)
      : inst(inst_), p(p_), K(inst_.K), M(inst_.M), dim(inst_.K + inst_.M), q(q_),
        B(B_), C(inst_.C) {
    for (int i = 1; i < q; ++i) grid.push_back(C * i / q);
    grid.push_back(C); // exact, so saturation below compares reliably
    state_at.assign(static_cast<size_t>(B + 1), std::vector<double>(static_cast<size_t>(dim), 0.0));
    arrived_at.assign(static_cast<size_t>(B + 1), std::vector<double>(static_cast<size_t>(K), 0.0));
    roll_buf.assign(static_cast<size_t>(dim), 0.0);
    key_buf.assign(static_cast<size_t>(dim), 0);
  }

  double increment(const std::vector<double>& state, int coord, double cap) const {
    double eps = cap;
    for (const PolytopeConstraint& c : p.constraints) {
      const double w = c.coeffs[static_cast<size_t>(coord)];
      if (w <= 0.0) continue;
      double lhs = 0.0;
      for (int j = 0; j < dim; ++j) lhs += c.coeffs[static_cast<size_t>(j)] * state[static_cast<size_t>(j)];
      eps = std::min(eps, (c.rhs - lhs) / w);
    }
    return std::max(eps, 0.0);
  }

  void apply_event(const std::vector<double>& in, int type, double mass,
                   std::vector<double>& out) const {
    out = in;
    if (type <= M) {
      const int coord2 = K + (type - 1);
      const double take2 = increment(out, coord2, mass);
      out[static_cast<size_t>(coord2)] += take2;
      const double take1 = increment(out, type - 1, mass - take2);
      out[static_cast<size_t>(type - 1)] += take1;
    } else {
      out[static_cast<size_t>(type - 1)] += increment(out, type - 1, mass);
    }
  }

  // Period reward if the period closed at `state`, and the rollover image.
  double close_reward(const std::vector<double>& state, std::vector<double>* rollover) const {
    double used = 0.0, reward = 0.0;
    for (int i = 1; i <= K; ++i) {
      used += state[static_cast<size_t>(i - 1)];
      reward += state[static_cast<size_t>(i - 1)] * inst.reward(i);
    }
    double leftover = std::max(C - used, 0.0);
    if (rollover) rollover->assign(static_cast<size_t>(dim), 0.0);
    for (int i = M; i >= 1; --i) {
      const double waiting = state[static_cast<size_t>(K + i - 1)];
      const double serve = std::min(leftover, waiting);
      leftover -= serve;
      reward += serve * inst.reward(i);
      if (rollover) (*rollover)[static_cast<size_t>(i - 1)] = waiting - serve;
    }
    return reward;
  }

  double arrived_opt(const std::vector<double>& arrived) const {
    double remaining = C, value = 0.0;
    for (int k = K; k >= 1 && remaining > 0.0; --k) {
      const double take = std::min(remaining, arrived[static_cast<size_t>(k - 1)]);
      value += take * inst.reward(k);
      remaining -= take;
    }
    return value;
  }

  void consider(double cr, const std::vector<PeriodEvents>& prefix) {
    ++evaluated;
    if (cr < best_cr) {
      best_cr = cr;
      witness.periods = prefix;
      witness.periods.push_back(events);
    }
  }

  // Enumerates period contents from state_at[0] by depth-first extension.
  // At every node the period may close; when another level follows, the
  // rollover state is deduplicated for the next round.
  void enumerate(const std::vector<PeriodEvents>& prefix, bool more_periods) {
    expand(0, prefix, more_periods);
  }

  void expand(int depth, const std::vector<PeriodEvents>& prefix, bool more_periods) {
    // Close the period here.
    const double reward = close_reward(state_at[static_cast<size_t>(depth)],
                                       more_periods ? &roll_buf : nullptr);
    const double opt = arrived_opt(arrived_at[static_cast<size_t>(depth)]);
    if (opt > 0.0) consider(reward / opt, prefix);
    if (more_periods) {
      for (int j = 0; j < dim; ++j) {
        key_buf[static_cast<size_t>(j)] = llround(roll_buf[static_cast<size_t>(j)] * 1e10);
      }
      if (seen.find(key_buf) == seen.end()) {
        seen.emplace(key_buf, next_states.size());
        next_states.push_back(roll_buf);
        next_prefixes.push_back(prefix);
        next_prefixes.back().push_back(events);
      }
    }
    if (depth == B) return;

    for (int type = 1; type <= K; ++type) {
      for (int mi = 0; mi < q; ++mi) {
        // Adjacent same-type events merge behaviorally; only a saturated
        // (mass C) event can usefully precede another of its own type.
        if (!events.empty() && events.back().agent_type == type &&
            events.back().mass < grid.back()) {
          continue;
        }
        const double mass = grid[static_cast<size_t>(mi)];
        apply_event(state_at[static_cast<size_t>(depth)], type, mass,
                    state_at[static_cast<size_t>(depth + 1)]);
        arrived_at[static_cast<size_t>(depth + 1)] = arrived_at[static_cast<size_t>(depth)];
        arrived_at[static_cast<size_t>(depth + 1)][static_cast<size_t>(type - 1)] += mass;
        events.push_back({type, mass});
        expand(depth + 1, prefix, more_periods);
        events.pop_back();
      }
    }
  }
};

} // namespace

AdversaryResult exhaustive_adversary(const ProblemInstance& inst, const Polytope& p,
                                     int q, int max_periods, int max_blocks) {
  validate_instance(inst);
  if (p.dimension != inst.K + inst.M) {
    throw std::invalid_argument("polytope dimension does not match instance");
  }
  if (q < 1 || max_periods < 1 || max_blocks < 1) {
    throw std::invalid_argument("adversary knobs must be positive");
  }
  const double budget =
      std::pow(static_cast<double>(inst.K) * q, max_blocks) * max_periods;
  if (budget > 1e7) {
    throw std::invalid_argument("enumeration budget exceeded: (K*q)^B * T > 1e7");
  }

  FastSearch search(inst, p, q, max_blocks);
  // Level-by-level: states reachable at the start of period t, deduplicated.
  std::vector<std::vector<double>> states{std::vector<double>(static_cast<size_t>(inst.K + inst.M), 0.0)};
  std::vector<std::vector<PeriodEvents>> prefixes{{}};
  for (int t = 1; t <= max_periods; ++t) {
    const bool more = t < max_periods;
    search.seen.clear();
    search.next_states.clear();
    search.next_prefixes.clear();
    for (size_t s = 0; s < states.size(); ++s) {
      search.state_at[0] = states[s];
      std::fill(search.arrived_at[0].begin(), search.arrived_at[0].end(), 0.0);
      search.events.clear();
      search.enumerate(prefixes[s], more);
    }
    states = std::move(search.next_states);
    prefixes = std::move(search.next_prefixes);
  }

  AdversaryResult out;
  if (!std::isfinite(search.best_cr)) {
    throw std::runtime_error("adversary enumerated no scored period");
  }
  out.min_cr = search.best_cr;
  out.sequences_evaluated = search.evaluated;
  out.witness = std::move(search.witness);
  out.witness.periods.resize(static_cast<size_t>(max_periods)); // pad trailing periods
  return out;
}

} // namespace polyra

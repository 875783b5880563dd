#pragma once

#include <string>
#include <vector>

#include "polyra/core.hpp"
#include "polyra/engine.hpp"

namespace polyra {

/// A primary worst-case sequence together with its truncations. Element 0
/// is the primary; every later element is a prefix of it (same period
/// boundaries, events cut at a block edge).
struct SequenceFamily {
  std::string label;
  std::vector<ArrivalSequence> sequences;

  const ArrivalSequence& primary() const { return sequences.front(); }
};

/// Two periods of ascending full-capacity blocks (types 1..K, then the
/// inflexible tail M+1..K), plus all 2K - M block-boundary truncations.
SequenceFamily staircase_family(const ProblemInstance& inst);

/// The four three-type worst-case inputs a-d (K = 3, M in {1,2}).
SequenceFamily three_type_inputs(const ProblemInstance& inst);

struct WorstCaseVariants {
  std::vector<SequenceFamily> families;
  /// True when K < 4; the variants are defined but the tightness argument
  /// they probe only bites beyond three types.
  bool below_four_types = false;
};

/// Alternative worst-case families: for each j in [M] the staircase with
/// flexible types j..M removed, plus the three-period variant that repeats
/// the full staircase before the inflexible tail.
WorstCaseVariants alternative_worstcase_variants(const ProblemInstance& inst);

/// Families I^1..I^K behind the flexible-benchmark negative result
/// (requires M = K-1): I^j sends 2C of each type 1..j in period one, and
/// I^K repeats its load over two periods.
SequenceFamily flex_benchmark_family(const ProblemInstance& inst);

struct AdversaryResult {
  double min_cr = 1.0;
  ArrivalSequence witness;
  long long sequences_evaluated = 0;
};

/// Exhaustive search over arrival sequences with at most `max_blocks`
/// events per period over `max_periods` periods, event masses on the grid
/// {C/q, 2C/q, ..., C}. Returns the worst per-period CR and the first
/// attaining sequence in enumeration order (lexicographic by period,
/// position, type, mass). Deterministic. Throws if the enumeration budget
/// (K*q)^max_blocks * max_periods exceeds 1e7.
AdversaryResult exhaustive_adversary(const ProblemInstance& inst, const Polytope& p,
                                     int q, int max_periods, int max_blocks);

} // namespace polyra

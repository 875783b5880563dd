#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polyra/core.hpp"
#include "polyra/nests.hpp"

namespace polyra {

enum class Relation { LessEq, GreaterEq, Equal };

struct LpConstraint {
  std::vector<double> coeffs;
  Relation rel = Relation::LessEq;
  double rhs = 0.0;
};

/// max objective . x  subject to the constraints and x >= 0.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::string> var_names; // optional, same length as objective

  int num_vars() const { return static_cast<int>(objective.size()); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double objective = 0.0;
  std::vector<double> x;
  std::vector<double> slacks; // per original constraint, >= -eps when optimal
  std::vector<std::string> var_names; // copied from the program, for reporting
};

/// Dense two-phase tableau simplex with Bland's rule. Deterministic:
/// identical input produces a bit-identical solution.
LpSolution solve_lp(const LinearProgram& lp);

/// Optimal solution of the three-type upper-bound LP. `served[i][t]` is the
/// mass of type i+1 served with period t+1 resources in the worst case.
struct ThreeTypeBound {
  double gamma = 0.0;
  std::array<std::array<double, 2>, 3> served{}; // s[i][t]
  bool canonicalized = false; // true when the M=1 column swap was applied
};

/// Solves the three-type upper-bound LP (K = 3, M in {1,2}). Canonicalizes
/// the M=1 solution so that served[0][0] >= served[0][1], then verifies the
/// tightness identities that the polytope constructions rely on; a
/// violation means the solver mis-solved and throws.
ThreeTypeBound three_type_upper_bound(const ProblemInstance& inst);

/// Closed form of the simplified K-type upper-bound LP (requires M >= 1):
/// 2 / (2G + M - sum_{i=1..M+1} r_{i-1}/r_i - r_M/r_{M+1} + r_M/r_K), r_0 = 0.
double gamma_lp_closed_form(const ProblemInstance& inst);

/// Solves the simplified upper-bound LP directly (x = [Gamma, s_1..s_K]).
/// Cross-checks against the closed-form serving plan: the plan must make
/// every row tight and the optimum may never fall below it; whenever the
/// objectives agree the returned plan must equal the closed form. The
/// optimum does exceed the closed form for some reward vectors (leaving a
/// middle row slack can beat the all-tight vertex), so exact agreement is
/// not enforced.
LpSolution solve_simple_upper(const ProblemInstance& inst);

/// min(gamma_lp_closed_form, 1/G): upper bound on the CR of any algorithm.
double gamma_up(const ProblemInstance& inst);

/// CR attained by the booking-limit policy with the given nests, via LP.
double nested_cr(const ProblemInstance& inst, const NestSizes& nests);

/// Best CR over all nest vectors, solved jointly as one LP. Returns the
/// optimum and an optimizing nest vector.
std::pair<double, NestSizes> best_nested_cr(const ProblemInstance& inst);

/// Optimum of the nested-CR LP with the per-scenario capacity rows dropped
/// (requires M >= 1). Upper-bounds every nested policy; must agree with
/// gamma_bar_closed_form and throws on mismatch.
double solve_nested_relaxation(const ProblemInstance& inst);

/// LP behind the flexible-benchmark negative result (requires M == K-1):
/// max Gamma s.t. sum_{i<=k} a_i r_i >= 2 Gamma r_k C and sum a_i <= 2C.
/// x = [Gamma, a_1..a_K]. Optimum must equal ball_queyranne_L and the a_k
/// must match 2*Gamma*(1 - r_{k-1}/r_k)*C; throws on mismatch.
LpSolution solve_flex_benchmark_lp(const ProblemInstance& inst);

} // namespace polyra

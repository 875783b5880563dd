#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyra/core.hpp"
#include "polyra/lp.hpp"
#include "polyra/nests.hpp"

namespace polyra {

/// One row: coeffs . state <= rhs, with all coeffs >= 0 and rhs >= 0.
struct PolytopeConstraint {
  std::vector<double> coeffs;
  double rhs = 0.0;
};

/// Feasibility polytope over bucket coordinates. Coordinate order is fixed
/// project-wide: b_{1,1}..b_{M,1}, b_{M+1}..b_K, b_{1,2}..b_{M,2}.
/// Nonnegative coefficients make every polytope downward closed.
struct Polytope {
  int dimension = 0; // K + M
  std::vector<PolytopeConstraint> constraints;
  std::string label;
};

bool is_feasible(const Polytope& p, std::span<const double> state, double eps = kEps);

/// Largest eps in [0, cap] with state + eps*e_coord still feasible:
/// min over constraints touching `coord` of slack/coefficient, clamped.
/// Throws if the input state is already infeasible.
double max_increment(const Polytope& p, std::span<const double> state, int coord,
                     double cap);

/// Booking-limit polytope of the given nests: prefix sums within each row
/// are capped at n_k for the flexible prefix, and row 1 plus the inflexible
/// coordinates are capped at n_k for k > M. K + M constraints.
Polytope nested_polytope(const ProblemInstance& inst, const NestSizes& nests);

/// Optimal two-type polytope with one flexible type (K = 2, M = 1):
/// per-row booking limit C/(3 - r1/r2) plus the capacity row.
Polytope two_type_flex_polytope(const ProblemInstance& inst);

/// Optimal two-type polytope with no flexibility (K = 2, M = 0):
/// booking limit C/(2 - r1/r2) plus the capacity row.
Polytope two_type_inflex_polytope(const ProblemInstance& inst);

/// Optimal three-type polytope for M = 1, built from a canonicalized
/// three-type upper-bound solution. Not nested: it caps the weighted
/// combination (r3-r1) b_{1,1} + (r3-r2) b_2. Consistency is re-checked
/// and a failure throws.
Polytope three_type_m1_polytope(const ProblemInstance& inst, const ThreeTypeBound& sol);

/// Optimal three-type nests for M = 2: n_1 = (s11+s12)/2,
/// n_2 = n_1 + (s21+s22)/2, n_3 = C.
NestSizes three_type_m2_nests(const ProblemInstance& inst, const ThreeTypeBound& sol);

/// Closed-form near-optimal nests (requires M >= 1); deltas sum to C.
NestSizes near_optimal_nests(const ProblemInstance& inst);

/// 2 / (2G + M - sum_{i=1..M+1} r_{i-1}/r_i) with r_0 = 0 (requires M >= 1).
double gamma_bar_closed_form(const ProblemInstance& inst);

/// Lower-bound factors for the near-optimality argument, as functions of G.
/// The branch flag says whether twice the flexible booking limit exceeds C.
double f1_formula(double G, bool two_nm_exceeds_C);
double f2_formula(double G, bool two_nm_exceeds_C);

/// Instance-level factors: evaluate the formulas at G = big_G(inst) with the
/// branch chosen from near_optimal_nests (ties go to the <= branch).
double f1_factor(const ProblemInstance& inst);
double f2_factor(const ProblemInstance& inst);

struct ConsistencyReport {
  bool passed = false;
  bool downward_closed = false;       // structural: all coefficients >= 0
  int samples_checked = 0;
  std::optional<std::vector<double>> witness_state;   // failing state, if any
  std::optional<std::vector<double>> witness_updated; // its rollover image
  std::string detail;
};

/// Checks the two consistency properties: downward closure structurally,
/// and rollover feasibility on sampled feasible states. The rollover image
/// assumes the worst case of no leftover capacity, so the entire second row
/// carries into row one.
ConsistencyReport check_consistency(const ProblemInstance& inst, const Polytope& p,
                                    int samples = 1000, std::uint64_t seed = 1);

} // namespace polyra

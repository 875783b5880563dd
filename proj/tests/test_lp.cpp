#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "polyra/lp.hpp"
#include "polyra/polytope.hpp"

using namespace polyra;

namespace {

ProblemInstance make(int K, int M, double C, std::vector<double> r) {
  return ProblemInstance{K, M, C, std::move(r)};
}

ProblemInstance random_instance(std::mt19937_64& rng, int K, int M) {
  std::uniform_real_distribution<double> ratio(0.05, 0.95);
  std::uniform_real_distribution<double> top(0.5, 8.0);
  std::uniform_real_distribution<double> cap(0.5, 4.0);
  ProblemInstance inst{K, M, cap(rng), std::vector<double>(static_cast<size_t>(K))};
  inst.rewards[static_cast<size_t>(K - 1)] = top(rng);
  for (int i = K - 1; i >= 1; --i) {
    inst.rewards[static_cast<size_t>(i - 1)] = inst.rewards[static_cast<size_t>(i)] * ratio(rng);
  }
  return inst;
}

LinearProgram tiny_lp() {
  LinearProgram lp;
  lp.objective = {1.0, 1.0};
  lp.constraints.push_back({{1.0, 1.0}, Relation::LessEq, 1.0});
  lp.constraints.push_back({{1.0, 0.0}, Relation::LessEq, 0.25});
  return lp;
}

} // namespace

TEST_CASE("simplex basics") {
  {
    LinearProgram lp;
    lp.objective = {1.0};
    lp.constraints.push_back({{1.0}, Relation::LessEq, 3.0});
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(3.0));
  }
  {
    const LpSolution sol = solve_lp(tiny_lp());
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(1.0));
    CHECK(sol.x[1] == doctest::Approx(0.75));
  }
  {
    LinearProgram lp; // equality handling
    lp.objective = {1.0, 2.0};
    lp.constraints.push_back({{1.0, 1.0}, Relation::Equal, 1.0});
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::Optimal);
    CHECK(sol.objective == doctest::Approx(2.0));
  }
  {
    LinearProgram lp; // infeasible
    lp.objective = {1.0};
    lp.constraints.push_back({{1.0}, Relation::GreaterEq, 2.0});
    lp.constraints.push_back({{1.0}, Relation::LessEq, 1.0});
    CHECK(solve_lp(lp).status == LpStatus::Infeasible);
  }
  {
    LinearProgram lp; // unbounded
    lp.objective = {1.0};
    CHECK(solve_lp(lp).status == LpStatus::Unbounded);
  }
}

TEST_CASE("simplex is deterministic") {
  const LpSolution a = solve_lp(tiny_lp());
  const LpSolution b = solve_lp(tiny_lp());
  REQUIRE(a.x.size() == b.x.size());
  CHECK(std::memcmp(a.x.data(), b.x.data(), a.x.size() * sizeof(double)) == 0);
  CHECK(std::memcmp(&a.objective, &b.objective, sizeof(double)) == 0);
}

TEST_CASE("feasibility of returned points") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> pick_k(2, 6);
  for (int trial = 0; trial < 50; ++trial) {
    const int K = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(1, K - 1);
    const ProblemInstance inst = random_instance(rng, K, pick_m(rng));
    const LpSolution sol = solve_simple_upper(inst);
    REQUIRE(sol.status == LpStatus::Optimal);
    for (double s : sol.slacks) CHECK(s >= -1e-9);
    for (double v : sol.x) CHECK(v >= -1e-9);
  }
}

TEST_CASE("three-type upper bound at the plotted ratios") {
  struct Case { int M; double gamma; double expect; };
  const Case cases[] = {
      {1, 0.25, 0.48},       // exactly 12/25
      {1, 0.50, 10.0 / 17},
      {1, 0.75, 44.0 / 59},
      {2, 0.25, 2.0 / 3.5},
      {2, 0.50, 2.0 / 3.0},
      {2, 0.75, 0.8},
  };
  for (const Case& c : cases) {
    const ProblemInstance inst =
        make(3, c.M, 1.0, {c.gamma * c.gamma, c.gamma, 1.0});
    const ThreeTypeBound b = three_type_upper_bound(inst);
    CHECK(b.gamma == doctest::Approx(c.expect).epsilon(1e-9));
  }
}

TEST_CASE("three-type bound serving plan at gamma = 0.5, M = 1") {
  // Unique optimum, solved by hand from the tightness identities.
  const ProblemInstance inst = make(3, 1, 1.0, {0.25, 0.5, 1.0});
  const ThreeTypeBound b = three_type_upper_bound(inst);
  CHECK(b.gamma == doctest::Approx(10.0 / 17).epsilon(1e-10));
  CHECK(b.served[0][0] == doctest::Approx(6.0 / 17).epsilon(1e-9));
  CHECK(b.served[0][1] == doctest::Approx(4.0 / 17).epsilon(1e-9));
  CHECK(b.served[1][0] == doctest::Approx(5.0 / 17).epsilon(1e-9));
  CHECK(b.served[1][1] == doctest::Approx(8.0 / 17).epsilon(1e-9));
  CHECK(b.served[2][0] == doctest::Approx(6.0 / 17).epsilon(1e-9));
  CHECK(b.served[2][1] == doctest::Approx(5.0 / 17).epsilon(1e-9));
  // Capacity rows sum to C in both periods.
  for (int t = 0; t < 2; ++t) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) sum += b.served[static_cast<size_t>(i)][static_cast<size_t>(t)];
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(three_type_upper_bound(inst).gamma == b.gamma); // deterministic
}

TEST_CASE("wrong shapes are rejected") {
  CHECK_THROWS(three_type_upper_bound(make(2, 1, 1.0, {1.0, 2.0})));
  CHECK_THROWS(three_type_upper_bound(make(3, 0, 1.0, {1.0, 2.0, 3.0})));
  CHECK_THROWS(gamma_lp_closed_form(make(3, 0, 1.0, {1.0, 2.0, 3.0})));
  CHECK_THROWS(solve_flex_benchmark_lp(make(3, 1, 1.0, {1.0, 2.0, 3.0})));
}

TEST_CASE("simplified upper bound and its closed form") {
  CHECK(gamma_lp_closed_form(make(2, 1, 1.0, {1.0, 2.0})) == doctest::Approx(0.8));
  CHECK(gamma_lp_closed_form(make(3, 1, 1.0, {0.25, 0.5, 1.0})) ==
        doctest::Approx(2.0 / 3.25));
  CHECK(gamma_lp_closed_form(make(3, 2, 1.0, {0.25, 0.5, 1.0})) ==
        doctest::Approx(2.0 / 3.0));

  const LpSolution sol = solve_simple_upper(make(2, 1, 1.0, {1.0, 2.0}));
  CHECK(sol.objective == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(sol.x[1] == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(sol.x[2] == doctest::Approx(1.2).epsilon(1e-10));
  CHECK(sol.x[1] + sol.x[2] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("simplified bound can exceed its closed form") {
  // With two flexible types double-counted by the middle rows, skipping the
  // cheap inflexible type 3 entirely beats the all-tight serving plan. The
  // expected optimum was cross-checked with an independent LP solver.
  const ProblemInstance inst =
      make(5, 2, 1.624775, {0.288715, 0.329546, 0.385386, 1.801665, 2.523512});
  const LpSolution sol = solve_simple_upper(inst);
  CHECK(sol.objective == doctest::Approx(0.5570487071079605).epsilon(1e-9));
  CHECK(gamma_lp_closed_form(inst) == doctest::Approx(0.542216).epsilon(1e-5));
  CHECK(sol.x[3] == doctest::Approx(0.0)); // the skipped type
  // The optimum never falls below the closed form; with two types it always
  // matches it exactly.
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> pick_k(2, 6);
    const int K = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(1, K - 1);
    const ProblemInstance rand_inst = random_instance(rng, K, pick_m(rng));
    const double lp = solve_simple_upper(rand_inst).objective;
    const double closed = gamma_lp_closed_form(rand_inst);
    CHECK(lp >= closed - 1e-9);
    if (K == 2) CHECK(lp == doctest::Approx(closed).epsilon(1e-9));
  }
}

TEST_CASE("combined upper bound") {
  CHECK(gamma_up(make(3, 1, 1.0, {0.25, 0.5, 1.0})) == doctest::Approx(2.0 / 3.25));
  CHECK(gamma_up(make(2, 1, 1.0, {1.0, 2.0})) == doctest::Approx(0.8));
  // The general bound is looser than the tight three-type bound.
  const ProblemInstance inst = make(3, 1, 1.0, {0.25, 0.5, 1.0});
  CHECK(gamma_up(inst) >= three_type_upper_bound(inst).gamma);
}

TEST_CASE("nested-CR program") {
  const ProblemInstance two = make(2, 1, 1.0, {1.0, 2.0});
  CHECK(nested_cr(two, NestSizes{{1.0 / 2.5, 1.0}}) == doctest::Approx(0.8).epsilon(1e-10));

  const ProblemInstance three = make(3, 2, 1.0, {0.25, 0.5, 1.0});
  const ThreeTypeBound b = three_type_upper_bound(three);
  CHECK(nested_cr(three, three_type_m2_nests(three, b)) ==
        doctest::Approx(b.gamma).epsilon(1e-9));

  // Degenerate nests wall off every low type; the first revenue row then
  // forces a zero ratio.
  CHECK(nested_cr(two, NestSizes{{0.0, 1.0}}) == doctest::Approx(0.0));

  CHECK_THROWS(nested_cr(two, NestSizes{{0.7, 0.3}}));
}

TEST_CASE("best nested policy") {
  const ProblemInstance two = make(2, 1, 1.0, {1.0, 2.0});
  const auto [best_two, nests_two] = best_nested_cr(two);
  CHECK(best_two == doctest::Approx(0.8).epsilon(1e-9));

  const ProblemInstance three = make(3, 2, 1.0, {0.25, 0.5, 1.0});
  CHECK(best_nested_cr(three).first == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> pick_k(2, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const int K = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(1, K - 1);
    const ProblemInstance inst = random_instance(rng, K, pick_m(rng));
    const double best = best_nested_cr(inst).first;
    const double closed = nested_cr(inst, near_optimal_nests(inst));
    CHECK(best >= closed - 1e-9); // the optimum dominates the closed-form point
  }
}

TEST_CASE("nested relaxation equals its closed form") {
  CHECK(solve_nested_relaxation(make(3, 2, 1.0, {0.25, 0.5, 1.0})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(solve_nested_relaxation(make(2, 1, 1.0, {1.0, 2.0})) ==
        doctest::Approx(0.8).epsilon(1e-10));
}

TEST_CASE("chain of nested bounds on random instances") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> pick_k(2, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const int K = pick_k(rng);
    std::uniform_int_distribution<int> pick_m(1, K - 1);
    const ProblemInstance inst = random_instance(rng, K, pick_m(rng));
    const double closed_point = nested_cr(inst, near_optimal_nests(inst));
    const double relaxed = gamma_bar_closed_form(inst);
    CHECK(closed_point <= relaxed + 1e-9);
    CHECK(closed_point >= 0.8 * gamma_up(inst) - 1e-9);
    // Dropping the last two denominator terms only shrinks it.
    CHECK(relaxed <= gamma_lp_closed_form(inst) + 1e-12);
    // The relaxation caps every nested policy, including the best one.
    if (trial < 20) CHECK(best_nested_cr(inst).first <= relaxed + 1e-9);
  }
}

TEST_CASE("flexible-benchmark negative result") {
  const LpSolution sol = solve_flex_benchmark_lp(make(2, 1, 1.0, {1.0, 2.0}));
  CHECK(sol.objective == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(sol.x[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-10));
  CHECK(sol.x[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(sol.x[1] + sol.x[2] == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("extreme reward spreads stay finite") {
  // Ratios pushed toward both ends of the valid range, tiny and large C.
  const std::vector<ProblemInstance> extremes = {
      make(4, 1, 1e-3, {1e-9, 1e-6, 1e-3, 1.0}),
      make(4, 3, 1e3, {1.0, 1.0 + 1e-6, 1.0 + 2e-6, 1.0 + 3e-6}),
      make(8, 4, 2.0, {0.01, 0.02, 0.04, 0.08, 0.16, 0.32, 0.64, 1.28}),
      make(2, 1, 5.0, {1.0, 1e6}),
  };
  for (const ProblemInstance& inst : extremes) {
    const double up = gamma_up(inst);
    CHECK(std::isfinite(up));
    CHECK(up > 0.0);
    CHECK(up <= 1.0 + 1e-9);
    const double cr = nested_cr(inst, near_optimal_nests(inst));
    CHECK(cr >= 0.8 * up - 1e-7);
    CHECK(cr <= gamma_bar_closed_form(inst) + 1e-7);
    CHECK(best_nested_cr(inst).first >= cr - 1e-7);
  }
}

// Two small inequalities used inside the near-optimality proof; both make
// handy randomized oracles for the factor formulas.
TEST_CASE("product-slack inequality") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> extra(-1.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    double prod = 1.0, sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = unit(rng);
      prod *= x;
      sum += x;
    }
    const double c = sum + extra(rng);
    CHECK(prod * (c - sum) <= std::exp(-(n + 1 - c)) + 1e-12);
  }
}

TEST_CASE("constrained product inequality") {
  // Fixing the sum at n - 1 + eps forces the product of unit-interval terms
  // to stay at least eps (the floor is approached by sending all but one
  // term to 1).
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> unit(1e-3, 1.0 - 1e-3);
  std::uniform_int_distribution<int> size(2, 6);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = size(rng);
    const double eps = unit(rng);
    // Build x in (0,1)^n with sum exactly n - 1 + eps by scaling deficits.
    std::vector<double> x(static_cast<size_t>(n));
    double deficit_total = 0.0;
    for (double& v : x) {
      v = unit(rng);
      deficit_total += 1.0 - v;
    }
    const double want_deficit = 1.0 - eps;
    double prod = 1.0;
    for (double& v : x) {
      v = 1.0 - (1.0 - v) * want_deficit / deficit_total;
      prod *= v;
    }
    CHECK(prod >= eps - 1e-9);
  }
}

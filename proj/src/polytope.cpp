#include "polyra/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace polyra {

void validate_nests(const NestSizes& nests, double C, double eps) {
  if (nests.n.empty()) throw std::invalid_argument("empty nest vector");
  double prev = 0.0;
  for (double v : nests.n) {
    if (v < prev - eps) throw std::invalid_argument("nest sizes must be nondecreasing");
    prev = std::max(prev, v);
  }
  if (std::abs(nests.n.back() - C) > eps) {
    throw std::invalid_argument("last nest size must equal C");
  }
}

bool is_feasible(const Polytope& p, std::span<const double> state, double eps) {
  for (double v : state) {
    if (v < -eps) return false;
  }
  for (const PolytopeConstraint& c : p.constraints) {
    double lhs = 0.0;
    for (size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * state[j];
    if (lhs > c.rhs + eps) return false;
  }
  return true;
}

double max_increment(const Polytope& p, std::span<const double> state, int coord,
                     double cap) {
  if (cap < 0.0) throw std::invalid_argument("max_increment cap must be nonnegative");
  if (!is_feasible(p, state)) {
    throw std::invalid_argument("max_increment called on infeasible state");
  }
  double eps = cap;
  for (const PolytopeConstraint& c : p.constraints) {
    const double w = c.coeffs[static_cast<size_t>(coord)];
    if (w <= 0.0) continue;
    double lhs = 0.0;
    for (size_t j = 0; j < c.coeffs.size(); ++j) lhs += c.coeffs[j] * state[j];
    eps = std::min(eps, (c.rhs - lhs) / w);
  }
  return std::max(eps, 0.0);
}

Polytope nested_polytope(const ProblemInstance& inst, const NestSizes& nests) {
  validate_instance(inst);
  if (nests.size() != inst.K) throw std::invalid_argument("need one nest size per type");
  validate_nests(nests, inst.C, kEps);

  const int K = inst.K, M = inst.M;
  Polytope p;
  p.dimension = K + M;
  std::ostringstream label;
  label << "nested(";
  for (int i = 0; i < K; ++i) label << (i ? "," : "") << nests.n[static_cast<size_t>(i)];
  label << ")";
  p.label = label.str();

  for (int k = 1; k <= M; ++k) {
    for (int row = 1; row <= 2; ++row) {
      PolytopeConstraint c;
      c.coeffs.assign(static_cast<size_t>(K + M), 0.0);
      const int base = row == 1 ? 0 : K;
      for (int i = 1; i <= k; ++i) c.coeffs[static_cast<size_t>(base + i - 1)] = 1.0;
      c.rhs = nests.n[static_cast<size_t>(k - 1)];
      p.constraints.push_back(std::move(c));
    }
  }
  for (int k = M + 1; k <= K; ++k) {
    PolytopeConstraint c;
    c.coeffs.assign(static_cast<size_t>(K + M), 0.0);
    for (int i = 1; i <= M; ++i) c.coeffs[static_cast<size_t>(i - 1)] = 1.0;
    for (int i = M + 1; i <= k; ++i) c.coeffs[static_cast<size_t>(i - 1)] = 1.0;
    c.rhs = nests.n[static_cast<size_t>(k - 1)];
    p.constraints.push_back(std::move(c));
  }
  return p;
}

Polytope two_type_flex_polytope(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.K != 2 || inst.M != 1) {
    throw std::invalid_argument("flexible two-type polytope needs K = 2, M = 1");
  }
  const double limit = inst.C / (3.0 - inst.reward(1) / inst.reward(2));
  Polytope p = nested_polytope(inst, NestSizes{{limit, inst.C}});
  p.label = "bf";
  return p;
}

Polytope two_type_inflex_polytope(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.K != 2 || inst.M != 0) {
    throw std::invalid_argument("inflexible two-type polytope needs K = 2, M = 0");
  }
  const double limit = inst.C / (2.0 - inst.reward(1) / inst.reward(2));
  Polytope p = nested_polytope(inst, NestSizes{{limit, inst.C}});
  p.label = "bi";
  return p;
}

Polytope three_type_m1_polytope(const ProblemInstance& inst, const ThreeTypeBound& sol) {
  validate_instance(inst);
  if (inst.K != 3 || inst.M != 1) {
    throw std::invalid_argument("this polytope needs K = 3, M = 1");
  }
  const auto& s = sol.served;
  if (s[0][0] < s[0][1] - kEps) {
    throw std::invalid_argument("bound solution must be canonicalized (s_1_1 >= s_1_2)");
  }
  const double d31 = inst.reward(3) - inst.reward(1);
  const double d32 = inst.reward(3) - inst.reward(2);

  Polytope p;
  p.dimension = 4; // b_{1,1}, b_2, b_3, b_{1,2}
  p.label = "b1";
  p.constraints.push_back({{1.0, 1.0, 1.0, 0.0}, s[0][0] + s[1][0] + s[2][0]});
  p.constraints.push_back({{d31, d32, 0.0, 0.0}, d31 * s[0][0] + d32 * s[1][0]});
  p.constraints.push_back({{1.0, 0.0, 0.0, 0.0}, s[0][0]});
  p.constraints.push_back({{0.0, 0.0, 0.0, 1.0}, s[0][1]});

  ConsistencyReport report = check_consistency(inst, p, 512, 20240803);
  if (!report.passed) {
    throw std::runtime_error("constructed polytope failed the consistency check: " +
                             report.detail);
  }
  return p;
}

NestSizes three_type_m2_nests(const ProblemInstance& inst, const ThreeTypeBound& sol) {
  validate_instance(inst);
  if (inst.K != 3 || inst.M != 2) {
    throw std::invalid_argument("these nests need K = 3, M = 2");
  }
  const auto& s = sol.served;
  NestSizes nests;
  nests.n = {0.5 * (s[0][0] + s[0][1]),
             0.5 * (s[0][0] + s[0][1] + s[1][0] + s[1][1]), inst.C};
  return nests;
}

NestSizes near_optimal_nests(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.M < 1) throw std::invalid_argument("near-optimal nests need M >= 1");
  const double gbar = gamma_bar_closed_form(inst);
  NestSizes nests;
  nests.n.resize(static_cast<size_t>(inst.K));
  double run = 0.0;
  for (int i = 1; i <= inst.K; ++i) {
    const double prev_ratio = i == 1 ? 0.0 : inst.reward(i - 1) / inst.reward(i);
    double delta;
    if (i <= inst.M) {
      delta = 0.5 * gbar * (1.0 - prev_ratio) * inst.C;
    } else if (i == inst.M + 1) {
      delta = gbar * (1.0 - 0.5 * prev_ratio) * inst.C;
    } else {
      delta = gbar * (1.0 - prev_ratio) * inst.C;
    }
    run += delta;
    nests.n[static_cast<size_t>(i - 1)] = run;
  }
  if (std::abs(run - inst.C) > kEps * std::max(1.0, inst.C)) {
    throw std::runtime_error("nest deltas must sum to C");
  }
  nests.n.back() = inst.C;
  return nests;
}

double gamma_bar_closed_form(const ProblemInstance& inst) {
  validate_instance(inst);
  if (inst.M < 1) throw std::invalid_argument("closed form needs M >= 1");
  double ratio_sum = 0.0;
  for (int i = 2; i <= inst.M + 1; ++i) ratio_sum += inst.reward(i - 1) / inst.reward(i);
  return 2.0 / (2.0 * big_G(inst) + inst.M - ratio_sum);
}

double f1_formula(double G, bool two_nm_exceeds_C) {
  if (!two_nm_exceeds_C) return 1.0;
  return 1.0 - 0.5 * std::exp(-2.0 * G + 1.0);
}

double f2_formula(double G, bool two_nm_exceeds_C) {
  const double m = std::max(2.0 - G, 0.0);
  if (!two_nm_exceeds_C) return 1.0 - (1.0 - m) / (2.0 * G + 1.0 - m);
  return 1.0 - (1.0 - m) / (4.0 * G - 2.0);
}

namespace {
bool flexible_nests_exceed_half(const ProblemInstance& inst) {
  if (inst.M < 1) return false;
  const NestSizes nests = near_optimal_nests(inst);
  // Ties go to the <= branch, where f1 is exactly 1.
  return 2.0 * nests.n[static_cast<size_t>(inst.M - 1)] > inst.C + kEps;
}
} // namespace

double f1_factor(const ProblemInstance& inst) {
  return f1_formula(big_G(inst), flexible_nests_exceed_half(inst));
}

double f2_factor(const ProblemInstance& inst) {
  return f2_formula(big_G(inst), flexible_nests_exceed_half(inst));
}

ConsistencyReport check_consistency(const ProblemInstance& inst, const Polytope& p,
                                    int samples, std::uint64_t seed) {
  ConsistencyReport report;
  if (p.dimension != inst.K + inst.M) {
    report.detail = "dimension mismatch with instance";
    return report;
  }

  report.downward_closed = true;
  for (const PolytopeConstraint& c : p.constraints) {
    if (static_cast<int>(c.coeffs.size()) != p.dimension) {
      report.detail = "constraint width mismatch";
      report.downward_closed = false;
      return report;
    }
    for (double w : c.coeffs) {
      if (w < 0.0) report.downward_closed = false;
    }
    if (c.rhs < 0.0) report.downward_closed = false;
  }
  if (!report.downward_closed) {
    report.detail = "negative coefficient or rhs breaks downward closure";
    return report;
  }

  // Per-coordinate bounding box from single-variable slack at the origin.
  std::vector<double> box(static_cast<size_t>(p.dimension), 2.0 * inst.C);
  for (int j = 0; j < p.dimension; ++j) {
    for (const PolytopeConstraint& c : p.constraints) {
      const double w = c.coeffs[static_cast<size_t>(j)];
      if (w > 0.0) box[static_cast<size_t>(j)] = std::min(box[static_cast<size_t>(j)], c.rhs / w);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> state(static_cast<size_t>(p.dimension));
  std::vector<double> updated(static_cast<size_t>(p.dimension));
  for (int s = 0; s < samples; ++s) {
    for (int j = 0; j < p.dimension; ++j) {
      state[static_cast<size_t>(j)] = unit(rng) * box[static_cast<size_t>(j)];
    }
    // Rejection sampling with a shrink fallback; shrinking stays correct
    // because the polytope is downward closed.
    int tries = 0;
    while (!is_feasible(p, state) && ++tries <= 60) {
      for (double& v : state) v *= 0.8;
    }
    ++report.samples_checked;

    // Worst-case rollover: nothing served at period end, the whole second
    // row carries into row one.
    std::fill(updated.begin(), updated.end(), 0.0);
    for (int i = 0; i < inst.M; ++i) {
      updated[static_cast<size_t>(i)] = state[static_cast<size_t>(inst.K + i)];
    }
    if (!is_feasible(p, updated)) {
      report.witness_state = state;
      report.witness_updated = updated;
      report.detail = "rollover of a feasible state left the polytope";
      return report;
    }
  }
  report.passed = true;
  report.detail = "ok";
  return report;
}

} // namespace polyra

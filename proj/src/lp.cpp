#include "polyra/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyra {
namespace {

constexpr double kPivotEps = 1e-9;

// Dense two-phase tableau. Bland's rule on both phases keeps the pivot
// sequence finite and deterministic.
class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp) : lp_(lp) {
    const int n = lp.num_vars();
    const int m = static_cast<int>(lp.constraints.size());
    n_struct_ = n;
    // Column layout: structural | slack/surplus | artificial.
    int n_slack = 0;
    for (const LpConstraint& c : lp.constraints) {
      if (c.rel != Relation::Equal) ++n_slack;
    }
    slack_base_ = n;
    art_base_ = n + n_slack;
    n_cols_ = art_base_ + m; // at most one artificial per row
    rows_.assign(static_cast<size_t>(m), std::vector<double>(static_cast<size_t>(n_cols_) + 1, 0.0));
    basis_.assign(static_cast<size_t>(m), -1);

    int slack_at = slack_base_;
    int art_at = art_base_;
    n_art_ = 0;
    for (int r = 0; r < m; ++r) {
      const LpConstraint& c = lp.constraints[static_cast<size_t>(r)];
      if (static_cast<int>(c.coeffs.size()) != n) {
        throw std::invalid_argument("LP constraint width does not match variable count");
      }
      double sign = 1.0;
      Relation rel = c.rel;
      if (c.rhs < 0.0) { // normalize to nonnegative rhs
        sign = -1.0;
        if (rel == Relation::LessEq) rel = Relation::GreaterEq;
        else if (rel == Relation::GreaterEq) rel = Relation::LessEq;
      }
      auto& row = rows_[static_cast<size_t>(r)];
      for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = sign * c.coeffs[static_cast<size_t>(j)];
      row[static_cast<size_t>(n_cols_)] = sign * c.rhs;

      if (rel == Relation::LessEq) {
        row[static_cast<size_t>(slack_at)] = 1.0;
        basis_[static_cast<size_t>(r)] = slack_at++;
      } else if (rel == Relation::GreaterEq) {
        row[static_cast<size_t>(slack_at++)] = -1.0;
        row[static_cast<size_t>(art_at)] = 1.0;
        basis_[static_cast<size_t>(r)] = art_at++;
        ++n_art_;
      } else {
        if (c.rel != Relation::Equal) ++slack_at; // unreachable, keeps layout stable
        row[static_cast<size_t>(art_at)] = 1.0;
        basis_[static_cast<size_t>(r)] = art_at++;
        ++n_art_;
      }
    }
  }

  LpSolution solve() {
    LpSolution out;
    if (n_art_ > 0 && !phase_one()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    if (!phase_two()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x.assign(static_cast<size_t>(n_struct_), 0.0);
    for (size_t r = 0; r < rows_.size(); ++r) {
      const int b = basis_[r];
      if (b < n_struct_) out.x[static_cast<size_t>(b)] = rhs(static_cast<int>(r));
    }
    out.objective = 0.0;
    for (int j = 0; j < n_struct_; ++j) {
      out.objective += lp_.objective[static_cast<size_t>(j)] * out.x[static_cast<size_t>(j)];
    }
    out.slacks.reserve(lp_.constraints.size());
    for (const LpConstraint& c : lp_.constraints) {
      double lhs = 0.0;
      for (int j = 0; j < n_struct_; ++j) {
        lhs += c.coeffs[static_cast<size_t>(j)] * out.x[static_cast<size_t>(j)];
      }
      double s = c.rel == Relation::GreaterEq ? lhs - c.rhs : c.rhs - lhs;
      if (c.rel == Relation::Equal) s = -std::abs(lhs - c.rhs);
      out.slacks.push_back(s);
    }
    return out;
  }

 private:
  double& at(int r, int j) { return rows_[static_cast<size_t>(r)][static_cast<size_t>(j)]; }
  double rhs(int r) const { return rows_[static_cast<size_t>(r)][static_cast<size_t>(n_cols_)]; }

  void pivot(int pr, int pc) {
    auto& prow = rows_[static_cast<size_t>(pr)];
    const double pv = prow[static_cast<size_t>(pc)];
    for (double& v : prow) v /= pv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<int>(r) == pr) continue;
      const double f = rows_[r][static_cast<size_t>(pc)];
      if (f == 0.0) continue;
      for (size_t j = 0; j <= static_cast<size_t>(n_cols_); ++j) {
        rows_[r][j] -= f * prow[j];
      }
      rows_[r][static_cast<size_t>(pc)] = 0.0;
    }
    const double f = cost_[static_cast<size_t>(pc)];
    if (f != 0.0) {
      for (size_t j = 0; j <= static_cast<size_t>(n_cols_); ++j) {
        cost_[j] -= f * prow[j];
      }
      cost_[static_cast<size_t>(pc)] = 0.0;
    }
    basis_[static_cast<size_t>(pr)] = pc;
  }

  // Maximizes the current cost row. Returns false on unboundedness.
  bool run(int allowed_cols) {
    const long max_iter = 2000L * (static_cast<long>(rows_.size()) + n_cols_ + 1);
    for (long iter = 0; iter < max_iter; ++iter) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) { // Bland: lowest eligible index
        if (cost_[static_cast<size_t>(j)] > kPivotEps) { enter = j; break; }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
        const double a = at(r, enter);
        if (a > kPivotEps) {
          const double ratio = rhs(r) / a;
          if (ratio < best_ratio - kPivotEps ||
              (ratio < best_ratio + kPivotEps &&
               (leave < 0 || basis_[static_cast<size_t>(r)] < basis_[static_cast<size_t>(leave)]))) {
            best_ratio = ratio;
            leave = r;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex failed to converge");
  }

  bool phase_one() {
    // Maximize -sum(artificials); feasible iff the optimum is ~0.
    cost_.assign(static_cast<size_t>(n_cols_) + 1, 0.0);
    for (int j = art_base_; j < n_cols_; ++j) cost_[static_cast<size_t>(j)] = -1.0;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (basis_[static_cast<size_t>(r)] >= art_base_) {
        for (size_t j = 0; j <= static_cast<size_t>(n_cols_); ++j) {
          cost_[j] += rows_[static_cast<size_t>(r)][j];
        }
      }
    }
    if (!run(art_base_)) {
      throw std::runtime_error("phase one cannot be unbounded");
    }
    double infeas = 0.0;
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (basis_[static_cast<size_t>(r)] >= art_base_) infeas += rhs(r);
    }
    if (infeas > 1e-7 * scale()) return false;
    // Drive leftover artificials out of the basis so later pivots cannot
    // re-inflate them.
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      if (basis_[static_cast<size_t>(r)] < art_base_) continue;
      int pc = -1;
      for (int j = 0; j < art_base_; ++j) {
        if (std::abs(at(r, j)) > kPivotEps) { pc = j; break; }
      }
      if (pc >= 0) pivot(r, pc);
      // else: the row is redundant; the artificial stays basic at zero and
      // is barred from re-entering, which keeps it at zero.
    }
    return true;
  }

  bool phase_two() {
    cost_.assign(static_cast<size_t>(n_cols_) + 1, 0.0);
    for (int j = 0; j < n_struct_; ++j) cost_[static_cast<size_t>(j)] = lp_.objective[static_cast<size_t>(j)];
    for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
      const int b = basis_[static_cast<size_t>(r)];
      const double cb = b < n_struct_ ? lp_.objective[static_cast<size_t>(b)] : 0.0;
      if (cb != 0.0) {
        for (size_t j = 0; j <= static_cast<size_t>(n_cols_); ++j) {
          cost_[j] -= cb * rows_[static_cast<size_t>(r)][j];
        }
      }
    }
    return run(art_base_);
  }

  double scale() const {
    double s = 1.0;
    for (const LpConstraint& c : lp_.constraints) s = std::max(s, std::abs(c.rhs));
    return s;
  }

  const LinearProgram& lp_;
  std::vector<std::vector<double>> rows_;
  std::vector<double> cost_;
  std::vector<int> basis_;
  int n_struct_ = 0;
  int slack_base_ = 0;
  int art_base_ = 0;
  int n_cols_ = 0;
  int n_art_ = 0;
};

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_identity(double lhs, double rhs, double tol, const char* what) {
  if (std::abs(lhs - rhs) > tol) {
    throw std::runtime_error(std::string("LP postcondition violated: ") + what);
  }
}

// Identity tolerance for cross-checking solver output against closed forms.
// Well above accumulated rounding, far below any real violation.
constexpr double kCheckTol = 1e-7;

} // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  for (const LpConstraint& c : lp.constraints) {
    for (double v : c.coeffs) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite LP coefficient");
    }
    if (!std::isfinite(c.rhs)) throw std::invalid_argument("non-finite LP rhs");
  }
  SimplexTableau tab(lp);
  LpSolution sol = tab.solve();
  sol.var_names = lp.var_names;
  return sol;
}

ThreeTypeBound three_type_upper_bound(const ProblemInstance& inst) {
  validate_instance(inst);
  require(inst.K == 3 && (inst.M == 1 || inst.M == 2),
          "three-type bound needs K = 3 and M in {1,2}");
  const double r1 = inst.reward(1), r2 = inst.reward(2), r3 = inst.reward(3);
  const double C = inst.C;
  const int M = inst.M;

  // Variables: [Gamma, s11, s21, s31, s12, s22, s32].
  auto sv = [](int i, int t) { return 1 + (t - 1) * 3 + (i - 1); };
  LinearProgram lp;
  lp.objective.assign(7, 0.0);
  lp.objective[0] = 1.0;
  lp.var_names = {"gamma", "s_1_1", "s_2_1", "s_3_1", "s_1_2", "s_2_2", "s_3_2"};

  auto row = [&](std::vector<std::pair<int, double>> terms, Relation rel, double rhs) {
    LpConstraint c;
    c.coeffs.assign(7, 0.0);
    for (auto& [j, v] : terms) c.coeffs[static_cast<size_t>(j)] += v;
    c.rel = rel;
    c.rhs = rhs;
    lp.constraints.push_back(std::move(c));
  };

  for (int t = 1; t <= 2; ++t) {
    row({{sv(1, t), 1.0}, {sv(2, t), 1.0}, {sv(3, t), 1.0}}, Relation::LessEq, C);
  }
  for (int t = 1; t <= 2; ++t) {
    row({{0, r3 * C}, {sv(1, t), -r1}, {sv(2, t), -r2}, {sv(3, t), -r3}},
        Relation::LessEq, 0.0);
  }
  row({{0, r1 * C}, {sv(1, 1), -r1}, {sv(1, 2), -r1}}, Relation::LessEq, 0.0);
  {
    // Gamma r2 C <= (C - sum_{t<=M} s2t) r1 + (sum_{t<=M} s2t) r2
    std::vector<std::pair<int, double>> terms{{0, r2 * C}};
    for (int t = 1; t <= M; ++t) terms.push_back({sv(2, t), -(r2 - r1)});
    row(std::move(terms), Relation::LessEq, C * r1);
  }
  {
    std::vector<std::pair<int, double>> terms{{0, r2 * C}, {sv(1, 1), -r1}, {sv(1, 2), -r1}};
    for (int t = 1; t <= M; ++t) terms.push_back({sv(2, t), -r2});
    row(std::move(terms), Relation::LessEq, 0.0);
  }
  if (M == 1) {
    row({{0, r2 * C}, {sv(1, 2), -r1}, {sv(2, 2), -r2}}, Relation::LessEq, 0.0);
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("three-type upper-bound LP did not solve");
  }

  ThreeTypeBound out;
  out.gamma = sol.objective;
  for (int i = 1; i <= 3; ++i) {
    for (int t = 1; t <= 2; ++t) {
      out.served[static_cast<size_t>(i - 1)][static_cast<size_t>(t - 1)] =
          sol.x[static_cast<size_t>(sv(i, t))];
    }
  }
  // The constructions need the worst case front-loaded; any optimal vertex
  // with the columns swapped is equally optimal, so swap back.
  if (M == 1 && out.served[0][0] < out.served[0][1]) {
    for (auto& s : out.served) std::swap(s[0], s[1]);
    out.canonicalized = true;
  }

  const auto& s = out.served;
  const double g = out.gamma;
  double sum2 = 0.0;
  for (int t = 0; t < M; ++t) sum2 += s[1][static_cast<size_t>(t)];
  const double tol = kCheckTol * std::max(1.0, r3 * C);
  for (int t = 0; t < 2; ++t) {
    check_identity(s[0][static_cast<size_t>(t)] + s[1][static_cast<size_t>(t)] + s[2][static_cast<size_t>(t)], C, tol,
                   "per-period serving must exhaust capacity");
    check_identity(r1 * s[0][static_cast<size_t>(t)] + r2 * s[1][static_cast<size_t>(t)] + r3 * s[2][static_cast<size_t>(t)],
                   g * r3 * C, tol, "top-type revenue row must be tight");
  }
  check_identity(r1 * (s[0][0] + s[0][1]), g * r1 * C, tol,
                 "type-1 revenue row must be tight");
  check_identity(r1 * std::min(s[0][0] + s[0][1], C - sum2) + r2 * sum2, g * r2 * C, tol,
                 "type-2 revenue row must be tight");
  if (M == 1) {
    check_identity(r1 * s[0][1] + r2 * s[1][1], g * r2 * C, tol,
                   "second-period type-2 revenue row must be tight");
    if (s[0][0] < s[0][1] - tol) {
      throw std::runtime_error("canonicalization failed to order the columns");
    }
  }
  return out;
}

double gamma_lp_closed_form(const ProblemInstance& inst) {
  validate_instance(inst);
  require(inst.M >= 1, "closed form needs at least one flexible type");
  double ratio_sum = 0.0; // sum_{i=1..M+1} r_{i-1}/r_i with r_0 = 0
  for (int i = 2; i <= inst.M + 1; ++i) ratio_sum += inst.reward(i - 1) / inst.reward(i);
  const double rM = inst.reward(inst.M);
  const double denom = 2.0 * big_G(inst) + inst.M - ratio_sum -
                       rM / inst.reward(inst.M + 1) + rM / inst.reward(inst.K);
  return 2.0 / denom;
}

LpSolution solve_simple_upper(const ProblemInstance& inst) {
  validate_instance(inst);
  require(inst.M >= 1, "simplified upper bound needs at least one flexible type");
  const int K = inst.K, M = inst.M;
  const double C = inst.C;

  LinearProgram lp;
  lp.objective.assign(static_cast<size_t>(K) + 1, 0.0);
  lp.objective[0] = 1.0;
  lp.var_names.push_back("gamma");
  for (int i = 1; i <= K; ++i) lp.var_names.push_back("s_" + std::to_string(i));

  auto add = [&](double gamma_coef, int upto, double flex_weight, double rhs_cap) {
    LpConstraint c;
    c.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
    c.coeffs[0] = gamma_coef;
    for (int i = 1; i <= upto; ++i) {
      const double w = i <= M ? flex_weight : 1.0;
      c.coeffs[static_cast<size_t>(i)] = -w * inst.reward(i);
    }
    c.rel = Relation::LessEq;
    c.rhs = rhs_cap;
    lp.constraints.push_back(std::move(c));
  };
  for (int k = 1; k <= M; ++k) add(inst.reward(k) * C, k, 1.0, 0.0);
  for (int k = M + 1; k <= K - 1; ++k) add(2.0 * inst.reward(k) * C, k, 2.0, 0.0);
  add(2.0 * inst.reward(K) * C, K, 1.0, 0.0);
  {
    LpConstraint c;
    c.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
    for (int i = 1; i <= K; ++i) c.coeffs[static_cast<size_t>(i)] = 1.0;
    c.rel = Relation::LessEq;
    c.rhs = 2.0 * C;
    lp.constraints.push_back(std::move(c));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("simplified upper-bound LP did not solve");
  }
  const double tol = kCheckTol * std::max(1.0, inst.reward(K) * C);

  // Cross-check against the closed-form serving plan. That plan satisfies
  // every row with equality, which pins down two guarantees: the plan must
  // be feasible here (tightness row by row catches any mis-built
  // constraint), and the solver may never come in below its objective.
  // The plan is not always the LP optimum, though: the flexible prefix is
  // double-counted by the middle rows but only single-counted by the last
  // one, so skimping on a cheap inflexible type can beat the all-tight
  // vertex outright. When the objectives do coincide the optimum is unique
  // and the returned plan must match the closed form exactly.
  const double closed = gamma_lp_closed_form(inst);
  std::vector<double> plan(static_cast<size_t>(K) + 1, 0.0);
  plan[0] = closed;
  for (int i = 1; i <= K; ++i) {
    const double prev_ratio = i == 1 ? 0.0 : inst.reward(i - 1) / inst.reward(i);
    if (i <= M) {
      plan[static_cast<size_t>(i)] = closed * (1.0 - prev_ratio) * C;
    } else if (i < K) {
      plan[static_cast<size_t>(i)] = 2.0 * closed * (1.0 - prev_ratio) * C;
    } else {
      plan[static_cast<size_t>(i)] =
          2.0 * closed * (1.0 - prev_ratio + 0.5 * inst.reward(M) / inst.reward(K)) * C;
    }
  }
  for (const LpConstraint& c : lp.constraints) {
    double lhs = 0.0;
    for (int j = 0; j <= K; ++j) lhs += c.coeffs[static_cast<size_t>(j)] * plan[static_cast<size_t>(j)];
    check_identity(lhs, c.rhs, tol, "closed-form plan must make every row tight");
  }
  if (sol.objective < closed - tol) {
    throw std::runtime_error("LP postcondition violated: optimum below the feasible plan");
  }
  if (std::abs(sol.objective - closed) <= tol) {
    for (int i = 0; i <= K; ++i) {
      check_identity(sol.x[static_cast<size_t>(i)], plan[static_cast<size_t>(i)], tol,
                     "serving plan must match its closed form at agreement");
    }
  }
  return sol;
}

double gamma_up(const ProblemInstance& inst) {
  return std::min(gamma_lp_closed_form(inst), 1.0 / big_G(inst));
}

namespace {

// Shared builder for the nested-CR LPs. When `nests` is null the nest sizes
// are decision variables n_1 <= ... <= n_K = C; otherwise they are fixed
// constants. `with_capacity` toggles the per-scenario capacity rows.
LinearProgram build_nested_lp(const ProblemInstance& inst, const NestSizes* nests,
                              bool with_capacity) {
  const int K = inst.K, M = inst.M;
  const double C = inst.C;
  const bool free_nests = nests == nullptr;
  const int n_offset = 1;                       // n_i at 1..K when free
  const int s_offset = free_nests ? 1 + K : 1;  // s_i^j block start
  auto s_index = [&](int i, int j) { return s_offset + j * (j - 1) / 2 + (i - 1); };
  const int nvars = s_offset + K * (K + 1) / 2;

  LinearProgram lp;
  lp.objective.assign(static_cast<size_t>(nvars), 0.0);
  lp.objective[0] = 1.0;
  lp.var_names.assign(static_cast<size_t>(nvars), "");
  lp.var_names[0] = "gamma";
  if (free_nests) {
    for (int i = 1; i <= K; ++i) lp.var_names[static_cast<size_t>(n_offset + i - 1)] = "n_" + std::to_string(i);
  }
  for (int j = 1; j <= K; ++j) {
    for (int i = 1; i <= j; ++i) {
      lp.var_names[static_cast<size_t>(s_index(i, j))] =
          "s_" + std::to_string(i) + "_" + std::to_string(j);
    }
  }

  auto blank = [&]() {
    LpConstraint c;
    c.coeffs.assign(static_cast<size_t>(nvars), 0.0);
    return c;
  };
  // Adds +/- delta-n_i to a row: as variables when free, else into the rhs.
  auto add_delta = [&](LpConstraint& c, int i, double w) {
    if (free_nests) {
      c.coeffs[static_cast<size_t>(n_offset + i - 1)] += w;
      if (i >= 2) c.coeffs[static_cast<size_t>(n_offset + i - 2)] -= w;
    } else {
      c.rhs -= w * nests->delta(i);
    }
  };

  for (int j = 1; j <= K; ++j) {
    LpConstraint c = blank(); // Gamma C r_j <= sum_i r_i s_i^j
    c.coeffs[0] = C * inst.reward(j);
    for (int i = 1; i <= j; ++i) c.coeffs[static_cast<size_t>(s_index(i, j))] = -inst.reward(i);
    c.rel = Relation::LessEq;
    c.rhs = 0.0;
    lp.constraints.push_back(std::move(c));
  }
  if (with_capacity) {
    for (int j = 1; j <= K; ++j) {
      LpConstraint c = blank();
      for (int i = 1; i <= j; ++i) c.coeffs[static_cast<size_t>(s_index(i, j))] = 1.0;
      c.rel = Relation::LessEq;
      c.rhs = C;
      lp.constraints.push_back(std::move(c));
    }
  }
  for (int j = 1; j <= K; ++j) {
    for (int i = 1; i <= j; ++i) {
      if (j <= M) {
        LpConstraint lo = blank(); // s_i^j >= delta n_i
        lo.coeffs[static_cast<size_t>(s_index(i, j))] = 1.0;
        add_delta(lo, i, -1.0);
        lo.rel = Relation::GreaterEq;
        lp.constraints.push_back(std::move(lo));
        LpConstraint hi = blank(); // s_i^j <= 2 delta n_i
        hi.coeffs[static_cast<size_t>(s_index(i, j))] = 1.0;
        add_delta(hi, i, -2.0);
        hi.rel = Relation::LessEq;
        lp.constraints.push_back(std::move(hi));
      } else {
        LpConstraint hi = blank(); // s_i^j <= delta n_i
        hi.coeffs[static_cast<size_t>(s_index(i, j))] = 1.0;
        add_delta(hi, i, -1.0);
        hi.rel = Relation::LessEq;
        lp.constraints.push_back(std::move(hi));
      }
    }
  }
  if (free_nests) {
    for (int i = 2; i <= K; ++i) {
      LpConstraint c = blank(); // n_i >= n_{i-1}
      c.coeffs[static_cast<size_t>(n_offset + i - 1)] = 1.0;
      c.coeffs[static_cast<size_t>(n_offset + i - 2)] = -1.0;
      c.rel = Relation::GreaterEq;
      c.rhs = 0.0;
      lp.constraints.push_back(std::move(c));
    }
    LpConstraint c = blank(); // n_K = C
    c.coeffs[static_cast<size_t>(n_offset + K - 1)] = 1.0;
    c.rel = Relation::Equal;
    c.rhs = C;
    lp.constraints.push_back(std::move(c));
  }
  return lp;
}

} // namespace

double nested_cr(const ProblemInstance& inst, const NestSizes& nests) {
  validate_instance(inst);
  validate_nests(nests, inst.C, kEps);
  LpSolution sol = solve_lp(build_nested_lp(inst, &nests, /*with_capacity=*/true));
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("nested-CR LP did not solve");
  }
  return sol.objective;
}

std::pair<double, NestSizes> best_nested_cr(const ProblemInstance& inst) {
  validate_instance(inst);
  LpSolution sol = solve_lp(build_nested_lp(inst, nullptr, /*with_capacity=*/true));
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("joint nested-CR LP did not solve");
  }
  NestSizes nests;
  nests.n.resize(static_cast<size_t>(inst.K));
  double run = 0.0;
  for (int i = 1; i <= inst.K; ++i) {
    // Clean tiny numeric violations of monotonicity before reuse.
    run = std::max(run, std::min(sol.x[static_cast<size_t>(i)], inst.C));
    nests.n[static_cast<size_t>(i - 1)] = run;
  }
  nests.n.back() = inst.C;
  return {sol.objective, std::move(nests)};
}

double solve_nested_relaxation(const ProblemInstance& inst) {
  validate_instance(inst);
  require(inst.M >= 1, "nested relaxation needs at least one flexible type");
  LpSolution sol = solve_lp(build_nested_lp(inst, nullptr, /*with_capacity=*/false));
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("nested relaxation LP did not solve");
  }
  double ratio_sum = 0.0;
  for (int i = 2; i <= inst.M + 1; ++i) ratio_sum += inst.reward(i - 1) / inst.reward(i);
  const double closed = 2.0 / (2.0 * big_G(inst) + inst.M - ratio_sum);
  check_identity(sol.objective, closed, kCheckTol,
                 "nested relaxation must match its closed form");
  return sol.objective;
}

LpSolution solve_flex_benchmark_lp(const ProblemInstance& inst) {
  validate_instance(inst);
  require(inst.M == inst.K - 1, "flexible-benchmark bound needs M = K-1");
  const int K = inst.K;
  const double C = inst.C;

  LinearProgram lp;
  lp.objective.assign(static_cast<size_t>(K) + 1, 0.0);
  lp.objective[0] = 1.0;
  lp.var_names.push_back("gamma");
  for (int i = 1; i <= K; ++i) lp.var_names.push_back("a_" + std::to_string(i));
  for (int k = 1; k <= K; ++k) {
    LpConstraint c; // 2 Gamma r_k C <= sum_{i<=k} r_i a_i
    c.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
    c.coeffs[0] = 2.0 * inst.reward(k) * C;
    for (int i = 1; i <= k; ++i) c.coeffs[static_cast<size_t>(i)] = -inst.reward(i);
    c.rel = Relation::LessEq;
    c.rhs = 0.0;
    lp.constraints.push_back(std::move(c));
  }
  {
    LpConstraint c;
    c.coeffs.assign(static_cast<size_t>(K) + 1, 0.0);
    for (int i = 1; i <= K; ++i) c.coeffs[static_cast<size_t>(i)] = 1.0;
    c.rel = Relation::LessEq;
    c.rhs = 2.0 * C;
    lp.constraints.push_back(std::move(c));
  }

  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error("flexible-benchmark LP did not solve");
  }
  const double tol = kCheckTol * std::max(1.0, inst.reward(K) * C);
  check_identity(sol.objective, ball_queyranne_L(inst), tol,
                 "flexible-benchmark optimum must equal the closed-form bound");
  for (int k = 1; k <= K; ++k) {
    const double prev_ratio = k == 1 ? 0.0 : inst.reward(k - 1) / inst.reward(k);
    check_identity(sol.x[static_cast<size_t>(k)],
                   2.0 * sol.objective * (1.0 - prev_ratio) * C, tol,
                   "flexible-benchmark serving plan must match its closed form");
  }
  return sol;
}

} // namespace polyra

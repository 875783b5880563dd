// Command-line front end: competitive-ratio bounds, policy simulation,
// figure sweeps, worst-case sequence export, and the verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyra/adversary.hpp"
#include "polyra/core.hpp"
#include "polyra/engine.hpp"
#include "polyra/json_io.hpp"
#include "polyra/lp.hpp"
#include "polyra/polytope.hpp"
#include "polyra/sweep.hpp"
#include "polyra/verify.hpp"

namespace {

using nlohmann::json;
using namespace polyra;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

json solution_to_json(const LpSolution& sol) {
  json variables = json::object();
  for (size_t i = 0; i < sol.x.size(); ++i) {
    const std::string name =
        i < sol.var_names.size() && !sol.var_names[i].empty() ? sol.var_names[i]
                                                              : "x" + std::to_string(i);
    variables[name] = sol.x[i];
  }
  json tight = json::array();
  for (size_t i = 0; i < sol.slacks.size(); ++i) {
    if (std::abs(sol.slacks[i]) <= 1e-7) tight.push_back(i);
  }
  return json{{"gamma", sol.objective}, {"variables", std::move(variables)},
              {"tight_constraints", std::move(tight)}};
}

Polytope polytope_from_spec(const ProblemInstance& inst, const std::string& spec) {
  if (spec == "bf") return two_type_flex_polytope(inst);
  if (spec == "bi") return two_type_inflex_polytope(inst);
  if (spec == "b1") return three_type_m1_polytope(inst, three_type_upper_bound(inst));
  if (spec == "b2") {
    return nested_polytope(inst, three_type_m2_nests(inst, three_type_upper_bound(inst)));
  }
  if (spec == "nbar") return nested_polytope(inst, near_optimal_nests(inst));
  if (spec.rfind("nested:", 0) == 0) {
    NestSizes nests;
    std::istringstream in(spec.substr(7));
    std::string cell;
    while (std::getline(in, cell, ',')) nests.n.push_back(std::stod(cell));
    return nested_polytope(inst, nests);
  }
  if (spec.rfind("file:", 0) == 0) {
    return polytope_from_json(load_json_file(spec.substr(5)));
  }
  throw std::runtime_error("unknown polytope spec: " + spec +
                           " (expected bf|bi|b1|b2|nested:<n-list>|nbar|file:<path>)");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  // Write to a temporary name first; no partial files on error.
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + tmp);
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    throw std::runtime_error("cannot move output into place at " + out_path);
  }
}

int cmd_bounds(const std::string& instance_path) {
  const ProblemInstance inst = instance_from_json(load_json_file(instance_path));
  json out;
  out["K"] = inst.K;
  out["M"] = inst.M;
  out["C"] = inst.C;
  out["L"] = ball_queyranne_L(inst);
  out["G"] = big_G(inst);
  json solutions = json::object();
  if (inst.M >= 1) {
    out["gamma_lp"] = gamma_lp_closed_form(inst);
    out["gamma_up"] = gamma_up(inst);
    out["gamma_bar"] = gamma_bar_closed_form(inst);
    out["gamma_nest_nbar"] = nested_cr(inst, near_optimal_nests(inst));
    solutions["simple_upper"] = solution_to_json(solve_simple_upper(inst));
  }
  if (inst.K == 3 && inst.M >= 1) {
    const ThreeTypeBound b = three_type_upper_bound(inst);
    out["gamma_star"] = b.gamma;
    json variables = json::object();
    for (int i = 1; i <= 3; ++i) {
      for (int t = 1; t <= 2; ++t) {
        variables["s_" + std::to_string(i) + "_" + std::to_string(t)] =
            b.served[static_cast<size_t>(i - 1)][static_cast<size_t>(t - 1)];
      }
    }
    solutions["upper3"] =
        json{{"gamma", b.gamma}, {"variables", std::move(variables)},
             {"canonicalized", b.canonicalized}};
  }
  out["gamma_nest_star"] = best_nested_cr(inst).first;
  if (inst.M == inst.K - 1) {
    solutions["flex_benchmark"] = solution_to_json(solve_flex_benchmark_lp(inst));
  }
  out["solutions"] = std::move(solutions);
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_simulate(const std::string& instance_path, const std::string& polytope_spec,
                 const std::string& sequence_path, const std::string& dump_path) {
  const ProblemInstance inst = instance_from_json(load_json_file(instance_path));
  const Polytope p = polytope_from_spec(inst, polytope_spec);
  if (!dump_path.empty()) write_output(polytope_to_json(p).dump(2) + "\n", dump_path);
  const ArrivalSequence seq = sequence_from_json(load_json_file(sequence_path));
  const SimulationReport report = run_simulation(inst, p, seq);
  std::cout << report_to_json(report).dump(2) << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path) {
  const SweepSpec spec = sweep_spec_from_json(load_json_file(spec_path));
  write_output(run_sweep(spec), out_path);
  return kExitOk;
}

int cmd_worstcase(const std::string& instance_path, const std::string& family,
                  const std::string& polytope_spec, int granularity, int periods,
                  const std::string& out_path) {
  const ProblemInstance inst = instance_from_json(load_json_file(instance_path));
  json out;
  if (family == "staircase") {
    out = family_to_json(staircase_family(inst));
  } else if (family == "three-type") {
    out = family_to_json(three_type_inputs(inst));
  } else if (family == "flex-benchmark") {
    out = family_to_json(flex_benchmark_family(inst));
  } else if (family == "variants") {
    const WorstCaseVariants variants = alternative_worstcase_variants(inst);
    json families = json::array();
    for (const SequenceFamily& fam : variants.families) families.push_back(family_to_json(fam));
    out = json{{"families", std::move(families)},
               {"below_four_types", variants.below_four_types}};
  } else if (family == "search") {
    // Exhaustive adversarial search against a concrete policy.
    if (polytope_spec.empty()) {
      throw std::runtime_error("worstcase --family search needs --polytope");
    }
    const Polytope p = polytope_from_spec(inst, polytope_spec);
    const AdversaryResult res =
        exhaustive_adversary(inst, p, granularity, periods, 2 * inst.K);
    out = json{{"min_cr", res.min_cr},
               {"witness", sequence_to_json(res.witness)},
               {"sequences_evaluated", res.sequences_evaluated}};
  } else {
    throw std::runtime_error(
        "unknown family: " + family +
        " (expected staircase|three-type|flex-benchmark|variants|search)");
  }
  write_output(out.dump(2) + "\n", out_path);
  return kExitOk;
}

int cmd_verify(const std::string& level, std::uint64_t seed, double tamper, int only) {
  if (level != "fast" && level != "full") {
    throw std::runtime_error("verify level must be fast or full");
  }
  verify::Options opts;
  opts.full = level == "full";
  opts.seed = seed;
  opts.tolerance_scale = tamper;
  opts.only_criterion = only;
  const auto results = verify::run_acceptance_checks(opts);
  bool all_ok = true;
  double total = 0.0;
  for (const auto& r : results) {
    all_ok = all_ok && r.passed;
    total += r.seconds;
    std::printf("[%s] %-32s (%7.2fs)  %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                r.seconds, r.detail.c_str());
  }
  std::printf("%s: %zu checks in %.2fs (level %s)\n", all_ok ? "OK" : "FAILED",
              results.size(), total, level.c_str());
  return all_ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polytope-based online resource allocation toolkit"};
  app.require_subcommand(1);

  std::string instance_path, polytope_spec, sequence_path, out_path, dump_path;
  std::string family = "staircase";
  std::string level = "fast";
  std::string sweep_spec_path;
  std::uint64_t seed = 1;
  double tamper = 1.0;
  int only = 0;
  int granularity = 4;
  int periods = 2;

  CLI::App* bounds = app.add_subcommand("bounds", "competitive-ratio bounds for an instance");
  bounds->add_option("--instance", instance_path, "instance JSON")->required();

  CLI::App* simulate = app.add_subcommand("simulate", "run a polytope policy on a sequence");
  simulate->add_option("--instance", instance_path, "instance JSON")->required();
  simulate->add_option("--polytope", polytope_spec,
                       "bf|bi|b1|b2|nested:<n-list>|nbar|file:<path>")->required();
  simulate->add_option("--sequence", sequence_path, "sequence JSON")->required();
  simulate->add_option("--dump-polytope", dump_path, "also export the polytope as JSON");

  CLI::App* sweep = app.add_subcommand("sweep", "reward-ratio sweep to CSV");
  sweep->add_option("spec", sweep_spec_path, "sweep spec JSON")->required();
  sweep->add_option("--out", out_path, "output CSV path (stdout when omitted)");

  CLI::App* worstcase = app.add_subcommand("worstcase", "emit a worst-case sequence family");
  worstcase->add_option("--instance", instance_path, "instance JSON")->required();
  worstcase->add_option("--family", family,
                        "staircase|three-type|flex-benchmark|variants|search");
  worstcase->add_option("--polytope", polytope_spec, "policy for --family search");
  worstcase->add_option("--granularity", granularity, "mass grid steps for search (q)");
  worstcase->add_option("--periods", periods, "search horizon in periods (T)");
  worstcase->add_option("--out", out_path, "output path (stdout when omitted)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suite");
  verify_cmd->add_option("--level", level, "fast|full");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");
  verify_cmd->add_option("--tamper-tolerance", tamper,
                         "test hook: scale all tolerances (negative control)")
      ->group(""); // hidden
  verify_cmd->add_option("--only", only, "test hook: run a single criterion")
      ->group(""); // hidden

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (bounds->parsed()) return cmd_bounds(instance_path);
    if (simulate->parsed()) {
      return cmd_simulate(instance_path, polytope_spec, sequence_path, dump_path);
    }
    if (sweep->parsed()) return cmd_sweep(sweep_spec_path, out_path);
    if (worstcase->parsed()) {
      return cmd_worstcase(instance_path, family, polytope_spec, granularity, periods,
                           out_path);
    }
    if (verify_cmd->parsed()) return cmd_verify(level, seed, tamper, only);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

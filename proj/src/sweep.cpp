#include "polyra/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "polyra/lp.hpp"
#include "polyra/polytope.hpp"

namespace polyra {

using nlohmann::json;

namespace {

std::vector<double> parse_grid(const json& j, const char* range_key,
                               const char* list_key) {
  if (j.contains(list_key)) {
    auto values = j.at(list_key).get<std::vector<double>>();
    if (values.empty()) throw std::runtime_error("sweep grid is empty");
    for (size_t i = 1; i < values.size(); ++i) {
      if (values[i] <= values[i - 1]) {
        throw std::runtime_error("sweep grid must be strictly increasing");
      }
    }
    return values;
  }
  const json& r = j.at(range_key);
  const double start = r.at("start").get<double>();
  const double stop = r.at("stop").get<double>();
  const double step = r.at("step").get<double>();
  if (step <= 0.0 || stop < start) throw std::runtime_error("bad sweep grid range");
  const int count = static_cast<int>(std::lround((stop - start) / step)) + 1;
  std::vector<double> values;
  values.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) values.push_back(start + i * step);
  return values;
}

} // namespace

SweepSpec sweep_spec_from_json(const json& j) {
  SweepSpec spec;
  const std::string mode = j.value("mode", "instance");
  if (mode == "factors") {
    spec.mode = SweepSpec::Mode::Factors;
    spec.grid = parse_grid(j, "G", "Gs");
    if (spec.grid.front() < 1.0) {
      throw std::runtime_error("factor sweeps need G >= 1");
    }
    const std::string branch = j.at("case").get<std::string>();
    if (branch == "2nM_gt_C") spec.factors_case_exceeds = true;
    else if (branch == "2nM_le_C") spec.factors_case_exceeds = false;
    else throw std::runtime_error("factors case must be 2nM_le_C or 2nM_gt_C");
  } else if (mode == "instance") {
    spec.K = j.at("K").get<int>();
    spec.M = j.at("M").get<int>();
    spec.C = j.value("C", 1.0);
    spec.grid = parse_grid(j, "gamma", "gammas");
    for (double g : spec.grid) {
      if (g <= 0.0 || g >= 1.0) throw std::runtime_error("gamma grid must lie in (0,1)");
    }
  } else {
    throw std::runtime_error("unknown sweep mode: " + mode);
  }
  spec.quantities = j.at("quantities").get<std::vector<std::string>>();
  if (spec.quantities.empty()) throw std::runtime_error("no sweep quantities requested");
  return spec;
}

ProblemInstance sweep_instance(const SweepSpec& spec, double gamma) {
  ProblemInstance inst;
  inst.K = spec.K;
  inst.M = spec.M;
  inst.C = spec.C;
  inst.rewards.resize(static_cast<size_t>(spec.K));
  for (int i = 1; i <= spec.K; ++i) {
    inst.rewards[static_cast<size_t>(i - 1)] = std::pow(gamma, spec.K - i);
  }
  validate_instance(inst);
  return inst;
}

namespace {

double instance_quantity(const ProblemInstance& inst, const std::string& name) {
  if (name == "L") return ball_queyranne_L(inst);
  if (name == "G") return big_G(inst);
  if (name == "gamma_lp") return gamma_lp_closed_form(inst);
  if (name == "gamma_up") return gamma_up(inst);
  if (name == "gamma_bar") return gamma_bar_closed_form(inst);
  if (name == "gamma_star") return three_type_upper_bound(inst).gamma;
  if (name == "gamma_nest_star") return best_nested_cr(inst).first;
  if (name == "gamma_nest_nbar") return nested_cr(inst, near_optimal_nests(inst));
  if (name == "f1") return f1_factor(inst);
  if (name == "f2") return f2_factor(inst);
  if (name == "f1f2") return f1_factor(inst) * f2_factor(inst);
  throw std::runtime_error("unknown sweep quantity: " + name);
}

double factor_quantity(double G, bool exceeds, const std::string& name) {
  if (name == "f1") return f1_formula(G, exceeds);
  if (name == "f2") return f2_formula(G, exceeds);
  if (name == "f1f2") return f1_formula(G, exceeds) * f2_formula(G, exceeds);
  throw std::runtime_error("unknown factor quantity: " + name);
}

void append_fixed(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  out += buf;
}

} // namespace

std::string run_sweep(const SweepSpec& spec) {
  std::string csv = spec.mode == SweepSpec::Mode::Factors ? "G" : "gamma";
  for (const std::string& q : spec.quantities) {
    csv += ',';
    csv += q;
  }
  csv += '\n';
  for (double x : spec.grid) {
    append_fixed(csv, x);
    if (spec.mode == SweepSpec::Mode::Factors) {
      for (const std::string& q : spec.quantities) {
        csv += ',';
        append_fixed(csv, factor_quantity(x, spec.factors_case_exceeds, q));
      }
    } else {
      const ProblemInstance inst = sweep_instance(spec, x);
      for (const std::string& q : spec.quantities) {
        csv += ',';
        append_fixed(csv, instance_quantity(inst, q));
      }
    }
    csv += '\n';
  }
  return csv;
}

} // namespace polyra

#pragma once

#include <string>
#include <vector>

#include "polyra/core.hpp"

#include <json.hpp>

namespace polyra {

/// A reward-ratio (or G) sweep producing one CSV row per grid point.
///
/// Instance mode: each grid value gamma builds the instance with rewards
/// r_i = gamma^(K-i), so consecutive reward ratios are all gamma. Columns
/// come from `quantities`: gamma_star, gamma_up, gamma_lp, gamma_bar,
/// gamma_nest_star, gamma_nest_nbar, L, G, f1, f2, f1f2.
///
/// Factor mode ("mode": "factors"): the grid is over G directly and the
/// branch of the piecewise factors is fixed by `factors_case_exceeds`;
/// quantities are among f1, f2, f1f2.
struct SweepSpec {
  enum class Mode { Instance, Factors };
  Mode mode = Mode::Instance;
  int K = 2;
  int M = 1;
  double C = 1.0;
  std::vector<double> grid;
  std::vector<std::string> quantities;
  bool factors_case_exceeds = false;
};

/// Parses a sweep spec. Grid forms: {"gamma": {"start","stop","step"}} or
/// {"gammas":[...]}; factor mode uses "G"/"Gs" instead.
SweepSpec sweep_spec_from_json(const nlohmann::json& j);

/// Instance for one grid point of an instance-mode sweep.
ProblemInstance sweep_instance(const SweepSpec& spec, double gamma);

/// Runs the sweep and returns CSV text: a header line, then one row per
/// grid point with every value printed as %.6f (locale-independent,
/// bit-stable across runs).
std::string run_sweep(const SweepSpec& spec);

} // namespace polyra

#include "polyra/json_io.hpp"

#include <fstream>

namespace polyra {

using nlohmann::json;

json instance_to_json(const ProblemInstance& inst) {
  return json{{"K", inst.K}, {"M", inst.M}, {"C", inst.C}, {"rewards", inst.rewards}};
}

ProblemInstance instance_from_json(const json& j) {
  ProblemInstance inst;
  inst.K = j.at("K").get<int>();
  inst.M = j.at("M").get<int>();
  inst.C = j.at("C").get<double>();
  inst.rewards = j.at("rewards").get<std::vector<double>>();
  validate_instance(inst);
  return inst;
}

json sequence_to_json(const ArrivalSequence& seq) {
  json periods = json::array();
  for (const PeriodEvents& events : seq.periods) {
    json period = json::array();
    for (const ArrivalEvent& e : events) {
      period.push_back(json{{"type", e.agent_type}, {"mass", e.mass}});
    }
    periods.push_back(std::move(period));
  }
  return json{{"periods", std::move(periods)}};
}

ArrivalSequence sequence_from_json(const json& j) {
  ArrivalSequence seq;
  for (const json& period : j.at("periods")) {
    PeriodEvents events;
    for (const json& e : period) {
      ArrivalEvent ev;
      ev.agent_type = e.at("type").get<int>();
      ev.mass = e.at("mass").get<double>();
      if (ev.mass <= 0.0) throw std::runtime_error("event mass must be positive");
      events.push_back(ev);
    }
    seq.periods.push_back(std::move(events));
  }
  return seq;
}

json polytope_to_json(const Polytope& p) {
  json constraints = json::array();
  for (const PolytopeConstraint& c : p.constraints) {
    constraints.push_back(json{{"coeffs", c.coeffs}, {"rhs", c.rhs}});
  }
  return json{{"dimension", p.dimension}, {"constraints", std::move(constraints)},
              {"label", p.label}};
}

Polytope polytope_from_json(const json& j) {
  Polytope p;
  p.dimension = j.at("dimension").get<int>();
  p.label = j.value("label", "");
  for (const json& c : j.at("constraints")) {
    PolytopeConstraint pc;
    pc.coeffs = c.at("coeffs").get<std::vector<double>>();
    pc.rhs = c.at("rhs").get<double>();
    if (static_cast<int>(pc.coeffs.size()) != p.dimension) {
      throw std::runtime_error("constraint width does not match polytope dimension");
    }
    for (double w : pc.coeffs) {
      if (w < 0.0) throw std::runtime_error("polytope coefficients must be nonnegative");
    }
    if (pc.rhs < 0.0) throw std::runtime_error("polytope rhs must be nonnegative");
    p.constraints.push_back(std::move(pc));
  }
  return p;
}

json family_to_json(const SequenceFamily& fam) {
  json sequences = json::array();
  for (const ArrivalSequence& seq : fam.sequences) sequences.push_back(sequence_to_json(seq));
  return json{{"label", fam.label}, {"sequences", std::move(sequences)}};
}

json report_to_json(const SimulationReport& report) {
  json periods = json::array();
  for (const PeriodReport& pr : report.periods) {
    periods.push_back(json{{"t", pr.trace.t},
                           {"reward", pr.trace.reward_collected},
                           {"opt", pr.trace.opt},
                           {"cr", pr.trace.cr},
                           {"served_by_type", pr.trace.served_mass_by_type},
                           {"accepted_by_type", pr.accepted_by_type},
                           {"rejected_by_type", pr.rejected_by_type},
                           {"carried", pr.carried}});
  }
  return json{{"periods", std::move(periods)},
              {"summary",
               json{{"min_period_cr", report.min_period_cr},
                    {"total_reward", report.total_reward},
                    {"total_opt", report.total_opt}}}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("parse error in " + path + ": " + e.what());
  }
  return j;
}

} // namespace polyra

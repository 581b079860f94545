#pragma once

#include <json.hpp>

#include "nczar/gauge.hpp"
#include "nczar/limit.hpp"
#include "nczar/report.hpp"

namespace nczar {

inline nlohmann::json to_json(const CheckResult& c) {
  nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

inline nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"case", r.case_name},
          {"N", r.N},
          {"passed", r.all_passed()},
          {"checks", checks}};
}

inline nlohmann::json to_json(const HausdorffReport& r) {
  return {{"N", r.N},
          {"grid_step", r.grid_step},
          {"r", r.r},
          {"k_N", r.k_N},
          {"step_error", r.step_error},
          {"d_group", r.d_group},
          {"d_graph", r.d_graph},
          {"bound_group", r.bound_group},
          {"bound_graph", r.bound_graph},
          {"passed", r.within}};
}

inline nlohmann::json to_json(const CurvatureReport& r) {
  return {{"max_dev_dA", r.max_dev_dA},
          {"max_dev_comm", r.max_dev_comm},
          {"max_dev_comm_half", r.max_dev_comm_half},
          {"ratio", r.ratio},
          {"max_rel_dev_torus", r.max_rel_dev_torus},
          {"passed", r.ok}};
}

}  // namespace nczar

// Copyright 2026 The nlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nlgames/serialization.h"

#include <cmath>
#include <string>

#include "nlgames/error.h"

namespace nlgames {
namespace {

// JSON has no infinity; such values are written as null.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(ErrorCode::kParse, "complex numbers are [re, im] pairs");
  }
  if (!j[0].is_number() || !j[1].is_number()) {
    throw Error(ErrorCode::kParse, "complex parts must be numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename Fn>
auto guarded(std::string_view what, Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json complex_vector_to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const Complex& c : v) out.push_back({c.real(), c.imag()});
  return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array of [re, im] pairs");
  ComplexVector out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(complex_from_json(c));
  return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
  return complex_vector_to_json(ComplexVector(m.entries().begin(), m.entries().end()));
}

ComplexMatrix matrix_from_json(const Json& j, std::size_t dim) {
  ComplexVector entries = complex_vector_from_json(j);
  if (entries.size() != dim * dim) {
    throw Error(ErrorCode::kShape, "matrix needs " + std::to_string(dim * dim) + " entries");
  }
  return ComplexMatrix(dim, dim, std::move(entries));
}

Json measurement_to_json(const Measurement& meas) {
  Json out = Json::array();
  for (const auto& povm : meas) {
    Json elems = Json::array();
    for (const auto& e : povm) elems.push_back(matrix_to_json(e));
    out.push_back(std::move(elems));
  }
  return out;
}

Measurement measurement_from_json(const Json& j, std::size_t dim) {
  return guarded("measurement JSON", [&] {
    if (!j.is_array()) throw Error(ErrorCode::kParse, "measurement must be an array of POVMs");
    Measurement meas;
    for (const auto& povm : j) {
      Povm elems;
      for (const auto& e : povm) elems.push_back(matrix_from_json(e, dim));
      meas.push_back(std::move(elems));
    }
    return meas;
  });
}

Json strategy_to_json(const QuantumStrategy& s) {
  Json out;
  if (s.dim_a == s.dim_b) {
    out["dim"] = s.dim_a;
  } else {
    out["dimA"] = s.dim_a;
    out["dimB"] = s.dim_b;
  }
  out["state"] = complex_vector_to_json(s.state);
  out["alice"] = measurement_to_json(s.alice);
  out["bob"] = measurement_to_json(s.bob);
  return out;
}

QuantumStrategy strategy_from_json(const Json& j) {
  return guarded("strategy JSON", [&] {
    QuantumStrategy s;
    if (j.contains("dim")) {
      s.dim_a = s.dim_b = j.at("dim").get<std::size_t>();
    } else {
      s.dim_a = j.at("dimA").get<std::size_t>();
      s.dim_b = j.at("dimB").get<std::size_t>();
    }
    s.state = complex_vector_from_json(j.at("state"));
    s.alice = measurement_from_json(j.at("alice"), s.dim_a);
    s.bob = measurement_from_json(j.at("bob"), s.dim_b);
    return s;
  });
}

Json family_to_json(const AdviceFamily& f) {
  Json p = Json::array();
  for (std::size_t x = 0; x < f.k(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < f.k(); ++y) row.push_back(f.p(x, y));
    p.push_back(std::move(row));
  }
  Json states = Json::array();
  for (const auto& s : f.states()) states.push_back(complex_vector_to_json(s));
  return {{"k", f.k()}, {"dimA", f.dim_a()}, {"dimB", f.dim_b()}, {"p", p}, {"states", states}};
}

AdviceFamily family_from_json(const Json& j) {
  return guarded("family JSON", [&] {
    const auto k = j.at("k").get<std::size_t>();
    const auto da = j.at("dimA").get<std::size_t>();
    const auto db = j.at("dimB").get<std::size_t>();
    const auto& rows = j.at("p");
    if (!rows.is_array() || rows.size() != k) {
      throw Error(ErrorCode::kShape, "family p must have k rows");
    }
    std::vector<double> p;
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != k) {
        throw Error(ErrorCode::kShape, "family p rows must have k entries");
      }
      for (const auto& v : row) p.push_back(v.get<double>());
    }
    std::vector<ComplexVector> states;
    for (const auto& s : j.at("states")) states.push_back(complex_vector_from_json(s));
    return AdviceFamily(k, da, db, std::move(p), std::move(states));
  });
}

Json parse_json(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, "malformed " + std::string(what) + " JSON: " + e.what());
  }
}

AdviceFamily parse_family(std::string_view text) {
  return family_from_json(parse_json(text, "family"));
}

Json to_json(const ClassicalResult& r) {
  return {{"value", r.value},
          {"exact", r.exact},
          {"strategy", {{"alice", r.strategy.alice}, {"bob", r.strategy.bob}}}};
}

Json to_json(const SeesawResult& r) {
  return {{"value", r.value},
          {"lower_bound", true},
          {"best_restart", r.best_restart},
          {"trace", r.trace},
          {"strategy", strategy_to_json(r.strategy)}};
}

Json to_json(const SicReport& r) {
  return {{"sic", r.sic},
          {"i_y_xa", r.i_y_xa},
          {"i_x_by", r.i_x_by},
          {"eps_a", r.eps_a},
          {"eps_b", r.eps_b},
          {"max_overlap", r.max_overlap},
          {"nonsuperposed_i_y", r.nonsuperposed_i_y},
          {"nonsuperposed_i_x", r.nonsuperposed_i_x}};
}

Json to_json(const BoundCheck& c) {
  Json out = {{"name", c.name},         {"relation", c.relation},
              {"lhs", number(c.lhs)},   {"rhs", number(c.rhs)},
              {"applicable", c.applicable}, {"informational", c.informational},
              {"passed", c.passed}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json to_json(const ChainReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"passed", r.passed()},
          {"advice_value", r.advice_value},
          {"omega_star", r.omega_star},
          {"omega_star_is_lower_bound", r.omega_star_is_lower_bound},
          {"unitaries", r.unitaries_source},
          {"rotated_overlap", r.rotated_overlap},
          {"sic", to_json(r.sic)},
          {"checks", checks}};
}

Json to_json(const SingleGameReport& r) {
  return {{"passed", r.passed()},
          {"distance", r.distance},
          {"c0", r.c0},
          {"eps", r.eps},
          {"omega_star", r.omega_star},
          {"omega_star_is_lower_bound", r.omega_star_is_lower_bound},
          {"advice_value", r.advice_value},
          {"distance_ok", r.distance_ok},
          {"advice_ok", r.advice_ok},
          {"hypotheses_met", r.hypotheses_met},
          {"degenerate", r.degenerate},
          {"sic", r.sic},
          {"sic_positive", r.sic_positive}};
}

Json to_json(const Estimate& e) {
  return {{"est", e.est}, {"lo", e.lo}, {"hi", e.hi},
          {"successes", e.successes}, {"trials", e.trials}};
}

Json to_json(const ProtocolParams& p) {
  Json out = {{"n", p.n},
              {"eps", p.eps},
              {"t", p.t},
              {"v", p.v},
              {"v_formula", p.v_formula},
              {"v_capped", p.v_capped},
              {"m", p.m},
              {"trials", p.trials},
              {"seed", p.seed}};
  if (p.synthetic_corr) out["synthetic_corr"] = *p.synthetic_corr;
  return out;
}

Json to_json(const SimResult& r) {
  return {{"mode", r.mode},
          {"p_not_abort", to_json(r.p_not_abort)},
          {"cond_low_win_frac", to_json(r.cond_low_win_frac)},
          {"per_instance_win", r.per_instance_win},
          {"measured_win_rate", r.measured_win_rate()},
          {"params", to_json(r.params)},
          {"histogram", r.histogram}};
}

Json to_json(const EfficiencyReport& r) {
  return {{"passed", r.passed()},
          {"t_strategy", number(r.t_strategy)},
          {"target", r.target},
          {"check_i", {{"applicable", r.check_i_applicable},
                       {"passed", r.check_i_passed},
                       {"margin", r.check_i_margin}}},
          {"check_ii", {{"skipped", r.check_ii_skipped},
                        {"passed", r.check_ii_passed},
                        {"bound", r.check_ii_bound}}},
          {"warnings", r.warnings}};
}

Json to_json(const InequalityResult& r) {
  return {{"name", r.name},
          {"checked", r.checked},
          {"max_residual", r.checked ? Json(r.max_residual) : Json(nullptr)},
          {"violations", r.violations},
          {"informational", r.informational},
          {"passed", r.informational || r.violations == 0}};
}

Json to_json(const ToolboxReport& r) {
  Json results = Json::array();
  for (const auto& i : r.results) results.push_back(to_json(i));
  return {{"passed", r.passed()}, {"tolerance", r.tolerance}, {"results", results}};
}

}  // namespace nlgames

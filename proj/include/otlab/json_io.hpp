/*
 * Copyright 2026 otlab contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OTLAB_JSON_IO_HPP
#define OTLAB_JSON_IO_HPP

#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "otlab/measure.hpp"
#include "otlab/space.hpp"
#include "otlab/transport.hpp"

namespace otlab {

using nlohmann::json;

// Measure file format:
//   {"space": {"kind": "line"|"euclidean"|"sphere"|"discrete", "dim": n},
//    "atoms": [[...], ...] for continuous spaces or [int, ...] for discrete,
//    "weights": [...]}
// Input weights must sum to 1 within 1e-9; the parsed measure is canonical.

inline json to_json(const SpaceDescriptor& s) {
  return json{{"kind", to_string(s.kind)}, {"dim", s.dim}};
}

inline SpaceDescriptor space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("dim") || !j["kind"].is_string() ||
      !j["dim"].is_number_integer())
    fail(ErrorCode::parse_error, "space must be {\"kind\": string, \"dim\": int}");
  const std::string kind = j["kind"].get<std::string>();
  const int dim = j["dim"].get<int>();
  SpaceDescriptor s;
  if (kind == "line")
    s = SpaceDescriptor::line();
  else if (kind == "euclidean")
    s = SpaceDescriptor::euclidean(dim);
  else if (kind == "sphere")
    s = SpaceDescriptor::sphere(dim);
  else if (kind == "discrete")
    s = SpaceDescriptor::discrete(dim);
  else
    fail(ErrorCode::parse_error, "unknown space kind '" + kind + "'");
  if (kind == "line" && dim != 1) fail(ErrorCode::parse_error, "line requires dim = 1");
  validate(s);
  return s;
}

inline json to_json(const FinitePointMeasure& m) {
  json atoms = json::array();
  if (m.space().kind == SpaceKind::discrete) {
    for (const Point& a : m.atoms()) atoms.push_back(label_of(a));
  } else {
    for (const Point& a : m.atoms()) atoms.push_back(a);
  }
  return json{{"space", to_json(m.space())}, {"atoms", std::move(atoms)}, {"weights", m.weights()}};
}

inline FinitePointMeasure measure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("space") || !j.contains("atoms") || !j.contains("weights"))
    fail(ErrorCode::parse_error, "measure needs \"space\", \"atoms\" and \"weights\"");
  const SpaceDescriptor s = space_from_json(j["space"]);
  if (!j["atoms"].is_array() || !j["weights"].is_array())
    fail(ErrorCode::parse_error, "\"atoms\" and \"weights\" must be arrays");

  std::vector<Point> atoms;
  atoms.reserve(j["atoms"].size());
  for (const json& a : j["atoms"]) {
    if (a.is_number()) {
      // Bare numbers are discrete labels (or 1-d coordinates for the line).
      atoms.push_back(Point{a.get<double>()});
    } else if (a.is_array()) {
      Point x;
      x.reserve(a.size());
      for (const json& c : a) {
        if (!c.is_number()) fail(ErrorCode::parse_error, "atom coordinates must be numbers");
        x.push_back(c.get<double>());
      }
      atoms.push_back(std::move(x));
    } else {
      fail(ErrorCode::parse_error, "atoms must be numbers or coordinate arrays");
    }
  }
  std::vector<double> weights;
  weights.reserve(j["weights"].size());
  for (const json& w : j["weights"]) {
    if (!w.is_number()) fail(ErrorCode::parse_error, "weights must be numbers");
    weights.push_back(w.get<double>());
  }
  return FinitePointMeasure(s, std::move(atoms), std::move(weights));
}

inline FinitePointMeasure load_measure(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::parse_error, "invalid JSON in '" + path + "': " + e.what());
  }
  return measure_from_json(j);
}

// Transport plan format:
//   {"cost": c, "wp": w, "p": p, "plan": [[...], ...],
//    "dual_u": [...], "dual_v": [...]}
inline json to_json(const WassersteinSolution& sol) {
  json plan = json::array();
  for (std::size_t i = 0; i < sol.transport.plan.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < sol.transport.plan.cols(); ++j)
      row.push_back(sol.transport.plan.mass()(i, j));
    plan.push_back(std::move(row));
  }
  return json{{"cost", sol.transport.cost}, {"wp", sol.wp},
              {"p", sol.p},                 {"plan", std::move(plan)},
              {"dual_u", sol.transport.dual_u}, {"dual_v", sol.transport.dual_v}};
}

// Re-reads an emitted plan against the marginals of the two measures it was
// computed from; throws if the coupling invariants fail.
inline Coupling coupling_from_json(const json& j, const FinitePointMeasure& mu,
                                   const FinitePointMeasure& nu) {
  if (!j.contains("plan") || !j["plan"].is_array())
    fail(ErrorCode::parse_error, "plan file needs a \"plan\" matrix");
  const json& rows = j["plan"];
  Matrix mass(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != mass.cols())
      fail(ErrorCode::parse_error, "plan rows must be arrays of equal length");
    for (std::size_t k = 0; k < mass.cols(); ++k) mass(i, k) = rows[i][k].get<double>();
  }
  return Coupling(std::move(mass), mu.weights(), nu.weights());
}

inline json error_json(const Error& e) {
  return json{{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
}

}  // namespace otlab

#endif  // OTLAB_JSON_IO_HPP

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

#ifndef OTLAB_SPACE_HPP
#define OTLAB_SPACE_HPP

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "otlab/error.hpp"

namespace otlab {

// A point is a coordinate vector. Discrete-space points are stored as a
// single coordinate holding the (exact integer) label.
using Point = std::vector<double>;

enum class SpaceKind { line, euclidean, sphere, discrete };

inline const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::line: return "line";
    case SpaceKind::euclidean: return "euclidean";
    case SpaceKind::sphere: return "sphere";
    case SpaceKind::discrete: return "discrete";
  }
  return "unknown";
}

// Sphere points satisfy ‖x‖ = ½, so the chordal diameter is exactly 1.
inline constexpr double kSphereRadius = 0.5;
// Tolerance for space membership and for merging coincident atoms.
inline constexpr double kMembershipTol = 1e-12;
inline constexpr double kAtomMergeTol = 1e-12;

// One of: the real line, Euclidean n-space, the radius-1/2 sphere in R^n
// (chordal metric), or a finite set of `dim` labels with the 0/1 metric.
struct SpaceDescriptor {
  SpaceKind kind = SpaceKind::line;
  int dim = 1;  // line: 1; euclidean: n >= 1; sphere: ambient n >= 2; discrete: label count k >= 1

  static SpaceDescriptor line() { return {SpaceKind::line, 1}; }
  static SpaceDescriptor euclidean(int n) { return {SpaceKind::euclidean, n}; }
  static SpaceDescriptor sphere(int ambient_dim) { return {SpaceKind::sphere, ambient_dim}; }
  static SpaceDescriptor discrete(int labels) { return {SpaceKind::discrete, labels}; }

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;
};

inline void validate(const SpaceDescriptor& s) {
  if (s.dim < 1) fail(ErrorCode::invalid_space, "dim must be >= 1");
  if (s.kind == SpaceKind::line && s.dim != 1)
    fail(ErrorCode::invalid_space, "line has dim 1");
  if (s.kind == SpaceKind::sphere && s.dim < 2)
    fail(ErrorCode::invalid_space, "sphere needs ambient dim >= 2");
}

// Coordinate count of a point of the space.
inline std::size_t point_dimension(const SpaceDescriptor& s) {
  return (s.kind == SpaceKind::discrete) ? 1 : static_cast<std::size_t>(s.dim);
}

inline std::string describe(const SpaceDescriptor& s) {
  return std::string(to_string(s.kind)) + "(" + std::to_string(s.dim) + ")";
}

inline double squared_norm(const Point& x) {
  double acc = 0.0;
  for (double c : x) acc += c * c;
  return acc;
}

inline double norm(const Point& x) { return std::sqrt(squared_norm(x)); }

inline int label_of(const Point& x) { return static_cast<int>(std::llround(x[0])); }

inline Point label_point(int label) { return Point{static_cast<double>(label)}; }

inline bool contains(const SpaceDescriptor& s, const Point& x) {
  if (x.size() != point_dimension(s)) return false;
  for (double c : x)
    if (!std::isfinite(c)) return false;
  switch (s.kind) {
    case SpaceKind::line:
    case SpaceKind::euclidean:
      return true;
    case SpaceKind::sphere:
      return std::abs(norm(x) - kSphereRadius) <= kMembershipTol;
    case SpaceKind::discrete: {
      if (std::abs(x[0] - std::llround(x[0])) > 1e-9) return false;
      const int label = label_of(x);
      return label >= 0 && label < s.dim;
    }
  }
  return false;
}

inline void require_member(const SpaceDescriptor& s, const Point& x) {
  if (!contains(s, x))
    fail(ErrorCode::point_not_in_space, "point is not a member of " + describe(s));
}

// Metric of the space: Euclidean (chordal on the sphere) or the 0/1 discrete
// metric.
inline double distance(const SpaceDescriptor& s, const Point& x, const Point& y) {
  require_member(s, x);
  require_member(s, y);
  if (s.kind == SpaceKind::discrete) return label_of(x) == label_of(y) ? 0.0 : 1.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    acc += d * d;
  }
  return std::sqrt(acc);
}

// The point diametrically opposite x; only spheres have one.
inline Point antipode(const SpaceDescriptor& s, const Point& x) {
  if (s.kind != SpaceKind::sphere) fail(ErrorCode::wrong_space, "antipode needs a sphere");
  require_member(s, x);
  Point y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = -x[i];
  return y;
}

}  // namespace otlab

#endif  // OTLAB_SPACE_HPP

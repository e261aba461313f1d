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

#ifndef OTLAB_TESTS_TEST_HELPERS_HPP
#define OTLAB_TESTS_TEST_HELPERS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "otlab/otlab.hpp"

namespace otlab::testing {

// Runs f and reports the ErrorCode it threw, if any.
template <class F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline FinitePointMeasure line_measure(std::vector<double> atoms, std::vector<double> weights) {
  std::vector<Point> points;
  points.reserve(atoms.size());
  for (double a : atoms) points.push_back(Point{a});
  return FinitePointMeasure(SpaceDescriptor::line(), std::move(points), std::move(weights));
}

inline FinitePointMeasure line_dirac(double x) {
  return FinitePointMeasure::dirac(SpaceDescriptor::line(), Point{x});
}

inline FinitePointMeasure discrete_measure(int labels, std::vector<int> atoms,
                                           std::vector<double> weights) {
  std::vector<Point> points;
  points.reserve(atoms.size());
  for (int a : atoms) points.push_back(label_point(a));
  return FinitePointMeasure(SpaceDescriptor::discrete(labels), std::move(points),
                            std::move(weights));
}

// mu(I) for an explicit interval with chosen endpoint inclusion; the direct
// summation route used by brute-force oracles.
inline double interval_mass(const FinitePointMeasure& m, double lo, bool lo_closed, double hi,
                            bool hi_closed) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double a = m.atom(i)[0];
    const bool above = lo_closed ? (a >= lo) : (a > lo);
    const bool below = hi_closed ? (a <= hi) : (a < hi);
    if (above && below) acc += m.weight(i);
  }
  return acc;
}

// F(t) by direct summation, independent of StepCDF.
inline double direct_cdf(const FinitePointMeasure& m, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.atom(i)[0] <= t) acc += m.weight(i);
  return acc;
}

inline double direct_cdf_left(const FinitePointMeasure& m, double t) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m.atom(i)[0] < t) acc += m.weight(i);
  return acc;
}

}  // namespace otlab::testing

#endif  // OTLAB_TESTS_TEST_HELPERS_HPP

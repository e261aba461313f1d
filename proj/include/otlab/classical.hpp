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

#ifndef OTLAB_CLASSICAL_HPP
#define OTLAB_CLASSICAL_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "otlab/measure.hpp"
#include "otlab/space.hpp"

namespace otlab {

// Right-continuous step CDF of a finitely supported line measure.
class StepCDF {
 public:
  static StepCDF of(const FinitePointMeasure& m) {
    if (m.space().kind != SpaceKind::line)
      fail(ErrorCode::wrong_space, "CDFs are defined for line measures");
    StepCDF f;
    f.breakpoints_.reserve(m.size());
    f.cum_.reserve(m.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {  // atoms are sorted ascending
      acc += m.weight(i);
      f.breakpoints_.push_back(m.atom(i)[0]);
      f.cum_.push_back(acc);
    }
    return f;
  }

  // F(t): mass of (-inf, t].
  double eval(double t) const {
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
  }

  // F(t-): mass of (-inf, t).
  double eval_left(double t) const {
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0.0;
    return cum_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
  }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return cum_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> cum_;
};

inline StepCDF cdf_of(const FinitePointMeasure& m) { return StepCDF::of(m); }

namespace detail {

inline void require_same_space(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  if (!(mu.space() == nu.space()))
    fail(ErrorCode::space_mismatch, "measures live on different spaces");
}

inline void require_line_pair(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  if (mu.space().kind != SpaceKind::line || nu.space().kind != SpaceKind::line)
    fail(ErrorCode::wrong_space, "this distance is defined for line measures");
}

// Union of the two breakpoint sets, sorted, exact duplicates removed.
inline std::vector<double> merged_breakpoints(const StepCDF& f, const StepCDF& g) {
  std::vector<double> b;
  b.reserve(f.breakpoints().size() + g.breakpoints().size());
  b.insert(b.end(), f.breakpoints().begin(), f.breakpoints().end());
  b.insert(b.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

}  // namespace detail

// Total variation: sup over Borel sets of |mu(B) - nu(B)|. For atomic
// measures the supremum is attained at B = {atoms where mu exceeds nu}, so
// it equals the positive part of the weight differences over the merged
// support.
inline double tv_distance(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  detail::require_same_space(mu, nu);
  double acc = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double matched = 0.0;
    for (std::size_t j = 0; j < nu.size(); ++j)
      if (distance(mu.space(), mu.atom(i), nu.atom(j)) <= kAtomMergeTol) {
        matched = nu.weight(j);
        break;
      }
    acc += std::max(0.0, mu.weight(i) - matched);
  }
  return acc;
}

// Kolmogorov-Smirnov: sup_t |F(t) - G(t)|. Right-continuous step functions
// attain the supremum at a breakpoint of either measure.
inline double ks_distance(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  detail::require_line_pair(mu, nu);
  const StepCDF f = StepCDF::of(mu), g = StepCDF::of(nu);
  double worst = 0.0;
  for (double b : detail::merged_breakpoints(f, g))
    worst = std::max(worst, std::abs(f.eval(b) - g.eval(b)));
  return worst;
}

// Kuiper: sup over non-degenerate intervals I of |mu(I) - nu(I)|. With
// D = F - G, any interval value is a difference of two D-evaluations whose
// endpoint-inclusion pattern selects the right value or the left limit, and
// D vanishes at both infinities, so the supremum equals
// max(candidates) - min(candidates) over {0} ∪ {D(b)} ∪ {D(b-)}.
inline double kuiper_distance(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  detail::require_line_pair(mu, nu);
  const StepCDF f = StepCDF::of(mu), g = StepCDF::of(nu);
  double lo = 0.0, hi = 0.0;
  for (double b : detail::merged_breakpoints(f, g)) {
    const double right = f.eval(b) - g.eval(b);
    const double left = f.eval_left(b) - g.eval_left(b);
    lo = std::min({lo, right, left});
    hi = std::max({hi, right, left});
  }
  return hi - lo;
}

// Levy: inf{ eps > 0 : F(t - eps) - eps <= G(t) <= F(t + eps) + eps for all t }
// by bisection on eps. For step CDFs the two-sided sandwich can only fail at
// the atoms of nu or at atoms of mu shifted by +-eps, with left limits where
// a jump makes the constraint one-sided.
inline double levy_distance(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  detail::require_line_pair(mu, nu);
  const StepCDF f = StepCDF::of(mu), g = StepCDF::of(nu);

  const auto feasible = [&](double eps) {
    // inf_t [G(t) - F(t - eps)] >= -eps
    for (double a : f.breakpoints())
      if (g.eval(a + eps) - f.eval(a) < -eps) return false;
    for (double b : g.breakpoints())
      if (g.eval_left(b) - f.eval_left(b - eps) < -eps) return false;
    // sup_t [G(t) - F(t + eps)] <= eps
    for (double b : g.breakpoints())
      if (g.eval(b) - f.eval(b + eps) > eps) return false;
    for (double a : f.breakpoints())
      if (g.eval_left(a - eps) - f.eval_left(a) > eps) return false;
    return true;
  };

  if (feasible(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;  // eps = 1 is always feasible
  while (hi - lo > 1e-11) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// W_1 on the line as the exact integral of |F - G| (piecewise constant).
inline double w1_cdf(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  detail::require_line_pair(mu, nu);
  const StepCDF f = StepCDF::of(mu), g = StepCDF::of(nu);
  const std::vector<double> b = detail::merged_breakpoints(f, g);
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < b.size(); ++k)
    acc += std::abs(f.eval(b[k]) - g.eval(b[k])) * (b[k + 1] - b[k]);
  return acc;
}

// Levy-Prokhorov: inf{ eps > 0 : mu(A) <= nu(A^eps) + eps for all Borel A },
// where A^eps is the open eps-enlargement. Only subsets of supp(mu) matter.
// As eps grows, [y in A^eps] flips exactly at the pairwise distances, so we
// scan distance-sorted intervals; within one interval the cover pattern is
// fixed and the binding constraint is linear in eps, which gives the exact
// infimum. Feasibility is monotone in eps, so the first interval with a
// candidate decides.
inline double levy_prokhorov_distance(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                                      const FinitePointMeasure& nu) {
  detail::require_same_space(mu, nu);
  if (!(mu.space() == s)) fail(ErrorCode::space_mismatch, "measures do not live on the requested space");
  const std::size_t m = mu.size(), n = nu.size();
  if (m > 15) fail(ErrorCode::support_too_large, "subset enumeration is limited to 15 source atoms");
  if (n > 20) fail(ErrorCode::support_too_large, "mask table is limited to 20 target atoms");

  Matrix d(m, n);
  std::vector<double> thresholds{0.0};
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = distance(s, mu.atom(i), nu.atom(j));
      thresholds.push_back(d(i, j));
    }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  // Subset mass tables.
  const std::uint32_t mu_masks = 1u << m, nu_masks = 1u << n;
  std::vector<double> mu_mass(mu_masks, 0.0), nu_mass(nu_masks, 0.0);
  for (std::uint32_t mask = 1; mask < mu_masks; ++mask) {
    const std::uint32_t low = mask & (~mask + 1u);
    mu_mass[mask] =
        mu_mass[mask ^ low] + mu.weight(static_cast<std::size_t>(std::countr_zero(low)));
  }
  for (std::uint32_t mask = 1; mask < nu_masks; ++mask) {
    const std::uint32_t low = mask & (~mask + 1u);
    nu_mass[mask] =
        nu_mass[mask ^ low] + nu.weight(static_cast<std::size_t>(std::countr_zero(low)));
  }

  std::vector<std::uint32_t> cover(m);
  std::vector<std::uint32_t> subset_cover(mu_masks, 0u);
  for (std::size_t r = 0; r < thresholds.size(); ++r) {
    const double prev = thresholds[r];
    const double cur = (r + 1 < thresholds.size()) ? thresholds[r + 1]
                                                   : std::numeric_limits<double>::infinity();
    // For eps in (prev, cur]:  y_j in A^eps  <=>  min_{i in A} d(i,j) <= prev.
    std::fill(cover.begin(), cover.end(), 0u);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (d(i, j) <= prev) cover[i] |= (1u << j);

    double binding = 0.0;  // max over A of mu(A) - nu(A^eps); empty A gives 0
    for (std::uint32_t mask = 1; mask < mu_masks; ++mask) {
      const std::uint32_t low = mask & (~mask + 1u);
      subset_cover[mask] =
          subset_cover[mask ^ low] | cover[static_cast<std::size_t>(std::countr_zero(low))];
      binding = std::max(binding, mu_mass[mask] - nu_mass[subset_cover[mask]]);
    }
    if (binding <= cur) return std::max(binding, prev);
  }
  return 1.0;  // unreachable: the last interval always yields a candidate
}

}  // namespace otlab

#endif  // OTLAB_CLASSICAL_HPP

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

#ifndef OTLAB_TRANSFORMS_HPP
#define OTLAB_TRANSFORMS_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "otlab/measure.hpp"
#include "otlab/metrics.hpp"
#include "otlab/rng.hpp"
#include "otlab/sampling.hpp"
#include "otlab/transport.hpp"

namespace otlab {

// A measure-to-measure map with a printable construction name. Outputs live
// on the same space as inputs and are canonical by construction.
struct MeasureTransform {
  std::string name;
  std::function<FinitePointMeasure(const FinitePointMeasure&)> evaluator;

  FinitePointMeasure operator()(const FinitePointMeasure& m) const { return evaluator(m); }
};

// The push-forward functor psi -> psi_#: the group homomorphism from the
// isometries of the base space into the isometries of the measure space.
inline MeasureTransform lift_isometry(const SpaceDescriptor& s, const IsometryMap& psi) {
  validate(psi, s);
  return MeasureTransform{"pushforward",
                          [psi](const FinitePointMeasure& m) { return push_forward(m, psi); }};
}

// The center-preserving rotation isometry of Euclidean measure spaces
// (Kloeckner's construction): recenter at the origin, rotate by Q, translate
// back. Fixes every Dirac exactly and is measure-dependent, hence not a
// push-forward by any single point isometry.
inline MeasureTransform kloeckner_isometry(const SpaceDescriptor& s, const Matrix& q) {
  if (s.kind == SpaceKind::discrete)
    fail(ErrorCode::discrete_space_unsupported, "the construction needs a vector space");
  if (s.kind == SpaceKind::sphere)
    fail(ErrorCode::wrong_space, "the construction recenters measures, which leaves a sphere");
  const auto n = point_dimension(s);
  if (q.rows() != n || q.cols() != n)
    fail(ErrorCode::dimension_mismatch, "rotation size does not match the space");
  if (orthogonality_defect(q) > kOrthogonalityTol)
    fail(ErrorCode::not_orthogonal, "rotation fails the orthogonality check");
  return MeasureTransform{
      "kloeckner", [s, q](const FinitePointMeasure& m) {
        const Point c = center_of_mass(m);
        std::vector<Point> atoms;
        atoms.reserve(m.size());
        for (const Point& x : m.atoms()) {
          Point centered(x.size());
          for (std::size_t i = 0; i < x.size(); ++i) centered[i] = x[i] - c[i];
          Point y = multiply(q, centered);
          for (std::size_t i = 0; i < y.size(); ++i) y[i] += c[i];
          atoms.push_back(std::move(y));
        }
        return FinitePointMeasure(s, std::move(atoms), m.weights());
      }};
}

// Kolmogorov-Smirnov isometry from a strictly monotone real bijection psi:
// the push-forward by psi^{-1}. In the increasing case the output CDF is
// F(psi(t)); in the decreasing case it is 1 - F(psi(t)-).
inline MeasureTransform ks_isometry(const MonotoneRealBijection& psi, bool increasing) {
  const IsometryMap map = IsometryMap::monotone(psi.forward, psi.inverse, psi.increasing);
  validate(map, SpaceDescriptor::line());
  if (psi.increasing != increasing)
    fail(ErrorCode::not_bijective, "monotonicity flag disagrees with the requested variant");
  auto inv = psi.inverse;
  return MeasureTransform{increasing ? "ks_increasing" : "ks_decreasing",
                          [inv](const FinitePointMeasure& m) {
                            return push_forward(
                                m, [&inv](const Point& x) { return Point{inv(x[0])}; },
                                SpaceDescriptor::line());
                          }};
}

// Levy isometry: translation F -> F(. + c) realized as x -> x - c, or the
// reflected variant F -> 1 - F((-. + c)-) realized as x -> c - x.
inline MeasureTransform levy_isometry(double c, bool reflect) {
  return MeasureTransform{reflect ? "levy_reflection" : "levy_translation",
                          [c, reflect](const FinitePointMeasure& m) {
                            return push_forward(
                                m,
                                [c, reflect](const Point& x) {
                                  return Point{reflect ? c - x[0] : x[0] - c};
                                },
                                SpaceDescriptor::line());
                          }};
}

// Kuiper isometry: push-forward by a homeomorphism g of the line.
inline MeasureTransform kuiper_isometry(const MonotoneRealBijection& g) {
  const IsometryMap map = IsometryMap::monotone(g.forward, g.inverse, g.increasing);
  validate(map, SpaceDescriptor::line());
  auto fwd = g.forward;
  return MeasureTransform{"kuiper_homeo", [fwd](const FinitePointMeasure& m) {
                            return push_forward(
                                m, [&fwd](const Point& x) { return Point{fwd(x[0])}; },
                                SpaceDescriptor::line());
                          }};
}

// Levy-Prokhorov isometry: push-forward by a surjective affine isometry.
inline MeasureTransform lp_isometry(const SpaceDescriptor& s, const AffineIsometry& psi) {
  const IsometryMap map = IsometryMap::affine(psi.linear, psi.shift);
  validate(map, s);
  return MeasureTransform{"lp_affine",
                          [map, s](const FinitePointMeasure& m) { return push_forward(m, map); }};
}

// Deterministic probe points on the sphere: a uniform angular grid for n = 2,
// a Fibonacci lattice for n = 3, seeded random points for n >= 4.
inline std::vector<Point> sphere_probe_grid(const SpaceDescriptor& s, std::size_t count,
                                            Rng& rng) {
  if (s.kind != SpaceKind::sphere) fail(ErrorCode::wrong_space, "probe grids live on spheres");
  if (count == 0) fail(ErrorCode::invalid_argument, "probe count must be positive");
  std::vector<Point> probes;
  probes.reserve(count);
  constexpr double kPi = 3.14159265358979323846;
  if (s.dim == 2) {
    for (std::size_t k = 0; k < count; ++k) {
      const double angle = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(count);
      probes.push_back(Point{kSphereRadius * std::cos(angle), kSphereRadius * std::sin(angle)});
    }
  } else if (s.dim == 3) {
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    for (std::size_t k = 0; k < count; ++k) {
      const double z =
          kSphereRadius * (1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count));
      const double r = std::sqrt(std::max(0.0, kSphereRadius * kSphereRadius - z * z));
      const double phi = golden_angle * static_cast<double>(k);
      probes.push_back(Point{r * std::cos(phi), r * std::sin(phi), z});
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) probes.push_back(random_point(s, rng));
  }
  return probes;
}

struct SupProfile {
  double max_integral = 0.0;  // max over probes of sum_i w_i d(x_i, y)^p
  Point argmax;
  std::vector<double> values;  // one per probe, in probe order
};

// The map y -> integral of d(x, y)^p dmu(x), evaluated exactly at each probe.
// Each value is the product-coupling cost of mu against the Dirac at the
// probe, hence an upper bound for W_p(mu, delta_y)^p.
inline SupProfile dirac_sup_profile(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                                    double p, const std::vector<Point>& probes) {
  if (s.kind != SpaceKind::sphere) fail(ErrorCode::wrong_space, "the profile is a sphere check");
  if (!(mu.space() == s)) fail(ErrorCode::space_mismatch, "measure does not live on the sphere");
  if (probes.empty()) fail(ErrorCode::invalid_argument, "probe list must be nonempty");
  SupProfile out;
  out.values.reserve(probes.size());
  out.max_integral = -1.0;
  for (const Point& y : probes) {
    require_member(s, y);
    double acc = 0.0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
      const double d = distance(s, mu.atom(i), y);
      acc += mu.weight(i) * ((d == 0.0) ? 0.0 : std::pow(d, p));
    }
    out.values.push_back(acc);
    if (acc > out.max_integral) {
      out.max_integral = acc;
      out.argmax = y;
    }
  }
  return out;
}

// Numerical check of the unit-distance characterization of Dirac measures on
// the radius-1/2 sphere: a Dirac attains W_p = 1 against its antipode, and a
// non-Dirac measure stays strictly below 1 against every opponent, with the
// product-coupling integral certifying the strict gap.
struct DiracCharacterizationReport {
  bool dirac = false;
  bool pass = false;
  double worst_wp = 0.0;       // Dirac: the antipode distance; else the largest W_p seen
  double worst_bound = 0.0;    // largest product-coupling bound over opponents (non-Dirac case)
  double profile_max = 0.0;    // max of the probe-grid integral profile
  std::size_t opponents = 0;
};

inline DiracCharacterizationReport verify_dirac_characterization(const SpaceDescriptor& s,
                                                                 const FinitePointMeasure& mu,
                                                                 double p,
                                                                 std::size_t probe_count,
                                                                 Rng& rng) {
  DiracCharacterizationReport report;
  report.dirac = is_dirac(mu);
  if (report.dirac) {
    const FinitePointMeasure witness = FinitePointMeasure::dirac(s, antipode(s, mu.atom(0)));
    report.worst_wp = wasserstein(s, mu, witness, p);
    report.worst_bound = report.profile_max = report.worst_wp;
    report.opponents = 1;
    report.pass = std::abs(report.worst_wp - 1.0) <= 1e-12;
    return report;
  }

  const std::vector<Point> probes = sphere_probe_grid(s, probe_count, rng);
  const SupProfile profile = dirac_sup_profile(s, mu, p, probes);
  report.profile_max = profile.max_integral;

  report.pass = true;
  // Dirac opponents at the probes: the coupling against a Dirac is unique,
  // so W_p^p equals the profile value exactly; solve anyway and compare.
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const FinitePointMeasure opponent = FinitePointMeasure::dirac(s, probes[k]);
    const double w = wasserstein(s, mu, opponent, p);
    const double bound = profile.values[k];
    report.worst_wp = std::max(report.worst_wp, w);
    report.worst_bound = std::max(report.worst_bound, bound);
    if (!(w < 1.0) || !(bound < 1.0) || w > std::pow(bound, 1.0 / p) + 1e-10) report.pass = false;
    ++report.opponents;
  }
  // Randomized multi-atom opponents as a falsification attempt.
  const std::size_t random_opponents = std::max<std::size_t>(8, probe_count / 8);
  for (std::size_t k = 0; k < random_opponents; ++k) {
    const FinitePointMeasure opponent = random_measure(s, 2 + rng.uniform_int(3), rng);
    const double w = wasserstein(s, mu, opponent, p);
    const SupProfile at_atoms = dirac_sup_profile(s, mu, p, opponent.atoms());
    double bound = 0.0;
    for (std::size_t j = 0; j < opponent.size(); ++j)
      bound += opponent.weight(j) * at_atoms.values[j];
    report.worst_wp = std::max(report.worst_wp, w);
    report.worst_bound = std::max(report.worst_bound, bound);
    if (!(w < 1.0) || !(bound < 1.0) || w > std::pow(bound, 1.0 / p) + 1e-10) report.pass = false;
    ++report.opponents;
  }
  return report;
}

struct PointMapExtraction {
  std::vector<Point> images;     // T(x) per sample point
  double isometry_defect = 0.0;  // max over pairs of |d(T(x), T(y)) - d(x, y)|
};

// Restriction of a measure transform to the Diracs. Every image must itself
// be a Dirac (IMAGE_NOT_DIRAC otherwise, which is the meaningful outcome for
// transforms that are not isometries); a genuine isometry leaves a defect
// within solver precision.
inline PointMapExtraction extract_point_map(const MeasureTransform& phi, const SpaceDescriptor& s,
                                            const std::vector<Point>& sample) {
  PointMapExtraction out;
  out.images.reserve(sample.size());
  for (const Point& x : sample) {
    const FinitePointMeasure image = phi(FinitePointMeasure::dirac(s, x));
    if (!is_dirac(image))
      fail(ErrorCode::image_not_dirac, "transform sent a Dirac to a spread-out measure");
    out.images.push_back(image.atom(0));
  }
  for (std::size_t a = 0; a < sample.size(); ++a)
    for (std::size_t b = a + 1; b < sample.size(); ++b) {
      const double original = distance(s, sample[a], sample[b]);
      const double mapped = distance(s, out.images[a], out.images[b]);
      out.isometry_defect = std::max(out.isometry_defect, std::abs(mapped - original));
    }
  return out;
}

// U(S) = members of the universe at distance exactly 1 (within 1e-9) from
// every element of S; the double application U(U({mu})) = {mu} singles out
// the Dirac measures inside a finite universe.
inline std::vector<std::size_t> bidual_set(const std::vector<FinitePointMeasure>& universe,
                                           MetricName metric, double p,
                                           const std::vector<std::size_t>& s_indices) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < universe.size(); ++y) {
    bool all_unit = true;
    for (std::size_t idx : s_indices) {
      const double rho = measure_distance(metric, p, universe[y], universe[idx]);
      if (std::abs(rho - 1.0) > 1e-9) {
        all_unit = false;
        break;
      }
    }
    if (all_unit) out.push_back(y);
  }
  return out;
}

}  // namespace otlab

#endif  // OTLAB_TRANSFORMS_HPP

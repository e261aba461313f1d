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

#ifndef OTLAB_VERIFY_HPP
#define OTLAB_VERIFY_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "otlab/classical.hpp"
#include "otlab/json_io.hpp"
#include "otlab/measure.hpp"
#include "otlab/metrics.hpp"
#include "otlab/rng.hpp"
#include "otlab/sampling.hpp"
#include "otlab/transforms.hpp"
#include "otlab/transport.hpp"

namespace otlab {

// Outcome of one named verification suite. Reports are byte-identical for a
// fixed (seed, trials) pair: every trial draws from its own counter-derived
// stream and aggregation is order-independent (max / all-pass only).
struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double max_error = 0.0;
  bool pass = true;
  json witness = json::object();
};

inline json to_json(const Report& r) {
  return json{{"suite", r.suite},         {"seed", r.seed}, {"trials", r.trials},
              {"max_error", r.max_error}, {"pass", r.pass}, {"witness", r.witness}};
}

namespace verify_detail {

struct Tracker {
  double max_error = 0.0;
  json witness = json::object();
  void update(double err, int trial, const char* what) {
    if (err > max_error) {
      max_error = err;
      witness = json{{"trial", trial}, {"check", what}, {"error", err}};
    }
  }
};

inline FinitePointMeasure random_line_measure(Rng& rng, std::size_t max_atoms = 5) {
  return random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(max_atoms - 1), rng);
}

inline MonotoneRealBijection random_increasing_affine(Rng& rng) {
  const double a = rng.uniform(0.5, 2.0);
  const double b = rng.uniform(-1.0, 1.0);
  return MonotoneRealBijection{[a, b](double t) { return a * t + b; },
                               [a, b](double y) { return (y - b) / a; }, true};
}

inline MonotoneRealBijection cube_bijection() {
  return MonotoneRealBijection{[](double t) { return t * t * t; },
                               [](double y) { return std::cbrt(y); }, true};
}

// Probe abscissas where a step CDF is locally constant: gap midpoints plus
// one point on each side of the support. CDF identities are checked there,
// away from the jump knife-edges where a 1-ulp argument error flips a weight.
inline std::vector<double> off_atom_probes(const StepCDF& f) {
  const std::vector<double>& b = f.breakpoints();
  std::vector<double> probes;
  probes.push_back(b.front() - 1.0);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) probes.push_back(0.5 * (b[k] + b[k + 1]));
  probes.push_back(b.back() + 1.0);
  return probes;
}

}  // namespace verify_detail

// metric-axioms: point metrics on every space and all six measure distances
// on randomized triples (identity, symmetry, nonnegativity, triangle).
inline Report run_metric_axioms(std::uint64_t seed, int trials) {
  Report r{.suite = "metric-axioms", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const std::vector<SpaceDescriptor> spaces = {
      SpaceDescriptor::line(), SpaceDescriptor::euclidean(2), SpaceDescriptor::sphere(3),
      SpaceDescriptor::discrete(5)};
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const SpaceDescriptor& s = spaces[static_cast<std::size_t>(t) % spaces.size()];
    const Point x = random_point(s, rng), y = random_point(s, rng), z = random_point(s, rng);
    tracker.update(distance(s, x, x), t, "point identity");
    tracker.update(std::abs(distance(s, x, y) - distance(s, y, x)), t, "point symmetry");
    tracker.update(-distance(s, x, y), t, "point nonnegativity");
    tracker.update(distance(s, x, z) - distance(s, x, y) - distance(s, y, z), t, "point triangle");

    const FinitePointMeasure mu = verify_detail::random_line_measure(rng);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng);
    const FinitePointMeasure rho = verify_detail::random_line_measure(rng);
    for (MetricName metric : {MetricName::tv, MetricName::ks, MetricName::levy, MetricName::kuiper,
                              MetricName::lp, MetricName::wp}) {
      const double p = 2.0;
      const double dxx = measure_distance(metric, p, mu, mu);
      const double dxy = measure_distance(metric, p, mu, nu);
      const double dyx = measure_distance(metric, p, nu, mu);
      const double dxz = measure_distance(metric, p, mu, rho);
      const double dyz = measure_distance(metric, p, nu, rho);
      tracker.update(dxx, t, to_string(metric));
      tracker.update(std::abs(dxy - dyx), t, to_string(metric));
      tracker.update(-dxy, t, to_string(metric));
      tracker.update(dxz - dxy - dyz, t, to_string(metric));
    }
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-9;
  return r;
}

// chain: d_KS <= d_KU <= d_TV <= 1 on randomized line pairs.
inline Report run_chain(std::uint64_t seed, int trials) {
  Report r{.suite = "chain", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const FinitePointMeasure mu = verify_detail::random_line_measure(rng, 7);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng, 7);
    const double ks = ks_distance(mu, nu);
    const double ku = kuiper_distance(mu, nu);
    const double tv = tv_distance(mu, nu);
    tracker.update(ks - ku, t, "ks <= kuiper");
    tracker.update(ku - tv, t, "kuiper <= tv");
    tracker.update(tv - 1.0, t, "tv <= 1");
  }
  r.max_error = std::max(tracker.max_error, 0.0);
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-12;
  return r;
}

// w1-tv: W_1 equals total variation under the 0/1 metric.
inline Report run_w1_tv(std::uint64_t seed, int trials) {
  Report r{.suite = "w1-tv", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const SpaceDescriptor s = SpaceDescriptor::discrete(8);
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const FinitePointMeasure mu = random_measure(s, 2 + rng.uniform_int(7), rng);
    const FinitePointMeasure nu = random_measure(s, 2 + rng.uniform_int(7), rng);
    tracker.update(std::abs(wasserstein(s, mu, nu, 1.0) - tv_distance(mu, nu)), t, "w1 = tv");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-10;
  return r;
}

// w1-cdf: W_1 on the line equals the integral of |F - G|.
inline Report run_w1_cdf(std::uint64_t seed, int trials) {
  Report r{.suite = "w1-cdf", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const SpaceDescriptor s = SpaceDescriptor::line();
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const FinitePointMeasure mu = verify_detail::random_line_measure(rng, 8);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng, 8);
    tracker.update(std::abs(wasserstein(s, mu, nu, 1.0) - w1_cdf(mu, nu)), t, "w1 = int |F-G|");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-10;
  return r;
}

// pushforward: W_p invariance under lifted point isometries, every space.
inline Report run_pushforward(std::uint64_t seed, int trials) {
  Report r{.suite = "pushforward", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const std::vector<SpaceDescriptor> spaces = {
      SpaceDescriptor::line(), SpaceDescriptor::euclidean(2), SpaceDescriptor::euclidean(3),
      SpaceDescriptor::sphere(3), SpaceDescriptor::discrete(6)};
  const double orders[] = {1.0, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const SpaceDescriptor& s = spaces[static_cast<std::size_t>(t) % spaces.size()];
    const double p = orders[static_cast<std::size_t>(t) % 3];
    const IsometryMap psi = random_isometry(s, rng);
    const MeasureTransform lift = lift_isometry(s, psi);
    const FinitePointMeasure mu = random_measure(s, 2 + rng.uniform_int(4), rng);
    const FinitePointMeasure nu = random_measure(s, 2 + rng.uniform_int(4), rng);
    const double before = wasserstein(s, mu, nu, p);
    const double after = wasserstein(s, lift(mu), lift(nu), p);
    tracker.update(std::abs(after - before), t, "wp invariance");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-9;
  return r;
}

// kloeckner: the center-preserving rotation isometry preserves W_2 and fixes
// the Diracs; W_p distortion for p in {1, 3} is reported but not asserted.
inline Report run_kloeckner(std::uint64_t seed, int trials) {
  Report r{.suite = "kloeckner", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  double p1_distortion = 0.0, p3_distortion = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const SpaceDescriptor s = (t % 2 == 0) ? SpaceDescriptor::euclidean(2)
                                           : SpaceDescriptor::euclidean(3);
    const Matrix q = random_orthogonal(point_dimension(s), rng);
    const MeasureTransform phi = kloeckner_isometry(s, q);
    const FinitePointMeasure mu = random_measure(s, 2 + rng.uniform_int(5), rng);
    const FinitePointMeasure nu = random_measure(s, 2 + rng.uniform_int(5), rng);
    tracker.update(std::abs(wasserstein(s, phi(mu), phi(nu), 2.0) - wasserstein(s, mu, nu, 2.0)),
                   t, "w2 invariance");
    const FinitePointMeasure delta = FinitePointMeasure::dirac(s, random_point(s, rng));
    const FinitePointMeasure fixed = phi(delta);
    tracker.update(is_dirac(fixed) ? distance(s, fixed.atom(0), delta.atom(0)) : 1.0, t,
                   "dirac fixed");
    p1_distortion = std::max(
        p1_distortion,
        std::abs(wasserstein(s, phi(mu), phi(nu), 1.0) - wasserstein(s, mu, nu, 1.0)));
    p3_distortion = std::max(
        p3_distortion,
        std::abs(wasserstein(s, phi(mu), phi(nu), 3.0) - wasserstein(s, mu, nu, 3.0)));
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.witness["unasserted_p1_distortion"] = p1_distortion;
  r.witness["unasserted_p3_distortion"] = p3_distortion;
  r.pass = tracker.max_error <= 1e-7;
  return r;
}

// ks-iso: Kolmogorov-Smirnov invariance and the defining CDF identities for
// both the increasing and the decreasing constructor.
inline Report run_ks_iso(std::uint64_t seed, int trials) {
  Report r{.suite = "ks-iso", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const MonotoneRealBijection psi = verify_detail::random_increasing_affine(rng);
    const MonotoneRealBijection psi_dec{
        [psi](double x) { return psi.forward(-x); },
        [psi](double y) { return -psi.inverse(y); }, false};
    const FinitePointMeasure mu = verify_detail::random_line_measure(rng);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng);
    const double base = ks_distance(mu, nu);

    const MeasureTransform inc = ks_isometry(psi, true);
    tracker.update(std::abs(ks_distance(inc(mu), inc(nu)) - base), t, "increasing invariance");
    const FinitePointMeasure inc_mu = inc(mu);
    const StepCDF f = cdf_of(mu), fi = cdf_of(inc_mu);
    for (double a : verify_detail::off_atom_probes(fi))
      tracker.update(std::abs(fi.eval(a) - f.eval(psi.forward(a))), t, "increasing cdf identity");

    const MeasureTransform dec = ks_isometry(psi_dec, false);
    tracker.update(std::abs(ks_distance(dec(mu), dec(nu)) - base), t, "decreasing invariance");
    const FinitePointMeasure dec_mu = dec(mu);
    const StepCDF fd = cdf_of(dec_mu);
    for (double a : verify_detail::off_atom_probes(fd))
      tracker.update(std::abs(fd.eval(a) - (1.0 - f.eval_left(psi_dec.forward(a)))), t,
                     "decreasing cdf identity");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-10;
  return r;
}

// levy-iso: Levy invariance under translations and reflections plus the
// defining CDF identities.
inline Report run_levy_iso(std::uint64_t seed, int trials) {
  Report r{.suite = "levy-iso", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const double c = rng.uniform(-2.0, 2.0);
    const FinitePointMeasure mu = verify_detail::random_line_measure(rng);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng);
    const double base = levy_distance(mu, nu);
    const StepCDF f = cdf_of(mu);
    for (bool reflect : {false, true}) {
      const MeasureTransform phi = levy_isometry(c, reflect);
      tracker.update(std::abs(levy_distance(phi(mu), phi(nu)) - base), t,
                     reflect ? "reflection invariance" : "translation invariance");
      const FinitePointMeasure phi_mu = phi(mu);
      const StepCDF g = cdf_of(phi_mu);
      for (double a : verify_detail::off_atom_probes(g)) {
        const double expected = reflect ? 1.0 - f.eval_left(-a + c) : f.eval(a + c);
        tracker.update(std::abs(g.eval(a) - expected), t, "cdf identity");
      }
    }
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-9;
  return r;
}

// kuiper-iso: Kuiper invariance under the cube homeomorphism and random
// increasing affine maps.
inline Report run_kuiper_iso(std::uint64_t seed, int trials) {
  Report r{.suite = "kuiper-iso", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const MonotoneRealBijection g = (t % 2 == 0) ? verify_detail::cube_bijection()
                                                 : verify_detail::random_increasing_affine(rng);
    const MeasureTransform phi = kuiper_isometry(g);
    const FinitePointMeasure mu = verify_detail::random_line_measure(rng);
    const FinitePointMeasure nu = verify_detail::random_line_measure(rng);
    tracker.update(std::abs(kuiper_distance(phi(mu), phi(nu)) - kuiper_distance(mu, nu)), t,
                   (t % 2 == 0) ? "cube homeomorphism" : "affine homeomorphism");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-9;
  return r;
}

// lp-iso: Levy-Prokhorov invariance under affine-orthogonal maps of the
// plane, small supports.
inline Report run_lp_iso(std::uint64_t seed, int trials) {
  Report r{.suite = "lp-iso", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const SpaceDescriptor s = SpaceDescriptor::euclidean(2);
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    Matrix q = random_orthogonal(2, rng);
    std::vector<double> shift = {rng.normal(), rng.normal()};
    const MeasureTransform phi = lp_isometry(s, AffineIsometry{std::move(q), std::move(shift)});
    const FinitePointMeasure mu = random_measure(s, 2 + rng.uniform_int(7), rng);
    const FinitePointMeasure nu = random_measure(s, 2 + rng.uniform_int(7), rng);
    tracker.update(
        std::abs(levy_prokhorov_distance(s, phi(mu), phi(nu)) - levy_prokhorov_distance(s, mu, nu)),
        t, "lp invariance");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-8;
  return r;
}

// dirac-claim: on spheres, Diracs attain W_p = 1 against their antipode and
// nothing else gets to 1, certified by the product-coupling bound.
inline Report run_dirac_claim(std::uint64_t seed, int trials) {
  Report r{.suite = "dirac-claim", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  double worst_nondirac_wp = 0.0;
  const double orders[] = {1.0, 2.0, 3.0};
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const SpaceDescriptor s =
        ((t / 2) % 2 == 0) ? SpaceDescriptor::sphere(3) : SpaceDescriptor::sphere(2);
    const double p = orders[static_cast<std::size_t>(t) % 3];
    const bool dirac_case = (t % 2 == 0);
    const FinitePointMeasure mu = dirac_case
                                      ? FinitePointMeasure::dirac(s, random_point(s, rng))
                                      : random_measure(s, 2 + rng.uniform_int(4), rng);
    const DiracCharacterizationReport report =
        verify_dirac_characterization(s, mu, p, 96, rng);
    if (report.dirac) {
      tracker.update(std::abs(report.worst_wp - 1.0), t, "antipodal distance");
    } else {
      if (!report.pass) {
        r.pass = false;
        r.witness = json{{"trial", t}, {"check", "strictly-below-one"},
                         {"worst_wp", report.worst_wp}, {"worst_bound", report.worst_bound}};
      }
      worst_nondirac_wp = std::max(worst_nondirac_wp, report.worst_wp);
    }
  }
  r.max_error = tracker.max_error;
  if (r.witness.empty()) r.witness = tracker.witness;
  r.witness["worst_nondirac_wp"] = worst_nondirac_wp;
  r.pass = r.pass && tracker.max_error <= 1e-12;
  return r;
}

// point-map: Dirac restriction of lifted sphere isometries recovers the
// point map with negligible defect; deliberate non-isometries are flagged.
inline Report run_point_map(std::uint64_t seed, int trials) {
  Report r{.suite = "point-map", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  const SpaceDescriptor s = SpaceDescriptor::sphere(3);
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const Matrix q = random_orthogonal(3, rng);
    const IsometryMap psi = IsometryMap::orthogonal(q);
    const MeasureTransform phi = lift_isometry(s, psi);
    std::vector<Point> sample;
    for (int k = 0; k < 12; ++k) sample.push_back(random_point(s, rng));
    const PointMapExtraction ext = extract_point_map(phi, s, sample);
    tracker.update(ext.isometry_defect, t, "isometry defect");
    for (std::size_t k = 0; k < sample.size(); ++k)
      tracker.update(distance(s, ext.images[k], apply(psi, s, sample[k])), t, "map recovery");

    if (t == 0) {
      // A collapse to a fixed Dirac keeps images Dirac but wrecks distances.
      const Point anchor = random_point(s, rng);
      const MeasureTransform collapse{
          "collapse", [s, anchor](const FinitePointMeasure&) {
            return FinitePointMeasure::dirac(s, anchor);
          }};
      const PointMapExtraction bad = extract_point_map(collapse, s, sample);
      if (bad.isometry_defect <= 0.1) {
        r.pass = false;
        r.witness = json{{"trial", t}, {"check", "collapse transform not flagged"}};
      }
      // A smear transform must trip the Dirac check.
      const MeasureTransform smear{
          "smear", [s](const FinitePointMeasure& m) {
            std::vector<Point> atoms = {m.atom(0), antipode(s, m.atom(0))};
            return FinitePointMeasure(s, std::move(atoms), {0.5, 0.5});
          }};
      bool threw = false;
      try {
        extract_point_map(smear, s, sample);
      } catch (const Error& e) {
        threw = (e.code() == ErrorCode::image_not_dirac);
      }
      if (!threw) {
        r.pass = false;
        r.witness = json{{"trial", t}, {"check", "smear transform not flagged"}};
      }
    }
  }
  r.max_error = tracker.max_error;
  if (r.witness.empty()) r.witness = tracker.witness;
  r.pass = r.pass && tracker.max_error <= 1e-9;
  return r;
}

// oracle: network simplex versus exhaustive spanning-tree enumeration, with
// the dual certificate checked on every solve.
inline Report run_oracle(std::uint64_t seed, int trials) {
  Report r{.suite = "oracle", .seed = seed, .trials = trials};
  verify_detail::Tracker tracker;
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    const std::size_t m = 1 + rng.uniform_int(4), n = 1 + rng.uniform_int(4);
    std::vector<double> wmu(m), wnu(n);
    double sa = 0.0, sb = 0.0;
    for (double& w : wmu) sa += (w = 0.05 + rng.uniform());
    for (double& w : wnu) sb += (w = 0.05 + rng.uniform());
    for (double& w : wmu) w /= sa;
    for (double& w : wnu) w /= sb;
    Matrix cost(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) cost(i, j) = rng.uniform(0.0, 2.0);

    const TransportResult solved = solve_transport(cost, wmu, wnu);
    const double brute = oracle_transport(cost, wmu, wnu);
    tracker.update(std::abs(solved.cost - brute), t, "optimal cost");
    const CertificateCheck cert = check_certificate(solved, cost);
    tracker.update(cert.feasibility_violation, t, "dual feasibility");
    tracker.update(cert.slackness_violation, t, "complementary slackness");
    tracker.update(cert.duality_gap, t, "strong duality");
  }
  r.max_error = tracker.max_error;
  r.witness = tracker.witness;
  r.pass = tracker.max_error <= 1e-9;
  return r;
}

namespace verify_detail {

// A Kolmogorov-Smirnov universe in which delta_0 is the only member whose
// support sits strictly inside (-1/4, 1/4): the sentinels delta_{+-1/4}
// pin the bidual fixed point down to exactly {delta_0}.
inline std::vector<FinitePointMeasure> bidual_universe(Rng& rng, std::size_t size,
                                                       std::size_t& straddler_index) {
  const SpaceDescriptor line = SpaceDescriptor::line();
  std::vector<FinitePointMeasure> universe;
  universe.push_back(FinitePointMeasure::dirac(line, {0.0}));
  universe.push_back(FinitePointMeasure::dirac(line, {0.25}));
  universe.push_back(FinitePointMeasure::dirac(line, {-0.25}));
  straddler_index = 0;
  auto magnitude = [&rng]() { return rng.uniform(0.3, 3.0); };
  while (universe.size() < size) {
    const std::size_t kind = universe.size() % 3;
    std::vector<Point> atoms;
    const std::size_t count = 1 + rng.uniform_int(3);
    if (kind == 0) {  // one-sided positive
      for (std::size_t i = 0; i < count; ++i) atoms.push_back(Point{magnitude()});
    } else if (kind == 1) {  // one-sided negative
      for (std::size_t i = 0; i < count; ++i) atoms.push_back(Point{-magnitude()});
    } else {  // straddles zero
      atoms.push_back(Point{magnitude()});
      atoms.push_back(Point{-magnitude()});
      for (std::size_t i = 2; i < count; ++i)
        atoms.push_back(Point{(rng.uniform() < 0.5 ? 1.0 : -1.0) * magnitude()});
      if (straddler_index == 0) straddler_index = universe.size();
    }
    std::vector<double> weights(atoms.size());
    double sum = 0.0;
    for (double& w : weights) sum += (w = 0.1 + rng.uniform());
    for (double& w : weights) w /= sum;
    universe.emplace_back(line, std::move(atoms), std::move(weights));
  }
  return universe;
}

}  // namespace verify_detail

// bidual: inside a finite KS universe, U(U({delta_0})) returns exactly
// {delta_0} while a non-Dirac member fails the fixed-point identity.
inline Report run_bidual(std::uint64_t seed, int trials) {
  Report r{.suite = "bidual", .seed = seed, .trials = trials};
  for (int t = 0; t < trials; ++t) {
    Rng rng = derive_rng(seed, static_cast<std::uint64_t>(t));
    std::size_t straddler = 0;
    const std::vector<FinitePointMeasure> universe =
        verify_detail::bidual_universe(rng, 20, straddler);
    const std::vector<std::size_t> u0 = bidual_set(universe, MetricName::ks, 2.0, {0});
    const std::vector<std::size_t> uu0 = bidual_set(universe, MetricName::ks, 2.0, u0);
    const bool dirac_fixed = (uu0 == std::vector<std::size_t>{0});
    bool straddler_moves = true;
    if (straddler != 0) {
      const std::vector<std::size_t> us = bidual_set(universe, MetricName::ks, 2.0, {straddler});
      const std::vector<std::size_t> uus = bidual_set(universe, MetricName::ks, 2.0, us);
      straddler_moves = !(uus == std::vector<std::size_t>{straddler});
    }
    if (!dirac_fixed || !straddler_moves) {
      r.pass = false;
      r.max_error = 1.0;
      r.witness = json{{"trial", t},
                       {"dirac_fixed", dirac_fixed},
                       {"straddler_moves", straddler_moves},
                       {"u_size", u0.size()},
                       {"uu_size", uu0.size()}};
    }
  }
  if (r.pass) r.witness = json{{"universe", 20}};
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "metric-axioms", "chain",      "w1-tv",     "w1-cdf",     "pushforward",
      "kloeckner",     "ks-iso",     "levy-iso",  "kuiper-iso", "lp-iso",
      "dirac-claim",   "point-map",  "oracle",    "bidual"};
  return names;
}

inline Report run_suite(const std::string& name, std::uint64_t seed, int trials) {
  if (name == "metric-axioms") return run_metric_axioms(seed, trials);
  if (name == "chain") return run_chain(seed, trials);
  if (name == "w1-tv") return run_w1_tv(seed, trials);
  if (name == "w1-cdf") return run_w1_cdf(seed, trials);
  if (name == "pushforward") return run_pushforward(seed, trials);
  if (name == "kloeckner") return run_kloeckner(seed, trials);
  if (name == "ks-iso") return run_ks_iso(seed, trials);
  if (name == "levy-iso") return run_levy_iso(seed, trials);
  if (name == "kuiper-iso") return run_kuiper_iso(seed, trials);
  if (name == "lp-iso") return run_lp_iso(seed, trials);
  if (name == "dirac-claim") return run_dirac_claim(seed, trials);
  if (name == "point-map") return run_point_map(seed, trials);
  if (name == "oracle") return run_oracle(seed, trials);
  if (name == "bidual") return run_bidual(seed, trials);
  fail(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
}

}  // namespace otlab

#endif  // OTLAB_VERIFY_HPP

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

#include <algorithm>
#include <cmath>
#include <vector>

#include <catch2/catch.hpp>

#include "test_helpers.hpp"

using namespace otlab;
using otlab::testing::direct_cdf;
using otlab::testing::direct_cdf_left;
using otlab::testing::interval_mass;
using otlab::testing::line_dirac;
using otlab::testing::line_measure;
using otlab::testing::thrown_code;

namespace {

// ---- brute-force oracles, independent of the library code paths ----

// sup_B |mu(B) - nu(B)| over every subset of the merged support.
double oracle_tv(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  struct Entry {
    Point atom;
    double wmu = 0.0, wnu = 0.0;
  };
  std::vector<Entry> merged;
  auto add = [&](const Point& a, double w, bool from_mu) {
    for (Entry& e : merged)
      if (distance(mu.space(), e.atom, a) <= 1e-12) {
        (from_mu ? e.wmu : e.wnu) += w;
        return;
      }
    Entry e{a, 0.0, 0.0};
    (from_mu ? e.wmu : e.wnu) = w;
    merged.push_back(std::move(e));
  };
  for (std::size_t i = 0; i < mu.size(); ++i) add(mu.atom(i), mu.weight(i), true);
  for (std::size_t j = 0; j < nu.size(); ++j) add(nu.atom(j), nu.weight(j), false);
  REQUIRE(merged.size() <= 20);
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << merged.size()); ++mask) {
    double diff = 0.0;
    for (std::size_t k = 0; k < merged.size(); ++k)
      if (mask & (1u << k)) diff += merged[k].wmu - merged[k].wnu;
    best = std::max(best, std::abs(diff));
  }
  return best;
}

// sup_t |F - G| on a fine grid around the supports.
double oracle_ks_grid(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  std::vector<double> probes;
  auto push_around = [&](double a) {
    probes.push_back(a - 1e-7);
    probes.push_back(a);
    probes.push_back(a + 1e-7);
  };
  for (const Point& a : mu.atoms()) push_around(a[0]);
  for (const Point& a : nu.atoms()) push_around(a[0]);
  for (double t = -4.0; t <= 4.0; t += 0.01) probes.push_back(t);
  double best = 0.0;
  for (double t : probes) best = std::max(best, std::abs(direct_cdf(mu, t) - direct_cdf(nu, t)));
  return best;
}

// sup over non-degenerate intervals, every endpoint-inclusion pattern, with
// endpoints drawn from atoms, gap midpoints and sentinels beyond the support.
double oracle_kuiper(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  std::vector<double> ends;
  for (const Point& a : mu.atoms()) ends.push_back(a[0]);
  for (const Point& a : nu.atoms()) ends.push_back(a[0]);
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  std::vector<double> candidates = ends;
  for (std::size_t k = 0; k + 1 < ends.size(); ++k)
    candidates.push_back(0.5 * (ends[k] + ends[k + 1]));
  candidates.push_back(ends.front() - 1.0);
  candidates.push_back(ends.back() + 1.0);
  std::sort(candidates.begin(), candidates.end());

  double best = 0.0;
  for (std::size_t a = 0; a < candidates.size(); ++a)
    for (std::size_t b = a + 1; b < candidates.size(); ++b)
      for (bool lo_closed : {false, true})
        for (bool hi_closed : {false, true}) {
          const double diff =
              interval_mass(mu, candidates[a], lo_closed, candidates[b], hi_closed) -
              interval_mass(nu, candidates[a], lo_closed, candidates[b], hi_closed);
          best = std::max(best, std::abs(diff));
        }
  return best;
}

// Two-sided sandwich feasibility from direct mass sums; checked at the jump
// candidates and their left limits, which is exhaustive for step functions.
bool oracle_levy_feasible(const FinitePointMeasure& mu, const FinitePointMeasure& nu,
                          double eps) {
  std::vector<double> probes;
  for (const Point& a : mu.atoms()) {
    probes.push_back(a[0]);
    probes.push_back(a[0] - eps);
    probes.push_back(a[0] + eps);
  }
  for (const Point& b : nu.atoms()) probes.push_back(b[0]);
  for (double t : probes) {
    if (direct_cdf(nu, t) < direct_cdf(mu, t - eps) - eps) return false;
    if (direct_cdf_left(nu, t) < direct_cdf_left(mu, t - eps) - eps) return false;
    if (direct_cdf(nu, t) > direct_cdf(mu, t + eps) + eps) return false;
    if (direct_cdf_left(nu, t) > direct_cdf_left(mu, t + eps) + eps) return false;
  }
  return true;
}

double oracle_levy(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  if (oracle_levy_feasible(mu, nu, 0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (oracle_levy_feasible(mu, nu, mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// One-sided enlargement feasibility over every subset of supp(mu), with the
// strict open ball d < eps, from direct sums; then plain bisection.
double oracle_levy_prokhorov(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                             const FinitePointMeasure& nu) {
  REQUIRE(mu.size() <= 12);
  const auto feasible = [&](double eps) {
    for (std::uint32_t mask = 1; mask < (1u << mu.size()); ++mask) {
      double mu_mass = 0.0;
      for (std::size_t i = 0; i < mu.size(); ++i)
        if (mask & (1u << i)) mu_mass += mu.weight(i);
      double enlarged = 0.0;
      for (std::size_t j = 0; j < nu.size(); ++j) {
        bool inside = false;
        for (std::size_t i = 0; i < mu.size() && !inside; ++i)
          if ((mask & (1u << i)) && distance(s, mu.atom(i), nu.atom(j)) < eps) inside = true;
        if (inside) enlarged += nu.weight(j);
      }
      if (mu_mass > enlarged + eps) return false;
    }
    return true;
  };
  double lo = 0.0, hi = 1.0 + 1e-9;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("step CDFs") {
  const StepCDF f = cdf_of(line_dirac(0.0));
  CHECK(f.eval(-0.1) == 0.0);
  CHECK(f.eval(0.0) == 1.0);
  CHECK(f.eval(5.0) == 1.0);
  CHECK(f.eval_left(0.0) == 0.0);

  const StepCDF g = cdf_of(line_measure({0.0, 1.0}, {0.5, 0.5}));
  CHECK(g.eval(0.0) == 0.5);
  CHECK(g.eval(1.0) == 1.0);
  CHECK(g.eval_left(0.0) == 0.0);
  CHECK(g.eval_left(1.0) == 0.5);
  // Right continuity away from atoms: both one-sided values agree.
  CHECK(g.eval(0.5) == g.eval_left(0.5));

  CHECK(thrown_code([] {
          cdf_of(FinitePointMeasure::dirac(SpaceDescriptor::euclidean(2), Point{0.0, 0.0}));
        }) == ErrorCode::wrong_space);
}

TEST_CASE("total variation") {
  const auto mu = line_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(tv_distance(mu, mu) == 0.0);
  CHECK(tv_distance(line_dirac(0.0), line_dirac(1.0)) == 1.0);
  // All four subsets of the merged support give at most 1/2.
  CHECK(tv_distance(mu, line_dirac(0.0)) == Approx(0.5));

  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = derive_rng(111, trial);
    const SpaceDescriptor s =
        (trial % 2 == 0) ? SpaceDescriptor::line() : SpaceDescriptor::discrete(5);
    const auto a = random_measure(s, 2 + rng.uniform_int(4), rng);
    const auto b = random_measure(s, 2 + rng.uniform_int(4), rng);
    CHECK(tv_distance(a, b) == Approx(oracle_tv(a, b)).margin(1e-12));
  }

  CHECK(thrown_code([&] {
          tv_distance(mu, otlab::testing::discrete_measure(3, {0}, {1.0}));
        }) == ErrorCode::space_mismatch);
}

TEST_CASE("Kolmogorov-Smirnov distance") {
  CHECK(ks_distance(line_dirac(0.0), line_dirac(1.0)) == 1.0);
  const auto mu = line_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(ks_distance(mu, mu) == 0.0);
  CHECK(ks_distance(line_dirac(0.0), mu) == Approx(0.5));

  for (std::uint64_t trial = 0; trial < 25; ++trial) {
    Rng rng = derive_rng(222, trial);
    const auto a = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    const auto b = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    CHECK(ks_distance(a, b) == Approx(oracle_ks_grid(a, b)).margin(1e-9));
  }

  CHECK(thrown_code([] {
          ks_distance(FinitePointMeasure::dirac(SpaceDescriptor::euclidean(2), Point{0.0, 0.0}),
                      FinitePointMeasure::dirac(SpaceDescriptor::euclidean(2), Point{1.0, 0.0}));
        }) == ErrorCode::wrong_space);
}

TEST_CASE("Kuiper distance") {
  const auto mu = line_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(kuiper_distance(mu, mu) == 0.0);
  CHECK(kuiper_distance(line_dirac(0.0), mu) == Approx(0.5));
  CHECK(kuiper_distance(line_dirac(0.0), mu) == Approx(oracle_kuiper(line_dirac(0.0), mu)));

  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng = derive_rng(333, trial);
    const auto a = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    const auto b = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    CHECK(kuiper_distance(a, b) == Approx(oracle_kuiper(a, b)).margin(1e-12));
  }
}

TEST_CASE("the chain d_KS <= d_KU <= d_TV <= 1") {
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    Rng rng = derive_rng(444, trial);
    const auto a = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(5), rng);
    const auto b = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(5), rng);
    const double ks = ks_distance(a, b);
    const double ku = kuiper_distance(a, b);
    const double tv = tv_distance(a, b);
    CHECK(ks <= ku + 1e-12);
    CHECK(ku <= tv + 1e-12);
    CHECK(tv <= 1.0 + 1e-12);
    CHECK(ks <= tv + 1e-12);
  }
}

TEST_CASE("Levy distance") {
  const auto mu = line_measure({0.0, 1.0}, {0.5, 0.5});
  CHECK(levy_distance(mu, mu) == 0.0);

  // Diracs at distance c: the sandwich first closes at eps = min(c, 1).
  for (double c : {0.3, 0.7, 1.0}) {
    CHECK(levy_distance(line_dirac(0.0), line_dirac(c)) == Approx(c).margin(1e-9));
    // The defining constraint fails just below the distance...
    CHECK_FALSE(oracle_levy_feasible(line_dirac(0.0), line_dirac(c), 0.9 * c));
    // ...and holds just above it.
    CHECK(oracle_levy_feasible(line_dirac(0.0), line_dirac(c), c + 1e-9));
  }
  CHECK(levy_distance(line_dirac(0.0), line_dirac(5.0)) == Approx(1.0).margin(1e-9));

  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng = derive_rng(555, trial);
    const auto a = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    const auto b = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    CHECK(levy_distance(a, b) == Approx(oracle_levy(a, b)).margin(1e-8));
    CHECK(std::abs(levy_distance(a, b) - levy_distance(b, a)) <= 1e-9);
  }
}

TEST_CASE("W1 as the integral of |F - G|") {
  CHECK(w1_cdf(line_dirac(0.0), line_dirac(1.0)) == Approx(1.0));
  const auto mu = line_measure({-1.0, 0.5, 2.0}, {0.25, 0.25, 0.5});
  CHECK(w1_cdf(mu, mu) == 0.0);

  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = derive_rng(666, trial);
    const auto a = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    const auto b = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(4), rng);
    CHECK(std::abs(w1_cdf(a, b) - wasserstein(SpaceDescriptor::line(), a, b, 1.0)) <= 1e-10);
  }
}

TEST_CASE("shared-grid measures exercise the exact-tie paths") {
  // Atoms drawn from a common integer grid coincide bit-exactly across the
  // two measures, which stresses merged-breakpoint and left-limit handling.
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    Rng rng = derive_rng(2323, trial);
    const auto grid_measure = [&rng]() {
      std::vector<int> labels = {0, 1, 2, 3, 4, 5};
      for (std::size_t i = labels.size(); i > 1; --i)
        std::swap(labels[i - 1], labels[rng.uniform_int(i)]);
      const std::size_t k = 2 + rng.uniform_int(4);
      std::vector<Point> atoms;
      std::vector<double> weights;
      double sum = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        atoms.push_back(Point{static_cast<double>(labels[i])});
        weights.push_back(0.1 + rng.uniform());
        sum += weights.back();
      }
      for (double& w : weights) w /= sum;
      return FinitePointMeasure(SpaceDescriptor::line(), std::move(atoms), std::move(weights));
    };
    const auto mu = grid_measure(), nu = grid_measure();
    CHECK(tv_distance(mu, nu) == Approx(oracle_tv(mu, nu)).margin(1e-12));
    CHECK(kuiper_distance(mu, nu) == Approx(oracle_kuiper(mu, nu)).margin(1e-12));
    CHECK(levy_distance(mu, nu) == Approx(oracle_levy(mu, nu)).margin(1e-8));
    CHECK(std::abs(w1_cdf(mu, nu) - wasserstein(SpaceDescriptor::line(), mu, nu, 1.0)) <= 1e-10);
    const double ks = ks_distance(mu, nu);
    CHECK(ks <= kuiper_distance(mu, nu) + 1e-12);
  }
}

TEST_CASE("Levy-Prokhorov distance") {
  const SpaceDescriptor line = SpaceDescriptor::line();

  SECTION("Dirac pairs cap at 1") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
      Rng rng = derive_rng(777, trial);
      const SpaceDescriptor s =
          (trial % 2 == 0) ? SpaceDescriptor::euclidean(2) : SpaceDescriptor::line();
      const Point x = random_point(s, rng), y = random_point(s, rng);
      const auto dx = FinitePointMeasure::dirac(s, x);
      const auto dy = FinitePointMeasure::dirac(s, y);
      const double expected = std::min(distance(s, x, y), 1.0);
      CHECK(levy_prokhorov_distance(s, dx, dy) == Approx(expected).margin(1e-9));
    }
    CHECK(levy_prokhorov_distance(line, line_dirac(0.0), line_dirac(5.0)) == Approx(1.0));
  }
  SECTION("identical measures are at distance zero") {
    Rng rng(3);
    const auto m = random_measure(line, 4, rng);
    CHECK(levy_prokhorov_distance(line, m, m) == 0.0);
  }
  SECTION("worked two-atom example") {
    const auto mu = line_measure({0.0, 1.0}, {0.5, 0.5});
    CHECK(levy_prokhorov_distance(line, mu, line_dirac(0.0)) == Approx(0.5));
    CHECK(oracle_levy_prokhorov(line, mu, line_dirac(0.0)) == Approx(0.5).margin(1e-8));
  }
  SECTION("matches the bisection-over-subsets oracle") {
    const std::vector<SpaceDescriptor> spaces = {SpaceDescriptor::line(),
                                                 SpaceDescriptor::euclidean(2),
                                                 SpaceDescriptor::discrete(5),
                                                 SpaceDescriptor::sphere(2)};
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
      Rng rng = derive_rng(999, trial);
      const SpaceDescriptor& s = spaces[trial % spaces.size()];
      const auto a = random_measure(s, 2 + rng.uniform_int(4), rng);
      const auto b = random_measure(s, 2 + rng.uniform_int(4), rng);
      CHECK(levy_prokhorov_distance(s, a, b) ==
            Approx(oracle_levy_prokhorov(s, a, b)).margin(1e-8));
    }
  }
  SECTION("the one-sided formula is symmetric in practice") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
      Rng rng = derive_rng(1010, trial);
      const SpaceDescriptor s =
          (trial % 2 == 0) ? SpaceDescriptor::euclidean(2) : SpaceDescriptor::line();
      const auto a = random_measure(s, 2 + rng.uniform_int(5), rng);
      const auto b = random_measure(s, 2 + rng.uniform_int(5), rng);
      CHECK(std::abs(levy_prokhorov_distance(s, a, b) - levy_prokhorov_distance(s, b, a)) <=
            1e-9);
    }
  }
  SECTION("support cap") {
    std::vector<Point> atoms;
    std::vector<double> weights;
    for (int i = 0; i < 16; ++i) {
      atoms.push_back(Point{static_cast<double>(i)});
      weights.push_back(1.0 / 16.0);
    }
    const FinitePointMeasure big(line, atoms, weights);
    CHECK(thrown_code([&] { levy_prokhorov_distance(line, big, line_dirac(0.0)); }) ==
          ErrorCode::support_too_large);
  }
  SECTION("space mismatch") {
    CHECK(thrown_code([&] {
            levy_prokhorov_distance(line, line_dirac(0.0),
                                    otlab::testing::discrete_measure(3, {0}, {1.0}));
          }) == ErrorCode::space_mismatch);
  }
}

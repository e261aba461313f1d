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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line with
// its observed worst error; the whole binary is wired into ctest.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <catch2/catch.hpp>

#include "test_helpers.hpp"

using namespace otlab;

namespace {

void announce(int criterion, const std::string& name, bool pass, double worst,
              const std::string& extra = "") {
  std::printf("[criterion %2d] %-28s %s (worst %.3e%s%s)\n", criterion, name.c_str(),
              pass ? "PASS" : "FAIL", worst, extra.empty() ? "" : "; ", extra.c_str());
  std::fflush(stdout);
}

std::string sci(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", value);
  return buffer;
}

const std::vector<SpaceDescriptor>& embedding_spaces() {
  static const std::vector<SpaceDescriptor> spaces = {
      SpaceDescriptor::line(), SpaceDescriptor::euclidean(2), SpaceDescriptor::euclidean(3),
      SpaceDescriptor::sphere(3), SpaceDescriptor::discrete(6)};
  return spaces;
}

}  // namespace

TEST_CASE("criterion 1: Dirac embedding is isometric") {
  double worst = 0.0;
  for (const SpaceDescriptor& s : embedding_spaces()) {
    for (std::uint64_t pair = 0; pair < 100; ++pair) {
      Rng rng = derive_rng(101, pair * 16 + static_cast<std::uint64_t>(s.kind) * 4 +
                                    static_cast<std::uint64_t>(s.dim));
      const Point x = random_point(s, rng), y = random_point(s, rng);
      const auto dx = FinitePointMeasure::dirac(s, x);
      const auto dy = FinitePointMeasure::dirac(s, y);
      const double d = distance(s, x, y);
      for (double p : {1.0, 1.5, 2.0, 3.0})
        worst = std::max(worst, std::abs(wasserstein(s, dx, dy, p) - d));
    }
  }
  const bool pass = worst <= 1e-12;
  announce(1, "dirac-embedding", pass, worst);
  REQUIRE(pass);
}

TEST_CASE("criterion 2: solver matches the brute-force oracle with certificates") {
  double worst_gap = 0.0, worst_cert = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = derive_rng(202, trial);
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
    const TransportResult r = solve_transport(cost, wmu, wnu);
    worst_gap = std::max(worst_gap, std::abs(r.cost - oracle_transport(cost, wmu, wnu)));
    const CertificateCheck cert = check_certificate(r, cost);
    worst_cert = std::max(
        {worst_cert, cert.feasibility_violation, cert.slackness_violation, cert.duality_gap});
  }
  const bool pass = worst_gap <= 1e-10 && worst_cert <= 1e-9;
  announce(2, "oracle-equivalence", pass, worst_gap,
           "certificate " + sci(worst_cert));
  REQUIRE(pass);
}

TEST_CASE("criterion 3: W_1 equals total variation on a discrete space") {
  const SpaceDescriptor s = SpaceDescriptor::discrete(8);
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = derive_rng(303, trial);
    const auto mu = random_measure(s, 2 + rng.uniform_int(7), rng);
    const auto nu = random_measure(s, 2 + rng.uniform_int(7), rng);
    worst = std::max(worst, std::abs(wasserstein(s, mu, nu, 1.0) - tv_distance(mu, nu)));
  }
  const bool pass = worst <= 1e-10;
  announce(3, "w1-equals-tv", pass, worst);
  REQUIRE(pass);
}

TEST_CASE("criterion 4: W_1 equals the CDF integral on the line") {
  const SpaceDescriptor s = SpaceDescriptor::line();
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = derive_rng(404, trial);
    const auto mu = random_measure(s, 2 + rng.uniform_int(7), rng);
    const auto nu = random_measure(s, 2 + rng.uniform_int(7), rng);
    worst = std::max(worst, std::abs(wasserstein(s, mu, nu, 1.0) - w1_cdf(mu, nu)));
  }
  const bool pass = worst <= 1e-10;
  announce(4, "w1-equals-cdf-integral", pass, worst);
  REQUIRE(pass);
}

TEST_CASE("criterion 5: the KS <= Kuiper <= TV <= 1 chain") {
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng = derive_rng(505, trial);
    const auto mu = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(6), rng);
    const auto nu = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(6), rng);
    const double ks = ks_distance(mu, nu);
    const double ku = kuiper_distance(mu, nu);
    const double tv = tv_distance(mu, nu);
    worst = std::max({worst, ks - ku, ku - tv, tv - 1.0});
  }
  const bool pass = worst <= 1e-12;
  announce(5, "metric-chain", pass, std::max(worst, 0.0));
  REQUIRE(pass);
}

TEST_CASE("criterion 6: push-forward isometries preserve W_p") {
  double worst = 0.0;
  for (const SpaceDescriptor& s : embedding_spaces()) {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      Rng rng = derive_rng(606, trial * 8 + static_cast<std::uint64_t>(s.kind) * 2 +
                                     static_cast<std::uint64_t>(s.dim));
      const MeasureTransform lift = lift_isometry(s, random_isometry(s, rng));
      const auto mu = random_measure(s, 2 + rng.uniform_int(4), rng);
      const auto nu = random_measure(s, 2 + rng.uniform_int(4), rng);
      for (double p : {1.0, 2.0, 3.0})
        worst = std::max(worst,
                         std::abs(wasserstein(s, lift(mu), lift(nu), p) - wasserstein(s, mu, nu, p)));
    }
  }
  const bool pass = worst <= 1e-9;
  announce(6, "pushforward-isometries", pass, worst);
  REQUIRE(pass);
}

TEST_CASE("criterion 7: the center-preserving rotation isometry") {
  double worst_w2 = 0.0, worst_dirac = 0.0;
  for (int dim : {2, 3}) {
    const SpaceDescriptor s = SpaceDescriptor::euclidean(dim);
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
      Rng rng = derive_rng(707, trial * 2 + static_cast<std::uint64_t>(dim));
      const MeasureTransform phi =
          kloeckner_isometry(s, random_orthogonal(point_dimension(s), rng));
      const auto mu = random_measure(s, 2 + rng.uniform_int(5), rng);
      const auto nu = random_measure(s, 2 + rng.uniform_int(5), rng);
      worst_w2 = std::max(
          worst_w2, std::abs(wasserstein(s, phi(mu), phi(nu), 2.0) - wasserstein(s, mu, nu, 2.0)));
      const Point x = random_point(s, rng);
      const FinitePointMeasure fixed = phi(FinitePointMeasure::dirac(s, x));
      worst_dirac =
          std::max(worst_dirac, is_dirac(fixed) ? distance(s, fixed.atom(0), x) : 1.0);
    }
  }
  const bool pass = worst_w2 <= 1e-7 && worst_dirac <= 1e-12;
  announce(7, "rotation-isometry", pass, worst_w2,
           "dirac displacement " + sci(worst_dirac));
  REQUIRE(pass);
}

TEST_CASE("criterion 8: constructor isometries for the classical metrics") {
  double worst_ks = 0.0, worst_levy = 0.0, worst_kuiper = 0.0, worst_lp = 0.0;

  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = derive_rng(808, trial);
    const double a = rng.uniform(0.5, 2.0), b = rng.uniform(-1.0, 1.0);
    const MonotoneRealBijection inc{[a, b](double t) { return a * t + b; },
                                    [a, b](double y) { return (y - b) / a; }, true};
    const MonotoneRealBijection dec{[a, b](double t) { return -a * t + b; },
                                    [a, b](double y) { return (b - y) / a; }, false};
    const auto mu = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(5), rng);
    const auto nu = random_measure(SpaceDescriptor::line(), 2 + rng.uniform_int(5), rng);

    const double ks = ks_distance(mu, nu);
    const MeasureTransform phi_inc = ks_isometry(inc, true);
    const MeasureTransform phi_dec = ks_isometry(dec, false);
    worst_ks = std::max({worst_ks, std::abs(ks_distance(phi_inc(mu), phi_inc(nu)) - ks),
                         std::abs(ks_distance(phi_dec(mu), phi_dec(nu)) - ks)});

    const double le = levy_distance(mu, nu);
    const double c = rng.uniform(-2.0, 2.0);
    for (bool reflect : {false, true}) {
      const MeasureTransform phi = levy_isometry(c, reflect);
      worst_levy = std::max(worst_levy, std::abs(levy_distance(phi(mu), phi(nu)) - le));
    }

    const double ku = kuiper_distance(mu, nu);
    const MonotoneRealBijection cube{[](double t) { return t * t * t; },
                                     [](double y) { return std::cbrt(y); }, true};
    for (const MonotoneRealBijection& g : {cube, inc}) {
      const MeasureTransform phi = kuiper_isometry(g);
      worst_kuiper = std::max(worst_kuiper, std::abs(kuiper_distance(phi(mu), phi(nu)) - ku));
    }
  }

  const SpaceDescriptor plane = SpaceDescriptor::euclidean(2);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    Rng rng = derive_rng(809, trial);
    Matrix q = random_orthogonal(2, rng);
    const MeasureTransform phi = lp_isometry(plane, AffineIsometry{q, {rng.normal(), rng.normal()}});
    const auto mu = random_measure(plane, 2 + rng.uniform_int(7), rng);
    const auto nu = random_measure(plane, 2 + rng.uniform_int(7), rng);
    worst_lp = std::max(worst_lp, std::abs(levy_prokhorov_distance(plane, phi(mu), phi(nu)) -
                                           levy_prokhorov_distance(plane, mu, nu)));
  }

  const bool pass =
      worst_ks <= 1e-10 && worst_levy <= 1e-9 && worst_kuiper <= 1e-9 && worst_lp <= 1e-8;
  announce(8, "constructor-isometries", pass,
           std::max({worst_ks, worst_levy, worst_kuiper, worst_lp}),
           "ks " + sci(worst_ks) + ", levy " + sci(worst_levy) +
               ", kuiper " + sci(worst_kuiper) + ", lp " + sci(worst_lp));
  REQUIRE(pass);
}

TEST_CASE("criterion 9: the unit-distance characterization of Diracs on spheres") {
  double worst_dirac = 0.0;
  double worst_bound = 0.0;
  bool strict = true;
  int nondirac_measures = 0;
  for (int dim : {2, 3}) {
    const SpaceDescriptor s = SpaceDescriptor::sphere(dim);
    for (double p : {1.0, 2.0, 3.0}) {
      // (a) Diracs attain exactly 1 against the antipode.
      for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Rng rng = derive_rng(901, trial * 64 + static_cast<std::uint64_t>(dim) * 8 +
                                      static_cast<std::uint64_t>(p * 2.0));
        const auto mu = FinitePointMeasure::dirac(s, random_point(s, rng));
        const DiracCharacterizationReport rep = verify_dirac_characterization(s, mu, p, 8, rng);
        worst_dirac = std::max(worst_dirac, std::abs(rep.worst_wp - 1.0));
        strict = strict && rep.pass;
      }
      // (b) non-Diracs stay strictly below 1 against >= 200 opponents.
      for (std::uint64_t trial = 0; trial < 9; ++trial) {
        Rng rng = derive_rng(902, trial * 64 + static_cast<std::uint64_t>(dim) * 8 +
                                      static_cast<std::uint64_t>(p * 2.0));
        const auto mu = random_measure(s, 2 + rng.uniform_int(4), rng);
        const DiracCharacterizationReport rep =
            verify_dirac_characterization(s, mu, p, 192, rng);
        REQUIRE(rep.opponents >= 200);
        strict = strict && rep.pass && rep.worst_wp < 1.0 && rep.worst_bound < 1.0;
        worst_bound = std::max(worst_bound, rep.worst_bound);
        ++nondirac_measures;
      }
    }
  }
  const bool pass = strict && worst_dirac <= 1e-12 && nondirac_measures >= 50;
  announce(9, "dirac-characterization", pass, worst_dirac,
           "largest non-Dirac bound " + sci(worst_bound));
  REQUIRE(pass);
}

TEST_CASE("criterion 10: point maps extracted from measure isometries") {
  const SpaceDescriptor s = SpaceDescriptor::sphere(3);
  double worst_match = 0.0, worst_defect = 0.0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = derive_rng(1001, trial);
    const Matrix q = random_orthogonal(3, rng);
    const IsometryMap psi = IsometryMap::orthogonal(q);
    std::vector<Point> sample;
    for (int k = 0; k < 30; ++k) sample.push_back(random_point(s, rng));
    const PointMapExtraction ext = extract_point_map(lift_isometry(s, psi), s, sample);
    worst_defect = std::max(worst_defect, ext.isometry_defect);
    for (std::size_t k = 0; k < sample.size(); ++k)
      worst_match = std::max(worst_match, distance(s, ext.images[k], apply(psi, s, sample[k])));
  }

  // A deliberate non-isometry must be flagged one way or the other.
  Rng rng(1002);
  std::vector<Point> sample;
  for (int k = 0; k < 30; ++k) sample.push_back(random_point(s, rng));
  const Point anchor = sample.front();
  const MeasureTransform collapse{"collapse", [s, anchor](const FinitePointMeasure&) {
                                    return FinitePointMeasure::dirac(s, anchor);
                                  }};
  const bool collapse_flagged = extract_point_map(collapse, s, sample).isometry_defect > 0.1;
  const MeasureTransform smear{"smear", [s](const FinitePointMeasure& m) {
                                 return FinitePointMeasure(
                                     s, {m.atom(0), antipode(s, m.atom(0))}, {0.5, 0.5});
                               }};
  bool smear_flagged = false;
  try {
    extract_point_map(smear, s, sample);
  } catch (const Error& e) {
    smear_flagged = (e.code() == ErrorCode::image_not_dirac);
  }

  const bool pass =
      worst_match <= 1e-10 && worst_defect <= 1e-9 && collapse_flagged && smear_flagged;
  announce(10, "point-map-extraction", pass, std::max(worst_match, worst_defect));
  REQUIRE(pass);
}

TEST_CASE("criterion 11: the symmetric pair against a Dirac costs sqrt(1/2)") {
  const SpaceDescriptor s = SpaceDescriptor::sphere(3);
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    Rng rng = derive_rng(1101, trial);
    const Point x = random_point(s, rng), y = random_point(s, rng);
    const FinitePointMeasure mu(s, {x, antipode(s, x)}, {0.5, 0.5});
    const double w2 = wasserstein(s, mu, FinitePointMeasure::dirac(s, y), 2.0);
    worst = std::max(worst, std::abs(w2 - std::sqrt(0.5)));
  }
  const bool pass = worst <= 1e-10;
  announce(11, "two-atom-analytic-value", pass, worst);
  REQUIRE(pass);
}

TEST_CASE("criterion 12: bidual fixed point singles out the Dirac") {
  const Report report = run_suite("bidual", 1201, 1);
  const bool pass = report.pass;
  announce(12, "bidual-fixed-point", pass, report.max_error,
           "finite-universe proxy of the characterization");
  REQUIRE(pass);
}

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

#ifndef OTLAB_SAMPLING_HPP
#define OTLAB_SAMPLING_HPP

#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "otlab/isometry.hpp"
#include "otlab/measure.hpp"
#include "otlab/rng.hpp"
#include "otlab/space.hpp"

namespace otlab {

// Sphere points are drawn by normalizing a standard-normal vector to radius
// 1/2; draws with norm < 1e-8 are rejected and resampled.
inline Point random_point(const SpaceDescriptor& s, Rng& rng) {
  validate(s);
  switch (s.kind) {
    case SpaceKind::line:
      return Point{rng.normal()};
    case SpaceKind::euclidean: {
      Point x(static_cast<std::size_t>(s.dim));
      for (double& c : x) c = rng.normal();
      return x;
    }
    case SpaceKind::sphere: {
      for (int attempt = 0; attempt < 100; ++attempt) {
        Point x(static_cast<std::size_t>(s.dim));
        for (double& c : x) c = rng.normal();
        const double r = norm(x);
        if (r < 1e-8) continue;
        for (double& c : x) c *= kSphereRadius / r;
        return x;
      }
      fail(ErrorCode::degenerate_sample, "repeated near-zero normal draws");
    }
    case SpaceKind::discrete:
      return label_point(static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(s.dim))));
  }
  fail(ErrorCode::invalid_space, "unknown space kind");
}

// Random orthogonal matrix: column-by-column Gram-Schmidt on a standard
// normal matrix (run twice for stability), columns signed so the diagonal is
// nonnegative. Deterministic given the stream.
inline Matrix random_orthogonal(std::size_t n, Rng& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) q(i, j) = rng.normal();

    bool degenerate = false;
    for (std::size_t k = 0; k < n && !degenerate; ++k) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t prev = 0; prev < k; ++prev) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += q(i, prev) * q(i, k);
          for (std::size_t i = 0; i < n; ++i) q(i, k) -= dot * q(i, prev);
        }
      }
      double len = 0.0;
      for (std::size_t i = 0; i < n; ++i) len += q(i, k) * q(i, k);
      len = std::sqrt(len);
      if (len < 1e-8) {
        degenerate = true;
        break;
      }
      const double sign = (q(k, k) < 0.0) ? -1.0 : 1.0;
      for (std::size_t i = 0; i < n; ++i) q(i, k) *= sign / len;
    }
    if (!degenerate) return q;
  }
  fail(ErrorCode::degenerate_sample, "repeated rank-deficient normal draws");
}

// An isometry of the space drawn from the stream: affine-orthogonal for the
// line and Euclidean spaces, orthogonal for the sphere, a label permutation
// for discrete spaces.
inline IsometryMap random_isometry(const SpaceDescriptor& s, Rng& rng) {
  validate(s);
  switch (s.kind) {
    case SpaceKind::line: {
      Matrix q(1, 1);
      q(0, 0) = (rng.uniform() < 0.5) ? -1.0 : 1.0;
      return IsometryMap::affine(std::move(q), {rng.normal()});
    }
    case SpaceKind::euclidean: {
      const auto n = static_cast<std::size_t>(s.dim);
      Matrix q = random_orthogonal(n, rng);
      std::vector<double> b(n);
      for (double& c : b) c = rng.normal();
      return IsometryMap::affine(std::move(q), std::move(b));
    }
    case SpaceKind::sphere:
      return IsometryMap::orthogonal(random_orthogonal(static_cast<std::size_t>(s.dim), rng));
    case SpaceKind::discrete: {
      // Fisher-Yates on the labels.
      std::vector<int> map(static_cast<std::size_t>(s.dim));
      std::iota(map.begin(), map.end(), 0);
      for (std::size_t i = map.size(); i > 1; --i)
        std::swap(map[i - 1], map[rng.uniform_int(i)]);
      return IsometryMap::permutation(std::move(map));
    }
  }
  fail(ErrorCode::invalid_space, "unknown space kind");
}

// A canonical measure with the requested atom count. Weights come from a
// seeded normalization of uniform draws. Discrete atoms are drawn without
// replacement so the requested count is exact.
inline FinitePointMeasure random_measure(const SpaceDescriptor& s, std::size_t atom_count,
                                         Rng& rng) {
  validate(s);
  if (atom_count == 0) fail(ErrorCode::invalid_argument, "atom count must be positive");
  if (s.kind == SpaceKind::discrete && atom_count > static_cast<std::size_t>(s.dim))
    fail(ErrorCode::invalid_argument, "discrete space has fewer labels than requested atoms");

  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Point> atoms;
    atoms.reserve(atom_count);
    if (s.kind == SpaceKind::discrete) {
      std::vector<int> labels(static_cast<std::size_t>(s.dim));
      std::iota(labels.begin(), labels.end(), 0);
      for (std::size_t i = labels.size(); i > 1; --i)
        std::swap(labels[i - 1], labels[rng.uniform_int(i)]);
      for (std::size_t i = 0; i < atom_count; ++i) atoms.push_back(label_point(labels[i]));
    } else {
      for (std::size_t i = 0; i < atom_count; ++i) atoms.push_back(random_point(s, rng));
    }
    std::vector<double> weights(atom_count);
    double sum = 0.0;
    for (double& w : weights) {
      w = rng.uniform();
      sum += w;
    }
    if (sum <= 0.0) continue;
    for (double& w : weights) w /= sum;

    FinitePointMeasure m(s, std::move(atoms), std::move(weights));
    if (m.size() == atom_count) return m;  // no accidental merges
  }
  fail(ErrorCode::degenerate_sample, "could not draw the requested number of distinct atoms");
}

}  // namespace otlab

#endif  // OTLAB_SAMPLING_HPP

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

#ifndef OTLAB_MEASURE_HPP
#define OTLAB_MEASURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "otlab/isometry.hpp"
#include "otlab/matrix.hpp"
#include "otlab/space.hpp"

namespace otlab {

// Input weights must sum to 1 within this tolerance before renormalization.
inline constexpr double kWeightSumInputTol = 1e-9;

namespace detail {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::vector<std::size_t> parent;
};

inline bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

// A finitely supported probability measure in canonical form: positive
// weights summing to 1, pairwise-distinct atoms (separation > 1e-12), atoms
// sorted lexicographically. Construction canonicalizes, so every instance
// satisfies the invariants; values are immutable and freely shareable.
class FinitePointMeasure {
 public:
  FinitePointMeasure(SpaceDescriptor space, std::vector<Point> atoms, std::vector<double> weights)
      : space_(space) {
    validate(space_);
    if (atoms.size() != weights.size())
      fail(ErrorCode::dimension_mismatch, "atom and weight counts differ");

    // Drop exact zeros, reject negatives, check membership and the input sum.
    double sum = 0.0;
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (!std::isfinite(weights[i]) || weights[i] < 0.0)
        fail(ErrorCode::negative_weight, "weights must be nonnegative");
      sum += weights[i];
      if (weights[i] > 0.0) keep.push_back(i);
    }
    if (std::abs(sum - 1.0) > kWeightSumInputTol)
      fail(ErrorCode::sum_out_of_tolerance, "weights must sum to 1 within 1e-9");
    if (keep.empty()) fail(ErrorCode::sum_out_of_tolerance, "measure has no mass");
    for (std::size_t i : keep) require_member(space_, atoms[i]);

    // Merge atoms within the merge tolerance (transitively, via union-find).
    const std::size_t k = keep.size();
    detail::UnionFind uf(k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (distance(space_, atoms[keep[a]], atoms[keep[b]]) <= kAtomMergeTol) uf.unite(a, b);

    std::vector<std::size_t> root_slot(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      const std::size_t r = uf.find(a);
      if (root_slot[r] == k) {
        root_slot[r] = atoms_.size();
        atoms_.push_back(atoms[keep[a]]);
        weights_.push_back(weights[keep[a]]);
      } else {
        const std::size_t slot = root_slot[r];
        weights_[slot] += weights[keep[a]];
        // Cluster representative: lexicographically smallest member.
        if (detail::lex_less(atoms[keep[a]], atoms_[slot])) atoms_[slot] = atoms[keep[a]];
      }
    }

    // Canonical order, then renormalize so the invariant sum is exact.
    std::vector<std::size_t> order(atoms_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
      return detail::lex_less(atoms_[a], atoms_[b]);
    });
    std::vector<Point> sorted_atoms;
    std::vector<double> sorted_weights;
    sorted_atoms.reserve(order.size());
    sorted_weights.reserve(order.size());
    double total = 0.0;
    for (std::size_t i : order) total += weights_[i];
    for (std::size_t i : order) {
      sorted_atoms.push_back(std::move(atoms_[i]));
      sorted_weights.push_back(weights_[i] / total);
    }
    atoms_ = std::move(sorted_atoms);
    weights_ = std::move(sorted_weights);
  }

  static FinitePointMeasure dirac(SpaceDescriptor space, Point x) {
    return FinitePointMeasure(space, {std::move(x)}, {1.0});
  }

  const SpaceDescriptor& space() const { return space_; }
  const std::vector<Point>& atoms() const { return atoms_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return atoms_.size(); }
  const Point& atom(std::size_t i) const { return atoms_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

 private:
  SpaceDescriptor space_;
  std::vector<Point> atoms_;
  std::vector<double> weights_;
};

// Rebuild through the canonicalizing constructor. Idempotent up to one unit
// of rounding in the weight renormalization.
inline FinitePointMeasure canonicalize(const FinitePointMeasure& m) {
  return FinitePointMeasure(m.space(), m.atoms(), m.weights());
}

inline bool is_dirac(const FinitePointMeasure& m) { return m.size() == 1; }

inline bool approx_equal(const FinitePointMeasure& a, const FinitePointMeasure& b,
                         double tol = 1e-12) {
  if (!(a.space() == b.space()) || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (distance(a.space(), a.atom(i), b.atom(i)) > tol) return false;
    if (std::abs(a.weight(i) - b.weight(i)) > tol) return false;
  }
  return true;
}

// Push-forward along an arbitrary point map into a declared target space.
// Colliding images merge their weights, which is exactly the preimage
// semantics of the push-forward for atomic measures.
inline FinitePointMeasure push_forward(const FinitePointMeasure& m,
                                       const std::function<Point(const Point&)>& f,
                                       const SpaceDescriptor& target) {
  std::vector<Point> images;
  images.reserve(m.size());
  for (const Point& x : m.atoms()) {
    Point y = f(x);
    if (!contains(target, y))
      fail(ErrorCode::image_not_in_space, "mapped atom is not a member of " + describe(target));
    images.push_back(std::move(y));
  }
  return FinitePointMeasure(target, std::move(images), m.weights());
}

inline FinitePointMeasure push_forward(const FinitePointMeasure& m, const IsometryMap& f) {
  const SpaceDescriptor& s = m.space();
  return push_forward(
      m, [&](const Point& x) { return apply(f, s, x); }, s);
}

// Weighted average of the atoms. For sphere measures the result lives in the
// ambient Euclidean space.
inline Point center_of_mass(const FinitePointMeasure& m) {
  if (m.space().kind == SpaceKind::discrete)
    fail(ErrorCode::discrete_space_unsupported, "center of mass needs coordinates");
  Point c(point_dimension(m.space()), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t d = 0; d < c.size(); ++d) c[d] += m.weight(i) * m.atom(i)[d];
  return c;
}

// Tolerance on coupling marginals.
inline constexpr double kMarginalTol = 1e-10;

// A transport plan: a nonnegative matrix with prescribed row and column
// sums. Stores the marginal weight vectors it was validated against.
class Coupling {
 public:
  Coupling(Matrix mass, std::vector<double> row_marginals, std::vector<double> col_marginals)
      : mass_(std::move(mass)),
        row_marginals_(std::move(row_marginals)),
        col_marginals_(std::move(col_marginals)) {
    if (mass_.rows() != row_marginals_.size() || mass_.cols() != col_marginals_.size())
      fail(ErrorCode::dimension_mismatch, "coupling shape does not match marginals");
    for (std::size_t i = 0; i < mass_.rows(); ++i)
      for (std::size_t j = 0; j < mass_.cols(); ++j)
        if (!(mass_(i, j) >= 0.0))
          fail(ErrorCode::invalid_argument, "coupling entries must be nonnegative");
    for (std::size_t i = 0; i < mass_.rows(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < mass_.cols(); ++j) s += mass_(i, j);
      if (std::abs(s - row_marginals_[i]) > kMarginalTol)
        fail(ErrorCode::invalid_argument, "row sum differs from source weight");
    }
    for (std::size_t j = 0; j < mass_.cols(); ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < mass_.rows(); ++i) s += mass_(i, j);
      if (std::abs(s - col_marginals_[j]) > kMarginalTol)
        fail(ErrorCode::invalid_argument, "column sum differs from target weight");
    }
  }

  std::size_t rows() const { return mass_.rows(); }
  std::size_t cols() const { return mass_.cols(); }
  const Matrix& mass() const { return mass_; }
  const std::vector<double>& row_marginals() const { return row_marginals_; }
  const std::vector<double>& col_marginals() const { return col_marginals_; }

 private:
  Matrix mass_;
  std::vector<double> row_marginals_;
  std::vector<double> col_marginals_;
};

// The independent coupling: mass(i, j) = w_mu(i) * w_nu(j).
inline Coupling product_coupling(const FinitePointMeasure& mu, const FinitePointMeasure& nu) {
  Matrix mass(mu.size(), nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) mass(i, j) = mu.weight(i) * nu.weight(j);
  return Coupling(std::move(mass), mu.weights(), nu.weights());
}

inline double coupling_cost(const Coupling& plan, const Matrix& cost) {
  if (cost.rows() != plan.rows() || cost.cols() != plan.cols())
    fail(ErrorCode::dimension_mismatch, "cost matrix shape does not match the plan");
  double acc = 0.0;
  for (std::size_t i = 0; i < plan.rows(); ++i)
    for (std::size_t j = 0; j < plan.cols(); ++j) acc += cost(i, j) * plan.mass()(i, j);
  return acc;
}

}  // namespace otlab

#endif  // OTLAB_MEASURE_HPP

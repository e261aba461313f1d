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

#ifndef OTLAB_ISOMETRY_HPP
#define OTLAB_ISOMETRY_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <utility>
#include <variant>
#include <vector>

#include "otlab/matrix.hpp"
#include "otlab/space.hpp"

namespace otlab {

// x -> Qx + b with Q orthogonal; the isometries of Euclidean space.
struct AffineIsometry {
  Matrix linear;
  std::vector<double> shift;
};

// x -> Qx with Q orthogonal; the isometries of the sphere.
struct OrthogonalIsometry {
  Matrix linear;
};

// label i -> map[i]; the isometries of a finite 0/1-metric space.
struct LabelPermutation {
  std::vector<int> map;
};

// A strictly monotone continuous real bijection with an explicit inverse.
// The inverse is supplied rather than computed numerically because the
// distribution-function isometry constructors need exact preimages of atoms.
struct MonotoneRealBijection {
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  bool increasing = true;
};

inline constexpr double kOrthogonalityTol = 1e-10;
inline constexpr double kInverseCheckTol = 1e-10;

class IsometryMap {
 public:
  using Variant =
      std::variant<AffineIsometry, OrthogonalIsometry, LabelPermutation, MonotoneRealBijection>;

  static IsometryMap affine(Matrix q, std::vector<double> shift) {
    return IsometryMap(AffineIsometry{std::move(q), std::move(shift)});
  }
  static IsometryMap orthogonal(Matrix q) {
    return IsometryMap(OrthogonalIsometry{std::move(q)});
  }
  static IsometryMap permutation(std::vector<int> map) {
    return IsometryMap(LabelPermutation{std::move(map)});
  }
  static IsometryMap monotone(std::function<double(double)> forward,
                              std::function<double(double)> inverse, bool increasing) {
    return IsometryMap(MonotoneRealBijection{std::move(forward), std::move(inverse), increasing});
  }

  static IsometryMap identity(const SpaceDescriptor& s) {
    switch (s.kind) {
      case SpaceKind::line:
        return affine(Matrix::identity(1), {0.0});
      case SpaceKind::euclidean:
        return affine(Matrix::identity(static_cast<std::size_t>(s.dim)),
                      std::vector<double>(static_cast<std::size_t>(s.dim), 0.0));
      case SpaceKind::sphere:
        return orthogonal(Matrix::identity(static_cast<std::size_t>(s.dim)));
      case SpaceKind::discrete: {
        std::vector<int> map(static_cast<std::size_t>(s.dim));
        std::iota(map.begin(), map.end(), 0);
        return permutation(std::move(map));
      }
    }
    fail(ErrorCode::invalid_space, "unknown space kind");
  }

  const Variant& value() const { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  explicit IsometryMap(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

namespace detail {

// Fixed probe abscissas for monotone-bijection consistency checks.
inline const std::vector<double>& monotone_check_grid() {
  static const std::vector<double> grid = {-2.75, -1.3, -0.4, 0.0, 0.35, 1.1, 2.6};
  return grid;
}

}  // namespace detail

// Structural validation of an isometry against its intended domain space.
inline void validate(const IsometryMap& f, const SpaceDescriptor& s) {
  validate(s);
  if (const auto* a = f.get_if<AffineIsometry>()) {
    if (s.kind != SpaceKind::line && s.kind != SpaceKind::euclidean)
      fail(ErrorCode::wrong_space, "affine isometries act on the line or Euclidean space");
    const auto n = point_dimension(s);
    if (a->linear.rows() != n || a->linear.cols() != n || a->shift.size() != n)
      fail(ErrorCode::dimension_mismatch, "affine isometry shape mismatch");
    if (orthogonality_defect(a->linear) > kOrthogonalityTol)
      fail(ErrorCode::not_orthogonal, "linear part fails the orthogonality check");
    return;
  }
  if (const auto* o = f.get_if<OrthogonalIsometry>()) {
    if (s.kind == SpaceKind::discrete)
      fail(ErrorCode::wrong_space, "orthogonal maps act on continuous spaces");
    const auto n = point_dimension(s);
    if (o->linear.rows() != n || o->linear.cols() != n)
      fail(ErrorCode::dimension_mismatch, "orthogonal map shape mismatch");
    if (orthogonality_defect(o->linear) > kOrthogonalityTol)
      fail(ErrorCode::not_orthogonal, "matrix fails the orthogonality check");
    return;
  }
  if (const auto* p = f.get_if<LabelPermutation>()) {
    if (s.kind != SpaceKind::discrete)
      fail(ErrorCode::wrong_space, "label permutations act on discrete spaces");
    if (p->map.size() != static_cast<std::size_t>(s.dim))
      fail(ErrorCode::dimension_mismatch, "permutation size mismatch");
    std::vector<int> sorted = p->map;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        fail(ErrorCode::not_bijective, "label map is not a permutation");
    return;
  }
  const auto* m = f.get_if<MonotoneRealBijection>();
  if (s.kind != SpaceKind::line)
    fail(ErrorCode::wrong_space, "monotone bijections act on the line");
  if (!m->forward || !m->inverse)
    fail(ErrorCode::not_bijective, "monotone bijection needs forward and inverse");
  double previous = 0.0;
  bool first = true;
  for (double t : detail::monotone_check_grid()) {
    const double y = m->forward(t);
    if (std::abs(m->inverse(y) - t) > kInverseCheckTol)
      fail(ErrorCode::not_bijective, "inverse composed with forward is not the identity");
    if (!first) {
      const bool rising = y > previous;
      if (rising != m->increasing)
        fail(ErrorCode::not_bijective, "monotonicity flag disagrees with sampled evaluations");
    }
    previous = y;
    first = false;
  }
}

// Apply an isometry to a point of its domain space. Orthogonal images on the
// sphere are re-checked against radius 1/2 within 1e-10.
inline Point apply(const IsometryMap& f, const SpaceDescriptor& s, const Point& x) {
  require_member(s, x);
  if (const auto* a = f.get_if<AffineIsometry>()) {
    if (s.kind != SpaceKind::line && s.kind != SpaceKind::euclidean)
      fail(ErrorCode::wrong_space, "affine isometries act on the line or Euclidean space");
    Point y = multiply(a->linear, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += a->shift[i];
    return y;
  }
  if (const auto* o = f.get_if<OrthogonalIsometry>()) {
    if (s.kind == SpaceKind::discrete)
      fail(ErrorCode::wrong_space, "orthogonal maps act on continuous spaces");
    Point y = multiply(o->linear, x);
    if (s.kind == SpaceKind::sphere && std::abs(norm(y) - kSphereRadius) > 1e-10)
      fail(ErrorCode::image_not_in_space, "image left the sphere");
    return y;
  }
  if (const auto* p = f.get_if<LabelPermutation>()) {
    if (s.kind != SpaceKind::discrete)
      fail(ErrorCode::wrong_space, "label permutations act on discrete spaces");
    const int label = label_of(x);
    if (label < 0 || label >= static_cast<int>(p->map.size()))
      fail(ErrorCode::point_not_in_space, "label out of range");
    return label_point(p->map[static_cast<std::size_t>(label)]);
  }
  const auto* m = f.get_if<MonotoneRealBijection>();
  if (s.kind != SpaceKind::line) fail(ErrorCode::wrong_space, "monotone bijections act on the line");
  return Point{m->forward(x[0])};
}

// outer ∘ inner. Mixed affine/orthogonal compositions yield affine maps.
inline IsometryMap compose(const IsometryMap& outer, const IsometryMap& inner) {
  auto as_affine = [](const IsometryMap& f) -> const AffineIsometry* {
    return f.get_if<AffineIsometry>();
  };
  auto as_orth = [](const IsometryMap& f) -> const OrthogonalIsometry* {
    return f.get_if<OrthogonalIsometry>();
  };

  if (as_orth(outer) && as_orth(inner))
    return IsometryMap::orthogonal(matmul(as_orth(outer)->linear, as_orth(inner)->linear));

  const bool outer_linear = as_affine(outer) || as_orth(outer);
  const bool inner_linear = as_affine(inner) || as_orth(inner);
  if (outer_linear && inner_linear) {
    const Matrix& qo = as_affine(outer) ? as_affine(outer)->linear : as_orth(outer)->linear;
    const Matrix& qi = as_affine(inner) ? as_affine(inner)->linear : as_orth(inner)->linear;
    const std::vector<double> bo =
        as_affine(outer) ? as_affine(outer)->shift : std::vector<double>(qo.rows(), 0.0);
    const std::vector<double> bi =
        as_affine(inner) ? as_affine(inner)->shift : std::vector<double>(qi.rows(), 0.0);
    Matrix q = matmul(qo, qi);
    std::vector<double> b = multiply(qo, bi);
    for (std::size_t i = 0; i < b.size(); ++i) b[i] += bo[i];
    return IsometryMap::affine(std::move(q), std::move(b));
  }

  if (const auto* po = outer.get_if<LabelPermutation>()) {
    const auto* pi = inner.get_if<LabelPermutation>();
    if (!pi) fail(ErrorCode::invalid_argument, "cannot compose mixed isometry kinds");
    std::vector<int> map(pi->map.size());
    for (std::size_t i = 0; i < map.size(); ++i)
      map[i] = po->map[static_cast<std::size_t>(pi->map[i])];
    return IsometryMap::permutation(std::move(map));
  }

  const auto* mo = outer.get_if<MonotoneRealBijection>();
  const auto* mi = inner.get_if<MonotoneRealBijection>();
  if (!mo || !mi) fail(ErrorCode::invalid_argument, "cannot compose mixed isometry kinds");
  auto fo = mo->forward, fi = mi->forward, go = mo->inverse, gi = mi->inverse;
  return IsometryMap::monotone([fo, fi](double t) { return fo(fi(t)); },
                               [go, gi](double t) { return gi(go(t)); },
                               mo->increasing == mi->increasing);
}

inline IsometryMap inverse(const IsometryMap& f) {
  if (const auto* a = f.get_if<AffineIsometry>()) {
    Matrix qt = transpose(a->linear);
    std::vector<double> b = multiply(qt, a->shift);
    for (double& c : b) c = -c;
    return IsometryMap::affine(std::move(qt), std::move(b));
  }
  if (const auto* o = f.get_if<OrthogonalIsometry>())
    return IsometryMap::orthogonal(transpose(o->linear));
  if (const auto* p = f.get_if<LabelPermutation>()) {
    std::vector<int> inv(p->map.size());
    for (std::size_t i = 0; i < p->map.size(); ++i)
      inv[static_cast<std::size_t>(p->map[i])] = static_cast<int>(i);
    return IsometryMap::permutation(std::move(inv));
  }
  const auto* m = f.get_if<MonotoneRealBijection>();
  return IsometryMap::monotone(m->inverse, m->forward, m->increasing);
}

}  // namespace otlab

#endif  // OTLAB_ISOMETRY_HPP

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

#ifndef OTLAB_TRANSPORT_HPP
#define OTLAB_TRANSPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "otlab/measure.hpp"
#include "otlab/space.hpp"

namespace otlab {

// Reduced costs larger than -kPivotTol do not enter the basis.
inline constexpr double kPivotTol = 1e-12;

// Optimal plan with its dual certificate: u_i + v_j <= cost(i,j) everywhere,
// with equality on the support of the plan, and the dual objective equal to
// the primal cost.
struct TransportResult {
  Coupling plan;
  double cost = 0.0;
  std::vector<double> dual_u;
  std::vector<double> dual_v;
};

struct CertificateCheck {
  double feasibility_violation = 0.0;  // max over cells of u_i + v_j - cost(i,j)
  double slackness_violation = 0.0;    // max |u_i + v_j - cost(i,j)| over supported cells
  double duality_gap = 0.0;            // |dual objective - primal cost|
  double worst() const {
    return std::max({feasibility_violation, slackness_violation, duality_gap});
  }
  bool valid(double tol = 1e-9) const { return worst() <= tol; }
};

// Entry (i, j) = distance(x_i, y_j)^p.
inline Matrix cost_matrix(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                          const FinitePointMeasure& nu, double p) {
  if (p < 1.0) fail(ErrorCode::invalid_p, "order p must be >= 1");
  if (!(mu.space() == s) || !(nu.space() == s))
    fail(ErrorCode::space_mismatch, "measures do not live on the requested space");
  Matrix c(mu.size(), nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (std::size_t j = 0; j < nu.size(); ++j) {
      const double d = distance(s, mu.atom(i), nu.atom(j));
      c(i, j) = (d == 0.0) ? 0.0 : std::pow(d, p);
    }
  return c;
}

namespace detail {

inline void validate_transport_input(const Matrix& cost, const std::vector<double>& wmu,
                                     const std::vector<double>& wnu) {
  if (wmu.empty() || wnu.empty()) fail(ErrorCode::infeasible_weights, "empty weight vector");
  if (cost.rows() != wmu.size() || cost.cols() != wnu.size())
    fail(ErrorCode::dimension_mismatch, "cost matrix shape does not match the weights");
  for (double e : cost.data())
    if (!std::isfinite(e) || e < 0.0)
      fail(ErrorCode::invalid_argument, "cost entries must be finite and nonnegative");
  double smu = 0.0, snu = 0.0;
  for (double w : wmu) {
    if (!(w > 0.0)) fail(ErrorCode::infeasible_weights, "source weights must be positive");
    smu += w;
  }
  for (double w : wnu) {
    if (!(w > 0.0)) fail(ErrorCode::infeasible_weights, "target weights must be positive");
    snu += w;
  }
  if (std::abs(smu - snu) > 1e-9 || std::abs(smu - 1.0) > 1e-9)
    fail(ErrorCode::infeasible_weights, "weight vectors must both sum to 1");
}

}  // namespace detail

// Exact solution of the dense transportation problem
//
//    minimize sum_{i,j} cost(i,j) * plan(i,j)
//    subject to row sums = wmu, column sums = wnu, plan >= 0
//
// by the network simplex method on the complete bipartite graph. The basis
// is a spanning tree of m + n nodes started from the northwest-corner rule;
// the entering cell has the most negative reduced cost, switching to Bland's
// smallest-index rule after 10 * (m + n) consecutive degenerate pivots.
// Degenerate (zero-mass) basic cells are kept; there is no perturbation.
inline TransportResult solve_transport(const Matrix& cost, const std::vector<double>& raw_wmu,
                                       const std::vector<double>& raw_wnu) {
  detail::validate_transport_input(cost, raw_wmu, raw_wnu);
  // Scale both marginals to total mass exactly 1 so the emitted plan always
  // balances; a no-op for canonical inputs, and inputs further than 1e-9
  // from balance were rejected above.
  std::vector<double> wmu = raw_wmu, wnu = raw_wnu;
  {
    double smu = 0.0, snu = 0.0;
    for (double w : wmu) smu += w;
    for (double w : wnu) snu += w;
    for (double& w : wmu) w /= smu;
    for (double& w : wnu) w /= snu;
  }
  const std::size_t m = wmu.size(), n = wnu.size();
  const std::size_t nodes = m + n;
  const std::size_t slots = m + n - 1;

  std::vector<std::size_t> cell_row(slots), cell_col(slots);
  std::vector<double> flow(slots, 0.0);
  std::vector<int> basis_of(m * n, -1);  // cell index -> basis slot, or -1

  // Northwest-corner start: a staircase of exactly m + n - 1 basic cells.
  {
    std::vector<double> a = wmu, b = wnu;
    std::size_t i = 0, j = 0;
    for (std::size_t s = 0; s < slots; ++s) {
      const double t = std::min(a[i], b[j]);
      cell_row[s] = i;
      cell_col[s] = j;
      flow[s] = t;
      basis_of[i * n + j] = static_cast<int>(s);
      a[i] -= t;
      b[j] -= t;
      if (s + 1 == slots) break;
      if (a[i] <= 0.0 && i + 1 < m)
        ++i;
      else if (j + 1 < n)
        ++j;
      else
        ++i;
    }
  }

  std::vector<double> u(m, 0.0), v(n, 0.0);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nodes);  // (neighbor, slot)
  std::vector<int> parent_node(nodes), parent_slot(nodes);
  std::vector<std::size_t> queue(nodes);

  auto rebuild_adjacency = [&]() {
    for (auto& list : adj) list.clear();
    for (std::size_t s = 0; s < slots; ++s) {
      const std::size_t a = cell_row[s], b = m + cell_col[s];
      adj[a].emplace_back(b, s);
      adj[b].emplace_back(a, s);
    }
  };

  // Solve u_i + v_j = cost(i,j) on the basis tree, anchored at u_0 = 0.
  auto compute_duals = [&]() {
    std::vector<char> seen(nodes, 0);
    std::size_t head = 0, tail = 0;
    queue[tail++] = 0;
    seen[0] = 1;
    u[0] = 0.0;
    while (head < tail) {
      const std::size_t node = queue[head++];
      for (const auto& [next, s] : adj[node]) {
        if (seen[next]) continue;
        seen[next] = 1;
        const double c = cost(cell_row[s], cell_col[s]);
        if (next >= m)
          v[next - m] = c - u[cell_row[s]];
        else
          u[next] = c - v[cell_col[s]];
        queue[tail++] = next;
      }
    }
  };

  // Tree path between the endpoints of the entering cell.
  auto tree_path = [&](std::size_t from, std::size_t to, std::vector<std::size_t>& path_slots) {
    std::fill(parent_node.begin(), parent_node.end(), -1);
    std::size_t head = 0, tail = 0;
    queue[tail++] = from;
    parent_node[from] = static_cast<int>(from);
    while (head < tail) {
      const std::size_t node = queue[head++];
      if (node == to) break;
      for (const auto& [next, s] : adj[node]) {
        if (parent_node[next] != -1) continue;
        parent_node[next] = static_cast<int>(node);
        parent_slot[next] = static_cast<int>(s);
        queue[tail++] = next;
      }
    }
    path_slots.clear();
    for (std::size_t node = to; node != from; node = static_cast<std::size_t>(parent_node[node]))
      path_slots.push_back(static_cast<std::size_t>(parent_slot[node]));
    std::reverse(path_slots.begin(), path_slots.end());
  };

  const std::size_t max_pivots = 1000 * m * n;
  std::size_t pivots = 0, degenerate_streak = 0;
  bool bland = false;
  std::vector<std::size_t> path_slots;

  for (;;) {
    rebuild_adjacency();
    compute_duals();

    // Entering cell.
    std::ptrdiff_t enter = -1;
    double best = -kPivotTol;
    for (std::size_t i = 0; i < m && (!bland || enter < 0); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (basis_of[i * n + j] >= 0) continue;
        const double reduced = cost(i, j) - u[i] - v[j];
        if (reduced < best) {
          best = reduced;
          enter = static_cast<std::ptrdiff_t>(i * n + j);
          if (bland) break;  // smallest index wins under Bland's rule
        }
      }
    if (enter < 0) break;  // optimal
    if (++pivots > max_pivots)
      fail(ErrorCode::iteration_limit, "pivot cap exceeded; this indicates a solver bug");

    const std::size_t ei = static_cast<std::size_t>(enter) / n;
    const std::size_t ej = static_cast<std::size_t>(enter) % n;

    // Close the cycle: entering cell plus the tree path sink(ej) -> source(ei).
    // Walking from the sink, even path positions carry -theta, odd ones +theta.
    tree_path(m + ej, ei, path_slots);
    double theta = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < path_slots.size(); t += 2)
      theta = std::min(theta, flow[path_slots[t]]);

    std::size_t leave_pos = slots;
    std::size_t leave_key = m * n;
    for (std::size_t t = 0; t < path_slots.size(); t += 2) {
      const std::size_t s = path_slots[t];
      if (flow[s] == theta) {
        const std::size_t key = cell_row[s] * n + cell_col[s];
        if (key < leave_key) {
          leave_key = key;
          leave_pos = s;
        }
      }
    }

    for (std::size_t t = 0; t < path_slots.size(); ++t)
      flow[path_slots[t]] += (t % 2 == 0) ? -theta : theta;

    basis_of[leave_key] = -1;
    cell_row[leave_pos] = ei;
    cell_col[leave_pos] = ej;
    flow[leave_pos] = theta;
    basis_of[ei * n + ej] = static_cast<int>(leave_pos);

    if (theta <= kPivotTol) {
      if (++degenerate_streak > 10 * nodes) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }
  }

  Matrix plan(m, n);
  double total = 0.0;
  for (std::size_t s = 0; s < slots; ++s) {
    plan(cell_row[s], cell_col[s]) = flow[s];
    total += flow[s] * cost(cell_row[s], cell_col[s]);
  }
  return TransportResult{Coupling(std::move(plan), wmu, wnu), total, std::move(u), std::move(v)};
}

inline CertificateCheck check_certificate(const TransportResult& r, const Matrix& cost) {
  CertificateCheck out;
  const std::size_t m = r.plan.rows(), n = r.plan.cols();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double slack = r.dual_u[i] + r.dual_v[j] - cost(i, j);
      out.feasibility_violation = std::max(out.feasibility_violation, slack);
      if (r.plan.mass()(i, j) > 1e-12)
        out.slackness_violation = std::max(out.slackness_violation, std::abs(slack));
    }
  double dual_objective = 0.0;
  for (std::size_t i = 0; i < m; ++i) dual_objective += r.dual_u[i] * r.plan.row_marginals()[i];
  for (std::size_t j = 0; j < n; ++j) dual_objective += r.dual_v[j] * r.plan.col_marginals()[j];
  out.duality_gap = std::abs(dual_objective - r.cost);
  return out;
}

// Exact optimum by enumerating every spanning tree of the complete bipartite
// supply-demand graph, solving each tree's uniquely determined basic
// solution by leaf elimination and keeping the best feasible one. A code
// path deliberately disjoint from solve_transport; usable for m + n <= 9.
inline double oracle_transport(const Matrix& cost, const std::vector<double>& raw_wmu,
                               const std::vector<double>& raw_wnu) {
  detail::validate_transport_input(cost, raw_wmu, raw_wnu);
  std::vector<double> wmu = raw_wmu, wnu = raw_wnu;
  {
    double smu = 0.0, snu = 0.0;
    for (double w : wmu) smu += w;
    for (double w : wnu) snu += w;
    for (double& w : wmu) w /= smu;
    for (double& w : wnu) w /= snu;
  }
  const std::size_t m = wmu.size(), n = wnu.size();
  if (m + n > 9) fail(ErrorCode::too_large, "oracle enumeration is limited to m + n <= 9");
  const std::size_t edges = m * n;
  const std::size_t k = m + n - 1;
  const std::size_t nodes = m + n;

  std::vector<std::size_t> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  double best = std::numeric_limits<double>::infinity();

  std::vector<std::size_t> uf_parent(nodes);
  std::vector<double> remaining(nodes);
  std::vector<int> degree(nodes);
  std::vector<std::vector<std::size_t>> incident(nodes);
  std::vector<char> edge_done(k);
  std::vector<std::size_t> leaves(nodes);

  auto uf_find = [&](std::size_t i) {
    while (uf_parent[i] != i) i = uf_parent[i] = uf_parent[uf_parent[i]];
    return i;
  };

  for (;;) {
    // Acyclic with k = nodes - 1 edges  <=>  spanning tree.
    std::iota(uf_parent.begin(), uf_parent.end(), 0);
    bool tree = true;
    for (std::size_t e : comb) {
      const std::size_t a = uf_find(e / n), b = uf_find(m + e % n);
      if (a == b) {
        tree = false;
        break;
      }
      uf_parent[a] = b;
    }

    if (tree) {
      // Leaf elimination: a leaf's single edge must carry its whole balance.
      for (std::size_t i = 0; i < m; ++i) remaining[i] = wmu[i];
      for (std::size_t j = 0; j < n; ++j) remaining[m + j] = wnu[j];
      std::fill(degree.begin(), degree.end(), 0);
      for (auto& list : incident) list.clear();
      std::fill(edge_done.begin(), edge_done.end(), 0);
      for (std::size_t t = 0; t < k; ++t) {
        const std::size_t a = comb[t] / n, b = m + comb[t] % n;
        ++degree[a];
        ++degree[b];
        incident[a].push_back(t);
        incident[b].push_back(t);
      }
      std::size_t head = 0, tail = 0;
      for (std::size_t node = 0; node < nodes; ++node)
        if (degree[node] == 1) leaves[tail++] = node;

      double tree_cost = 0.0;
      bool feasible = true;
      for (std::size_t processed = 0; processed < k && feasible; ++processed) {
        const std::size_t leaf = leaves[head++];
        std::size_t t = 0;
        for (std::size_t cand : incident[leaf])
          if (!edge_done[cand]) {
            t = cand;
            break;
          }
        const std::size_t e = comb[t];
        const std::size_t a = e / n, b = m + e % n;
        const double f = remaining[leaf];
        if (f < -1e-12) {
          feasible = false;
          break;
        }
        tree_cost += std::max(f, 0.0) * cost(e / n, e % n);
        const std::size_t other = (leaf == a) ? b : a;
        remaining[other] -= f;
        remaining[leaf] = 0.0;
        edge_done[t] = 1;
        if (--degree[other] == 1) leaves[tail++] = other;
        --degree[leaf];
      }
      if (feasible) best = std::min(best, tree_cost);
    }

    // Next k-combination of the edge set.
    std::ptrdiff_t t = static_cast<std::ptrdiff_t>(k) - 1;
    while (t >= 0 && comb[static_cast<std::size_t>(t)] == edges - k + static_cast<std::size_t>(t))
      --t;
    if (t < 0) break;
    ++comb[static_cast<std::size_t>(t)];
    for (std::size_t q = static_cast<std::size_t>(t) + 1; q < k; ++q) comb[q] = comb[q - 1] + 1;
  }
  return best;
}

struct WassersteinSolution {
  TransportResult transport;  // cost is in d^p units
  double p = 1.0;
  double wp = 0.0;
};

inline WassersteinSolution wasserstein_plan(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                                            const FinitePointMeasure& nu, double p) {
  Matrix c = cost_matrix(s, mu, nu, p);
  TransportResult r = solve_transport(c, mu.weights(), nu.weights());
  const double base = std::max(r.cost, 0.0);
  return WassersteinSolution{std::move(r), p, std::pow(base, 1.0 / p)};
}

// W_p(mu, nu) = (optimal transport cost for d^p)^{1/p}. The Dirac-to-Dirac
// case short-circuits to the point distance, making the isometric embedding
// x -> delta_x exact.
inline double wasserstein(const SpaceDescriptor& s, const FinitePointMeasure& mu,
                          const FinitePointMeasure& nu, double p) {
  if (p < 1.0) fail(ErrorCode::invalid_p, "order p must be >= 1");
  if (is_dirac(mu) && is_dirac(nu)) {
    if (!(mu.space() == s) || !(nu.space() == s))
      fail(ErrorCode::space_mismatch, "measures do not live on the requested space");
    return distance(s, mu.atom(0), nu.atom(0));
  }
  return wasserstein_plan(s, mu, nu, p).wp;
}

}  // namespace otlab

#endif  // OTLAB_TRANSPORT_HPP

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

#ifndef OTLAB_METRICS_HPP
#define OTLAB_METRICS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "otlab/classical.hpp"
#include "otlab/transport.hpp"

namespace otlab {

// Named measure distances, as accepted by the CLI.
enum class MetricName { wp, tv, ks, levy, kuiper, lp };

inline const char* to_string(MetricName m) {
  switch (m) {
    case MetricName::wp: return "wp";
    case MetricName::tv: return "tv";
    case MetricName::ks: return "ks";
    case MetricName::levy: return "levy";
    case MetricName::kuiper: return "kuiper";
    case MetricName::lp: return "lp";
  }
  return "unknown";
}

inline std::optional<MetricName> parse_metric(std::string_view name) {
  if (name == "wp") return MetricName::wp;
  if (name == "tv") return MetricName::tv;
  if (name == "ks") return MetricName::ks;
  if (name == "levy") return MetricName::levy;
  if (name == "kuiper") return MetricName::kuiper;
  if (name == "lp") return MetricName::lp;
  return std::nullopt;
}

// Dispatch to the named distance. `p` is used by wp only.
inline double measure_distance(MetricName metric, double p, const FinitePointMeasure& mu,
                               const FinitePointMeasure& nu) {
  if (!(mu.space() == nu.space()))
    fail(ErrorCode::space_mismatch, "measures live on different spaces");
  switch (metric) {
    case MetricName::wp: return wasserstein(mu.space(), mu, nu, p);
    case MetricName::tv: return tv_distance(mu, nu);
    case MetricName::ks: return ks_distance(mu, nu);
    case MetricName::levy: return levy_distance(mu, nu);
    case MetricName::kuiper: return kuiper_distance(mu, nu);
    case MetricName::lp: return levy_prokhorov_distance(mu.space(), mu, nu);
  }
  fail(ErrorCode::invalid_argument, "unknown metric");
}

}  // namespace otlab

#endif  // OTLAB_METRICS_HPP

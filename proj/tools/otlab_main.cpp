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

// Command-line front door: measure generation, distance computation,
// transport-plan emission and the seeded verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 domain error (space mismatch or support too large).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "otlab/otlab.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int exit_code_for(const otlab::Error& e) {
  switch (e.code()) {
    case otlab::ErrorCode::space_mismatch:
    case otlab::ErrorCode::support_too_large:
      return kExitDomain;
    default:
      return kExitUsage;
  }
}

std::optional<otlab::SpaceDescriptor> make_space(const std::string& kind, int dim) {
  if (kind == "line") return otlab::SpaceDescriptor::line();
  if (kind == "euclidean") return otlab::SpaceDescriptor::euclidean(dim);
  if (kind == "sphere") return otlab::SpaceDescriptor::sphere(dim);
  if (kind == "discrete") return otlab::SpaceDescriptor::discrete(dim);
  return std::nullopt;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) otlab::fail(otlab::ErrorCode::parse_error, "cannot write '" + path + "'");
  out << text;
}

int run_dist(const std::string& metric_name, double p, const std::string& file_a,
             const std::string& file_b) {
  const auto metric = otlab::parse_metric(metric_name);
  if (!metric)
    otlab::fail(otlab::ErrorCode::parse_error, "unknown metric '" + metric_name + "'");
  const otlab::FinitePointMeasure mu = otlab::load_measure(file_a);
  const otlab::FinitePointMeasure nu = otlab::load_measure(file_b);
  const double value = otlab::measure_distance(*metric, p, mu, nu);
  otlab::json out{{"metric", metric_name}, {"value", value}};
  if (*metric == otlab::MetricName::wp) out["p"] = p;
  std::cout << out.dump(2) << "\n";
  return kExitPass;
}

int run_transport(const std::string& file_a, const std::string& file_b, double p,
                  const std::string& emit_path) {
  const otlab::FinitePointMeasure mu = otlab::load_measure(file_a);
  const otlab::FinitePointMeasure nu = otlab::load_measure(file_b);
  if (!(mu.space() == nu.space()))
    otlab::fail(otlab::ErrorCode::space_mismatch, "measures live on different spaces");
  const otlab::WassersteinSolution sol = otlab::wasserstein_plan(mu.space(), mu, nu, p);
  const std::string text = otlab::to_json(sol).dump(2) + "\n";
  std::cout << text;
  if (!emit_path.empty()) write_text(emit_path, text);
  return kExitPass;
}

int run_gen(const std::string& kind, int dim, int atoms, std::uint64_t seed,
            const std::string& out_path) {
  const auto space = make_space(kind, dim);
  if (!space) otlab::fail(otlab::ErrorCode::parse_error, "unknown space '" + kind + "'");
  if (atoms < 1) otlab::fail(otlab::ErrorCode::parse_error, "--atoms must be >= 1");
  otlab::Rng rng(seed);
  const otlab::FinitePointMeasure m =
      otlab::random_measure(*space, static_cast<std::size_t>(atoms), rng);
  const std::string text = otlab::to_json(m).dump(2) + "\n";
  if (out_path.empty())
    std::cout << text;
  else
    write_text(out_path, text);
  return kExitPass;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials) {
  bool known = false;
  for (const std::string& name : otlab::suite_names()) known = known || name == suite;
  if (!known) otlab::fail(otlab::ErrorCode::parse_error, "unknown suite '" + suite + "'");
  const otlab::Report report = otlab::run_suite(suite, seed, trials);
  std::cout << otlab::to_json(report).dump(2) << "\n";
  return report.pass ? kExitPass : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact optimal transport and probability metrics for finitely "
               "supported measures, with isometry verification suites"};
  app.require_subcommand(1);

  std::string metric = "wp";
  double p = 2.0;
  std::string file_a, file_b;
  auto* dist = app.add_subcommand("dist", "Distance between two measure files");
  dist->add_option("--metric", metric, "One of wp, tv, ks, levy, kuiper, lp")->capture_default_str();
  dist->add_option("--p", p, "Order for the wp metric (p >= 1)")->capture_default_str();
  dist->add_option("fileA", file_a, "First measure JSON file")->required();
  dist->add_option("fileB", file_b, "Second measure JSON file")->required();

  double transport_p = 2.0;
  std::string transport_a, transport_b, emit_plan;
  auto* transport = app.add_subcommand("transport", "Optimal plan between two measure files");
  transport->add_option("--p", transport_p, "Cost order (p >= 1)")->capture_default_str();
  transport->add_option("--emit-plan", emit_plan, "Also write the plan JSON to this path");
  transport->add_option("fileA", transport_a, "Source measure JSON file")->required();
  transport->add_option("fileB", transport_b, "Target measure JSON file")->required();

  std::string gen_space = "line";
  int gen_dim = 1;
  int gen_atoms = 4;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a seeded random measure file");
  gen->add_option("--space", gen_space, "line, euclidean, sphere or discrete")->capture_default_str();
  gen->add_option("--dim", gen_dim, "Dimension (ambient for sphere, label count for discrete)")
      ->capture_default_str();
  gen->add_option("--atoms", gen_atoms, "Number of atoms")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output path (stdout when omitted)");

  std::string suite;
  std::uint64_t verify_seed = 0;
  int verify_trials = 50;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "Suite name (see README)")->required();
  verify->add_option("--seed", verify_seed, "Master seed")->capture_default_str();
  verify->add_option("--trials", verify_trials, "Trial count")->capture_default_str();

  try {
    app.parse(argc, argv);
    if (dist->parsed()) return run_dist(metric, p, file_a, file_b);
    if (transport->parsed()) return run_transport(transport_a, transport_b, transport_p, emit_plan);
    if (gen->parsed()) return run_gen(gen_space, gen_dim, gen_atoms, gen_seed, gen_out);
    if (verify->parsed()) return run_verify(suite, verify_seed, verify_trials);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const otlab::Error& e) {
    std::cerr << otlab::error_json(e).dump(2) << "\n";
    return exit_code_for(e);
  } catch (const otlab::json::exception& e) {
    std::cerr << otlab::json{{"error", {{"code", "PARSE_ERROR"}, {"message", e.what()}}}}.dump(2)
              << "\n";
    return kExitUsage;
  }
}

// Copyright 2026 The jetflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JETFLOW_EXPERIMENTS_HPP_
#define JETFLOW_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "jetflow/fock.hpp"
#include "jetflow/map_expr.hpp"
#include "jetflow/sampling.hpp"

namespace jetflow::tools {

// Overrides the config's output_dir when set.
inline constexpr const char* kOutputDirEnv = "JETFLOW_OUTPUT_DIR";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitConfig = 2, kExitPipeline = 3, kExitPartial = 4 };

enum class ExperimentKind { kPushforwardConvergence, kMapReconstruction, kLsqEquivalence, kHankelRates, kVectorfieldRecovery };

std::optional<ExperimentKind> parse_kind(std::string_view name);
std::string_view kind_name(ExperimentKind kind);
const std::vector<ExperimentKind>& all_kinds();

// Invalid or missing config entry. `field` is the dotted key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, std::string field, std::string reason);
  const std::string& path() const { return path_; }
  const std::string& field() const { return field_; }
  const std::string& reason() const { return reason_; }
  nlohmann::json record() const;

 private:
  std::string path_, field_, reason_;
};

// A pipeline stage failed for the run as a whole.
class PipelineError : public std::runtime_error {
 public:
  PipelineError(std::string stage, std::string kind, std::string reason);
  nlohmann::json record() const;

 private:
  std::string stage_, kind_, reason_;
};

struct SamplingConfig {
  SamplingScheme scheme = SamplingScheme::kHalton;
  std::vector<Eigen::Index> N;
  int d = 1;
  bool ball = false;
  RealVector radii;  // per axis (box) or one radius (ball), centred at the base point
  std::uint64_t seed = 0;

  MeasureSpec measure() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kPushforwardConvergence;
  std::string source;   // file the config came from
  nlohmann::json raw;   // as read, echoed into the manifest

  int d = 1;
  int r = 1;
  std::string map_text;
  std::optional<MapExpr> map;
  RealVector base_point;
  DomainSpec domain;
  int m = 0;
  std::vector<int> n_values;
  SamplingConfig sampling;

  double flow_T = 0.0;
  double flow_tol = 1e-10;

  double hankel_a = 0.0;
  double hankel_r = 1.0;
  int hankel_n_max = 0;
  int precision_bits = 256;

  RealVector eval_radii;
  int eval_points = 21;

  std::string output_dir;
};

ExperimentConfig parse_config(const nlohmann::json& doc, const std::string& source);
ExperimentConfig load_config(const std::filesystem::path& path);

// Env override first, then the config entry, then jetflow-out/<kind>.
std::filesystem::path resolve_output_dir(const ExperimentConfig& config);

struct RunReport {
  std::filesystem::path output_dir;
  std::vector<std::filesystem::path> files;
  int failed_rows = 0;
};

RunReport run_experiment(const ExperimentConfig& config);

// Canned config for `kind`, pretty-printed JSON.
std::string demo_config(ExperimentKind kind);

// %.17g, with nan / inf / -inf spelled out.
std::string format_double(double x);

// Command-line entry point: run | validate | demo.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetflow::tools

#endif  // JETFLOW_EXPERIMENTS_HPP_

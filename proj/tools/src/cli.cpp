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

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "jetflow/experiments.hpp"

namespace jetflow::tools {

namespace {

int report_config_error(const ConfigError& e, std::ostream& err) {
  err << e.record().dump(2) << '\n';
  return kExitConfig;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jet-space push-forward experiments", "jetflow"};
  app.require_subcommand(1);

  std::string run_path;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", run_path, "JSON config")->required();

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file without running it");
  validate->add_option("config", validate_path, "JSON config")->required();

  std::string demo_kind;
  auto* demo = app.add_subcommand("demo", "Print a canned config for an experiment kind");
  std::vector<std::string> names;
  for (ExperimentKind k : all_kinds()) names.emplace_back(kind_name(k));
  demo->add_option("kind", demo_kind, "Experiment kind")->required()->check(CLI::IsMember(names));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*demo) {
    out << demo_config(*parse_kind(demo_kind));
    return kExitOk;
  }

  if (*validate) {
    try {
      const ExperimentConfig c = load_config(validate_path);
      out << nlohmann::json{{"status", "valid"}, {"experiment", kind_name(c.kind)}, {"path", validate_path}}.dump(2)
          << '\n';
      return kExitOk;
    } catch (const ConfigError& e) {
      return report_config_error(e, err);
    }
  }

  ExperimentConfig config;
  try {
    config = load_config(run_path);
  } catch (const ConfigError& e) {
    return report_config_error(e, err);
  }
  try {
    const RunReport report = run_experiment(config);
    nlohmann::json files = nlohmann::json::array();
    for (const auto& f : report.files) files.push_back(f.string());
    out << nlohmann::json{{"status", report.failed_rows ? "partial" : "ok"},
                          {"experiment", kind_name(config.kind)},
                          {"output_dir", report.output_dir.string()},
                          {"files", files},
                          {"failed_rows", report.failed_rows}}
               .dump(2)
        << '\n';
    return report.failed_rows ? kExitPartial : kExitOk;
  } catch (const PipelineError& e) {
    err << e.record().dump(2) << '\n';
    return kExitPipeline;
  } catch (const std::exception& e) {
    err << PipelineError("run", "internal", e.what()).record().dump(2) << '\n';
    return kExitPipeline;
  }
}

}  // namespace jetflow::tools

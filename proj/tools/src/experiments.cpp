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

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <future>
#include <limits>

#include <Eigen/Core>
#include <boost/version.hpp>
#include <gmp.h>
#include <mpfr.h>

#include "jetflow/errors.hpp"
#include "jetflow/experiments.hpp"
#include "jetflow/hankel.hpp"
#include "jetflow/pushforward.hpp"
#include "jetflow/reconstruct.hpp"
#include "jetflow/vectorfield.hpp"
#include "jetflow/version.hpp"

namespace jetflow::tools {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<ExperimentKind, std::string_view>, 5> kKindNames{{
    {ExperimentKind::kPushforwardConvergence, "pushforward-convergence"},
    {ExperimentKind::kMapReconstruction, "map-reconstruction"},
    {ExperimentKind::kLsqEquivalence, "lsq-equivalence"},
    {ExperimentKind::kHankelRates, "hankel-rates"},
    {ExperimentKind::kVectorfieldRecovery, "vectorfield-recovery"},
}};

const double kNan = std::numeric_limits<double>::quiet_NaN();

using Row = std::vector<std::string>;

std::string cell(double x) { return format_double(x); }
std::string cell(int x) { return std::to_string(x); }
std::string cell(long x) { return std::to_string(x); }

// Short status token for a failed row.
std::string status_of(const std::exception& e) {
  if (dynamic_cast<const IllPosedError*>(&e)) return "ill-posed";
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return "precision-exhausted";
  if (dynamic_cast<const SpectrumError*>(&e)) return "spectrum-rejected";
  if (dynamic_cast<const QuadratureError*>(&e)) return "quadrature-failed";
  if (dynamic_cast<const FlowBlowUp*>(&e)) return "flow-blow-up";
  if (dynamic_cast<const DomainError*>(&e)) return "domain-error";
  return "error";
}

std::string error_kind(const std::exception& e) {
  const std::string s = status_of(e);
  return s == "error" ? "internal" : s;
}

class CsvTable {
 public:
  CsvTable(std::string name, Row header) : name_(std::move(name)), header_(std::move(header)) {}

  void add(Row row) { rows_.push_back(std::move(row)); }
  const std::string& name() const { return name_; }

  void write(const fs::path& dir) const {
    std::ofstream out(dir / name_, std::ios::binary);
    if (!out) throw PipelineError("output", "io", "cannot write " + (dir / name_).string());
    write_row(out, header_);
    for (const Row& r : rows_) write_row(out, r);
  }

 private:
  static void write_row(std::ostream& out, const Row& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }

  std::string name_;
  Row header_;
  std::vector<Row> rows_;
};

struct Failure {
  std::string table;
  std::string where;
  std::string what;
};

struct Output {
  std::vector<CsvTable> tables;
  std::vector<Failure> failures;
};

// Runs body(i) for i < count concurrently; results are consumed in index order.
template <class T, class F>
std::vector<T> sweep(std::size_t count, F body) {
  std::vector<std::future<T>> jobs;
  jobs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) jobs.push_back(std::async(std::launch::async, body, i));
  std::vector<T> out;
  out.reserve(count);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

template <class F>
auto stage(const std::string& name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const PipelineError&) {
    throw;
  } catch (const std::exception& e) {
    throw PipelineError(name, error_kind(e), e.what());
  }
}

RealPoints evaluation_grid(const ExperimentConfig& c) {
  const int d = c.d;
  const int k = c.eval_points;
  Eigen::Index total = 1;
  for (int i = 0; i < d; ++i) total *= k;
  RealPoints grid(total, d);
  for (Eigen::Index row = 0; row < total; ++row) {
    Eigen::Index rest = row;
    for (int axis = d - 1; axis >= 0; --axis) {
      const auto j = static_cast<double>(rest % k);
      rest /= k;
      const double t = k == 1 ? 0.0 : -1.0 + 2.0 * j / (k - 1);
      grid(row, axis) = c.base_point[axis] + t * c.eval_radii[axis];
    }
  }
  return grid;
}

SampleSet sample_set(const ExperimentConfig& c, Eigen::Index N) {
  return stage("samples", [&] {
    const RealPoints X = draw_samples(c.sampling.measure(), N, c.sampling.scheme, c.sampling.seed);
    return make_sample_set(X, c.base_point, *c.map, provenance_of(c.sampling.scheme), c.sampling.seed);
  });
}

Row point_header(int d) {
  Row h{"N", "n", "point"};
  for (int i = 1; i <= d; ++i) h.push_back("x" + std::to_string(i));
  for (const char* s : {"component", "true_re", "true_im", "est_re", "est_im", "abs_error", "status"}) h.push_back(s);
  return h;
}

// Per-point rows for a reconstruction; returns the sup error (nan on failure).
template <class Eval>
double point_rows(CsvTable& table, const ExperimentConfig& c, const RealPoints& grid, const ComplexPoints& truth,
                  Eigen::Index N, int n, const std::string& status, Eval eval) {
  double sup = status == "ok" ? 0.0 : kNan;
  for (Eigen::Index i = 0; i < grid.rows(); ++i) {
    ComplexVector est = ComplexVector::Constant(truth.cols(), cplx(kNan, kNan));
    if (status == "ok") est = eval(ComplexVector(grid.row(i).transpose().cast<cplx>()));
    for (Eigen::Index k = 0; k < truth.cols(); ++k) {
      const double err = std::abs(est[k] - truth(i, k));
      if (status == "ok") sup = std::max(sup, err);
      Row row{cell(N), cell(n), cell(i)};
      for (int a = 0; a < c.d; ++a) row.push_back(cell(grid(i, a)));
      row.insert(row.end(), {cell(k + 1), cell(truth(i, k).real()), cell(truth(i, k).imag()), cell(est[k].real()),
                             cell(est[k].imag()), cell(err), status});
      table.add(std::move(row));
    }
  }
  return sup;
}

ComplexPoints evaluate_truth(const MapExpr& f, const RealPoints& grid) {
  return stage("evaluation", [&] {
    ComplexPoints out(grid.rows(), f.output_dim());
    for (Eigen::Index i = 0; i < grid.rows(); ++i) out.row(i) = f.eval(RealVector(grid.row(i).transpose())).transpose();
    return out;
  });
}

template <class T>
struct Attempt {
  std::optional<T> value;
  std::string status = "ok";
  std::string message;
};

template <class T, class F>
Attempt<T> attempt(F&& f) {
  Attempt<T> a;
  try {
    a.value = f();
  } catch (const std::exception& e) {
    a.status = status_of(e);
    a.message = e.what();
  }
  return a;
}

void note_failure(Output& out, const std::string& table, const std::string& where, const std::string& status,
                  const std::string& message) {
  if (status != "ok") out.failures.push_back({table, where, status + ": " + message});
}

std::string at(Eigen::Index N, int n) { return "N=" + std::to_string(N) + " n=" + std::to_string(n); }

void run_convergence(const ExperimentConfig& c, Output& out) {
  const OraclePushforward oracle = stage("oracle", [&] { return oracle_pushforward(*c.map, c.base_point, c.m); });
  CsvTable table("convergence.csv",
                 {"N", "n", "m", "error_fro", "rank", "smallest_kept_sv", "largest_sv", "status"});
  for (Eigen::Index N : c.sampling.N) {
    const SampleSet S = sample_set(c, N);
    auto results = sweep<Attempt<PushforwardEstimate>>(c.n_values.size(), [&](std::size_t i) {
      return attempt<PushforwardEstimate>(
          [&] { return estimate_pushforward(c.base_point, oracle.q, c.m, c.n_values[i], S); });
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& a = results[i];
      const int n = c.n_values[i];
      note_failure(out, table.name(), at(N, n), a.status, a.message);
      if (a.value) {
        table.add({cell(N), cell(n), cell(c.m), cell((oracle.C - a.value->C_hat).norm()), cell(a.value->rank),
                   cell(a.value->smallest_kept_sv), cell(a.value->largest_sv), a.status});
      } else {
        table.add({cell(N), cell(n), cell(c.m), cell(kNan), cell(0), cell(kNan), cell(kNan), a.status});
      }
    }
  }
  out.tables.push_back(std::move(table));
}

void run_reconstruction(const ExperimentConfig& c, Output& out) {
  const RealPoints grid = evaluation_grid(c);
  const ComplexPoints truth = evaluate_truth(*c.map, grid);
  const ComplexVector q = stage("evaluation", [&] { return c.map->eval(c.base_point); });
  CsvTable summary("summary.csv", {"N", "n", "m", "sup_error", "rank", "status"});
  CsvTable points("points.csv", point_header(c.d));
  for (Eigen::Index N : c.sampling.N) {
    const SampleSet S = sample_set(c, N);
    auto results = sweep<Attempt<PushforwardEstimate>>(c.n_values.size(), [&](std::size_t i) {
      return attempt<PushforwardEstimate>([&] { return estimate_pushforward(c.base_point, q, c.m, c.n_values[i], S); });
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& a = results[i];
      const int n = c.n_values[i];
      note_failure(out, summary.name(), at(N, n), a.status, a.message);
      const double sup = point_rows(points, c, grid, truth, N, n, a.status, [&](const ComplexVector& z) {
        return reconstruct_eval(*a.value, c.base_point, q, c.m, z);
      });
      summary.add({cell(N), cell(n), cell(c.m), cell(sup), cell(a.value ? a.value->rank : 0), a.status});
    }
  }
  out.tables.push_back(std::move(summary));
  out.tables.push_back(std::move(points));
}

void run_lsq(const ExperimentConfig& c, Output& out) {
  CsvTable table("lsq.csv", {"N", "n", "m", "discrepancy", "status"});
  for (Eigen::Index N : c.sampling.N) {
    const RealPoints X =
        stage("samples", [&] { return draw_samples(c.sampling.measure(), N, c.sampling.scheme, c.sampling.seed); });
    auto results = sweep<Attempt<double>>(c.n_values.size(), [&](std::size_t i) {
      return attempt<double>([&] { return lsq_equivalence_check(*c.map, X, c.m, c.n_values[i]); });
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& a = results[i];
      note_failure(out, table.name(), at(N, c.n_values[i]), a.status, a.message);
      table.add({cell(N), cell(c.n_values[i]), cell(c.m), cell(a.value.value_or(kNan)), a.status});
    }
  }
  out.tables.push_back(std::move(table));
}

void run_hankel(const ExperimentConfig& c, Output& out) {
  const std::vector<DecayRow> rows =
      stage("hankel", [&] { return decay_rate_check(c.hankel_a, c.hankel_r, c.hankel_n_max, c.precision_bits); });
  CsvTable table("hankel_rates.csv", {"n", "lambda_n", "rate", "sigma_target", "precision_bits", "certified", "status"});
  for (const DecayRow& r : rows) {
    const std::string status = r.certified ? "ok" : "uncertified";
    note_failure(out, table.name(), "n=" + std::to_string(r.n), status, "bisection bracket did not converge");
    table.add({cell(r.n), cell(r.lambda), cell(r.rate), cell(r.log_sigma), cell(r.precision_bits),
               r.certified ? "1" : "0", status});
  }
  out.tables.push_back(std::move(table));
}

struct FieldResult {
  PushforwardEstimate estimate;
  GeneratorEstimate generator;
  double B = 0.0;
};

void run_vectorfield(const ExperimentConfig& c, Output& out) {
  stage("equilibrium", [&] { check_equilibrium(*c.map, c.base_point); });
  const RealPoints grid = evaluation_grid(c);
  const ComplexPoints truth = evaluate_truth(*c.map, grid);
  const ComplexVector p = c.base_point.cast<cplx>();
  CsvTable summary("summary.csv", {"N", "n", "m", "T", "sup_error", "log_residual", "quadrature_nodes", "B_m", "rank",
                                   "status"});
  CsvTable field("field.csv", point_header(c.d));
  CsvTable generator("generator.csv", {"N", "n", "row", "col", "re", "im", "status"});
  for (Eigen::Index N : c.sampling.N) {
    const SampleSet S = stage("flow", [&] {
      const RealPoints X = draw_samples(c.sampling.measure(), N, c.sampling.scheme, c.sampling.seed);
      SampleSet s = flow_samples(*c.map, c.base_point, X, c.flow_T, c.flow_tol);
      s.provenance = provenance_of(c.sampling.scheme);
      s.seed = c.sampling.seed;
      return s;
    });
    auto results = sweep<Attempt<FieldResult>>(c.n_values.size(), [&](std::size_t i) {
      return attempt<FieldResult>([&] {
        FieldResult r;
        r.estimate = estimate_pushforward(c.base_point, p, c.m, c.n_values[i], S);
        r.generator = estimate_generator(r.estimate, c.flow_T);
        r.B = bound_B(r.estimate.C_hat);
        return r;
      });
    });
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& a = results[i];
      const int n = c.n_values[i];
      note_failure(out, summary.name(), at(N, n), a.status, a.message);
      const double sup = point_rows(field, c, grid, truth, N, n, a.status, [&](const ComplexVector& z) {
        return reconstruct_field(a.value->generator, c.base_point, c.m, z);
      });
      if (a.value) {
        const GeneratorEstimate& g = a.value->generator;
        summary.add({cell(N), cell(n), cell(c.m), cell(c.flow_T), cell(sup), cell(g.log_residual),
                     cell(g.quadrature_nodes), cell(a.value->B), cell(a.value->estimate.rank), a.status});
        for (Eigen::Index row = 0; row < g.A_hat.rows(); ++row)
          for (Eigen::Index col = 0; col < g.A_hat.cols(); ++col)
            generator.add({cell(N), cell(n), cell(row), cell(col), cell(g.A_hat(row, col).real()),
                           cell(g.A_hat(row, col).imag()), a.status});
      } else {
        summary.add({cell(N), cell(n), cell(c.m), cell(c.flow_T), cell(kNan), cell(kNan), cell(0), cell(kNan), cell(0),
                     a.status});
      }
    }
  }
  out.tables.push_back(std::move(summary));
  out.tables.push_back(std::move(field));
  out.tables.push_back(std::move(generator));
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string seed_text(const ExperimentConfig& c) {
  return c.kind == ExperimentKind::kHankelRates ? "none" : std::to_string(c.sampling.seed);
}

void write_manifest(const fs::path& dir, const ExperimentConfig& c, const Output& out, const std::string& outcome) {
  std::ofstream m(dir / "manifest.txt", std::ios::binary);
  if (!m) throw PipelineError("output", "io", "cannot write " + (dir / "manifest.txt").string());
  m << "tool: jetflow " << kVersion << '\n';
  m << "experiment: " << kind_name(c.kind) << '\n';
  m << "config: " << c.source << '\n';
  m << "seed: " << seed_text(c) << '\n';
  m << "eigen: " << EIGEN_WORLD_VERSION << '.' << EIGEN_MAJOR_VERSION << '.' << EIGEN_MINOR_VERSION << '\n';
  m << "mpfr: " << mpfr_get_version() << '\n';
  m << "gmp: " << gmp_version << '\n';
  m << "boost: " << BOOST_LIB_VERSION << '\n';
  m << "timestamp: " << utc_timestamp() << '\n';
  m << "outcome: " << outcome << '\n';
  for (const CsvTable& t : out.tables) m << "file: " << t.name() << '\n';
  for (const Failure& f : out.failures) m << "failed-row: " << f.table << ' ' << f.where << ' ' << f.what << '\n';
  m << "config-echo:\n" << c.raw.dump(2) << '\n';
}

}  // namespace

std::optional<ExperimentKind> parse_kind(std::string_view name) {
  for (const auto& [kind, text] : kKindNames)
    if (text == name) return kind;
  return std::nullopt;
}

std::string_view kind_name(ExperimentKind kind) {
  for (const auto& [k, text] : kKindNames)
    if (k == kind) return text;
  return "unknown";
}

const std::vector<ExperimentKind>& all_kinds() {
  static const std::vector<ExperimentKind> kinds = [] {
    std::vector<ExperimentKind> v;
    for (const auto& entry : kKindNames) v.push_back(entry.first);
    return v;
  }();
  return kinds;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

fs::path resolve_output_dir(const ExperimentConfig& config) {
  if (const char* env = std::getenv(kOutputDirEnv); env && *env) return fs::path(env);
  if (!config.output_dir.empty()) return fs::path(config.output_dir);
  return fs::path("jetflow-out") / std::string(kind_name(config.kind));
}

RunReport run_experiment(const ExperimentConfig& config) {
  RunReport report;
  report.output_dir = resolve_output_dir(config);
  std::error_code ec;
  fs::create_directories(report.output_dir, ec);
  if (ec) throw PipelineError("output", "io", "cannot create " + report.output_dir.string() + ": " + ec.message());

  Output out;
  try {
    switch (config.kind) {
      case ExperimentKind::kPushforwardConvergence: run_convergence(config, out); break;
      case ExperimentKind::kMapReconstruction: run_reconstruction(config, out); break;
      case ExperimentKind::kLsqEquivalence: run_lsq(config, out); break;
      case ExperimentKind::kHankelRates: run_hankel(config, out); break;
      case ExperimentKind::kVectorfieldRecovery: run_vectorfield(config, out); break;
    }
  } catch (const PipelineError& e) {
    std::ofstream(report.output_dir / "error.json", std::ios::binary) << e.record().dump(2) << '\n';
    write_manifest(report.output_dir, config, out, "pipeline-error");
    throw;
  }

  for (const CsvTable& t : out.tables) {
    t.write(report.output_dir);
    report.files.push_back(report.output_dir / t.name());
  }
  write_manifest(report.output_dir, config, out, out.failures.empty() ? "ok" : "partial");
  report.files.push_back(report.output_dir / "manifest.txt");
  report.failed_rows = static_cast<int>(out.failures.size());
  return report;
}

std::string demo_config(ExperimentKind kind) {
  ordered_json j;
  j["experiment"] = kind_name(kind);
  auto common = [&](const char* map, int m, std::vector<int> n, const char* scheme, int N, double support, int seed) {
    j["dimension"] = {{"d", 1}, {"r", 1}};
    j["domain"] = {{"kind", "box"}, {"radii", {1.0}}};
    j["base_point"] = {0.0};
    j["map"] = map;
    j["orders"] = {{"m", m}, {"n_sweep", n}};
    j["sampling"] = {{"scheme", scheme}, {"N", N}, {"support_radii", {support}}, {"seed", seed}};
  };
  switch (kind) {
    case ExperimentKind::kPushforwardConvergence:
      common("0.3*z1 + 0.1*z1^2", 3, {3, 4, 5, 6, 7, 8}, "halton", 4000, 0.5, 1);
      break;
    case ExperimentKind::kMapReconstruction:
      common("exp(z1) - 1", 6, {6, 7, 8}, "iid", 4000, 0.5, 3);
      j["evaluation"] = {{"radii", {0.3}}, {"points", 61}};
      break;
    case ExperimentKind::kLsqEquivalence:
      common("exp(z1)", 3, {3, 4, 5, 6}, "iid", 100, 0.5, 62);
      j.erase("domain");
      break;
    case ExperimentKind::kHankelRates:
      j["hankel"] = {{"a", 0.0}, {"r", 1.0}, {"n_max", 20}};
      j["precision_bits"] = 256;
      break;
    case ExperimentKind::kVectorfieldRecovery:
      common("-z1 + 0.2*z1^2", 5, {8}, "iid", 4000, 0.4, 22);
      j["flow"] = {{"T", 0.1}, {"tol", 1e-10}};
      j["evaluation"] = {{"radii", {0.3}}, {"points", 61}};
      break;
  }
  j["output_dir"] = "jetflow-out/" + std::string(kind_name(kind));
  return j.dump(2) + "\n";
}

}  // namespace jetflow::tools

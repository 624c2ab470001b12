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

#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include "jetflow/errors.hpp"
#include "jetflow/experiments.hpp"

namespace jetflow::tools {

using nlohmann::json;

namespace {

constexpr int kMaxOrder = 40;

// Typed access to one JSON object with error paths relative to the root.
class Section {
 public:
  Section(const json& node, std::string prefix, const std::string& source)
      : node_(node), prefix_(std::move(prefix)), source_(source) {}

  std::string field(const std::string& key) const { return prefix_.empty() ? key : prefix_ + "." + key; }

  [[noreturn]] void fail(const std::string& key, const std::string& reason) const {
    throw ConfigError(source_, field(key), reason);
  }

  bool has(const std::string& key) const { return node_.contains(key); }

  const json& get(const std::string& key) const {
    if (!node_.contains(key)) fail(key, "missing required field");
    return node_.at(key);
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& item : node_.items()) {
      if (!allowed.count(item.key())) fail(item.key(), "unknown field");
    }
  }

  Section object(const std::string& key) const {
    const json& v = get(key);
    if (!v.is_object()) fail(key, "expected an object");
    return Section(v, field(key), source_);
  }

  std::string string(const std::string& key) const {
    const json& v = get(key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  double number(const std::string& key) const { return number_at(key, get(key)); }

  double positive(const std::string& key) const {
    const double x = number(key);
    if (!(x > 0.0)) fail(key, "must be positive");
    return x;
  }

  long long integer(const std::string& key, long long lo, long long hi) const {
    return integer_at(key, get(key), lo, hi);
  }

  std::vector<long long> integers(const std::string& key, long long lo, long long hi) const {
    const json& v = get(key);
    std::vector<long long> out;
    if (v.is_array()) {
      if (v.empty()) fail(key, "must not be empty");
      for (const json& e : v) out.push_back(integer_at(key, e, lo, hi));
    } else {
      out.push_back(integer_at(key, v, lo, hi));
    }
    return out;
  }

  RealVector vector(const std::string& key, std::size_t length) const {
    const json& v = get(key);
    if (!v.is_array()) fail(key, "expected an array of numbers");
    if (v.size() != length) fail(key, "expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()));
    RealVector out(static_cast<Eigen::Index>(length));
    for (std::size_t i = 0; i < length; ++i) out[static_cast<Eigen::Index>(i)] = number_at(key, v[i]);
    return out;
  }

  RealVector positive_vector(const std::string& key, std::size_t length) const {
    RealVector out = vector(key, length);
    if (!(out.array() > 0.0).all()) fail(key, "entries must be positive");
    return out;
  }

 private:
  double number_at(const std::string& key, const json& v) const {
    if (!v.is_number()) fail(key, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(key, "must be finite");
    return x;
  }

  long long integer_at(const std::string& key, const json& v, long long lo, long long hi) const {
    if (!v.is_number_integer()) fail(key, "expected an integer");
    const long long x = v.get<long long>();
    if (x < lo || x > hi) {
      fail(key, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(x));
    }
    return x;
  }

  const json& node_;
  std::string prefix_;
  const std::string& source_;
};

bool uses_evaluation(ExperimentKind kind) {
  return kind == ExperimentKind::kMapReconstruction || kind == ExperimentKind::kVectorfieldRecovery;
}

void read_orders(const Section& root, ExperimentConfig& c) {
  const Section orders = root.object("orders");
  orders.allow_only({"m", "n", "n_sweep"});
  c.m = static_cast<int>(orders.integer("m", 0, kMaxOrder));
  if (orders.has("n") == orders.has("n_sweep")) orders.fail("n_sweep", "give exactly one of n and n_sweep");
  const std::string key = orders.has("n") ? "n" : "n_sweep";
  for (long long n : orders.integers(key, c.m, kMaxOrder)) c.n_values.push_back(static_cast<int>(n));
}

void read_sampling(const Section& root, ExperimentConfig& c) {
  const Section s = root.object("sampling");
  s.allow_only({"scheme", "N", "support", "support_radii", "seed"});
  const std::string scheme = s.string("scheme");
  const auto parsed = parse_scheme(scheme);
  if (!parsed) s.fail("scheme", "unknown scheme '" + scheme + "' (iid, grid, halton)");
  c.sampling.scheme = *parsed;
  for (long long N : s.integers("N", 1, 100000000)) c.sampling.N.push_back(static_cast<Eigen::Index>(N));
  const std::string support = s.has("support") ? s.string("support") : "box";
  if (support != "box" && support != "ball") s.fail("support", "expected 'box' or 'ball'");
  c.sampling.ball = support == "ball";
  c.sampling.d = c.d;
  c.sampling.radii = s.positive_vector("support_radii", c.sampling.ball ? 1 : static_cast<std::size_t>(c.d));
  c.sampling.seed = static_cast<std::uint64_t>(s.integer("seed", 0, std::numeric_limits<long long>::max()));
}

void read_domain(const Section& root, ExperimentConfig& c) {
  const Section dom = root.object("domain");
  dom.allow_only({"kind", "radii"});
  const std::string kind = dom.string("kind");
  if (kind == "box") {
    c.domain = DomainSpec::box(c.base_point, dom.positive_vector("radii", static_cast<std::size_t>(c.d)));
  } else if (kind == "ball") {
    c.domain = DomainSpec::ball(c.base_point, dom.positive_vector("radii", 1)[0]);
  } else {
    dom.fail("kind", "expected 'box' or 'ball'");
  }
}

void read_evaluation(const Section& root, ExperimentConfig& c) {
  if (c.sampling.ball) {
    c.eval_radii = RealVector::Constant(c.d, c.sampling.radii[0] / std::sqrt(static_cast<double>(c.d)));
  } else {
    c.eval_radii = c.sampling.radii;
  }
  if (!root.has("evaluation")) return;
  const Section ev = root.object("evaluation");
  ev.allow_only({"radii", "points"});
  if (ev.has("radii")) c.eval_radii = ev.positive_vector("radii", static_cast<std::size_t>(c.d));
  if (ev.has("points")) c.eval_points = static_cast<int>(ev.integer("points", 1, 10001));
}

}  // namespace

ConfigError::ConfigError(std::string path, std::string field, std::string reason)
    : std::runtime_error(path + ": " + field + ": " + reason),
      path_(std::move(path)),
      field_(std::move(field)),
      reason_(std::move(reason)) {}

json ConfigError::record() const {
  return {{"error", "config"}, {"path", path_}, {"field", field_}, {"reason", reason_}};
}

PipelineError::PipelineError(std::string stage, std::string kind, std::string reason)
    : std::runtime_error(stage + ": " + reason), stage_(std::move(stage)), kind_(std::move(kind)), reason_(std::move(reason)) {}

json PipelineError::record() const {
  return {{"error", "pipeline"}, {"stage", stage_}, {"kind", kind_}, {"reason", reason_}};
}

MeasureSpec SamplingConfig::measure() const {
  if (ball) return MeasureSpec::uniform_ball(RealVector::Zero(d), radii[0]);
  return MeasureSpec::uniform_box(RealVector::Zero(d), radii);
}

ExperimentConfig parse_config(const json& doc, const std::string& source) {
  if (!doc.is_object()) throw ConfigError(source, "", "top level must be an object");
  const Section root(doc, "", source);
  root.allow_only({"experiment", "dimension", "domain", "base_point", "map", "orders", "sampling", "flow", "hankel",
                   "precision_bits", "evaluation", "output_dir"});

  ExperimentConfig c;
  c.source = source;
  c.raw = doc;
  const std::string kind = root.string("experiment");
  const auto parsed = parse_kind(kind);
  if (!parsed) root.fail("experiment", "unknown experiment kind '" + kind + "'");
  c.kind = *parsed;
  if (root.has("output_dir")) c.output_dir = root.string("output_dir");
  if (root.has("precision_bits")) c.precision_bits = static_cast<int>(root.integer("precision_bits", 32, 1 << 16));

  if (c.kind == ExperimentKind::kHankelRates) {
    const Section h = root.object("hankel");
    h.allow_only({"a", "r", "n_max"});
    c.hankel_a = h.number("a");
    c.hankel_r = h.positive("r");
    c.hankel_n_max = static_cast<int>(h.integer("n_max", 0, 200));
    return c;
  }

  const Section dim = root.object("dimension");
  dim.allow_only({"d", "r"});
  c.d = static_cast<int>(dim.integer("d", 1, 8));
  c.r = static_cast<int>(dim.integer("r", 1, 8));

  c.map_text = root.string("map");
  try {
    c.map = parse_map(c.map_text, c.d, c.r);
  } catch (const jetflow::Error& e) {
    root.fail("map", e.what());
  }

  if (c.kind == ExperimentKind::kLsqEquivalence) {
    if (c.r != 1) dim.fail("r", "lsq-equivalence needs a scalar map (r = 1)");
    c.base_point = root.has("base_point") ? root.vector("base_point", static_cast<std::size_t>(c.d))
                                          : RealVector(RealVector::Zero(c.d));
    if (!c.base_point.isZero(0.0)) root.fail("base_point", "lsq-equivalence runs at the origin");
  } else {
    c.base_point = root.vector("base_point", static_cast<std::size_t>(c.d));
  }
  if (c.kind == ExperimentKind::kVectorfieldRecovery && c.r != c.d) dim.fail("r", "a vector field needs r = d");

  read_orders(root, c);
  read_sampling(root, c);

  if (c.kind != ExperimentKind::kLsqEquivalence) {
    read_domain(root, c);
    try {
      measure_radii(c.sampling.measure(), c.domain);
    } catch (const jetflow::DomainError& e) {
      throw ConfigError(source, "sampling.support_radii", e.what());
    }
  }
  if (uses_evaluation(c.kind)) read_evaluation(root, c);

  if (c.kind == ExperimentKind::kVectorfieldRecovery) {
    const Section flow = root.object("flow");
    flow.allow_only({"T", "tol"});
    c.flow_T = flow.positive("T");
    if (flow.has("tol")) c.flow_tol = flow.positive("tol");
  } else if (root.has("flow")) {
    root.fail("flow", "only used by vectorfield-recovery");
  }
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), "", "cannot open file");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path.string(), "", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc, path.string());
}

}  // namespace jetflow::tools

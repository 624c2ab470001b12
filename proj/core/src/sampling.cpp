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

#include "jetflow/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "jetflow/errors.hpp"

namespace jetflow {

std::optional<SamplingScheme> parse_scheme(std::string_view name) {
  if (name == "iid") return SamplingScheme::kIid;
  if (name == "grid") return SamplingScheme::kGrid;
  if (name == "halton") return SamplingScheme::kHalton;
  return std::nullopt;
}

std::string_view scheme_name(SamplingScheme scheme) {
  switch (scheme) {
    case SamplingScheme::kIid:
      return "iid";
    case SamplingScheme::kGrid:
      return "grid";
    case SamplingScheme::kHalton:
      return "halton";
  }
  return "unknown";
}

SampleSet::Provenance provenance_of(SamplingScheme scheme) {
  switch (scheme) {
    case SamplingScheme::kIid:
      return SampleSet::Provenance::kIid;
    case SamplingScheme::kGrid:
      return SampleSet::Provenance::kGrid;
    case SamplingScheme::kHalton:
      return SampleSet::Provenance::kHalton;
  }
  return SampleSet::Provenance::kExternal;
}

double radical_inverse(std::uint64_t index, unsigned base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % base);
    index /= base;
    f /= base;
  }
  return result;
}

namespace {

std::vector<unsigned> first_primes(int count) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; static_cast<int>(primes.size()) < count; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

// Bounding box of the support as (lower corner, full width).
void support_box(const MeasureSpec& measure, RealVector& lower, RealVector& width) {
  const int d = measure.dim();
  if (measure.kind == MeasureSpec::Kind::kUniformBox) {
    lower = measure.center - measure.radii;
    width = 2.0 * measure.radii;
  } else {
    const double rho = measure.radii(0);
    lower = measure.center.array() - rho;
    width = RealVector::Constant(d, 2.0 * rho);
  }
}

bool inside_ball(const MeasureSpec& measure, const RealVector& x) {
  return (x - measure.center).norm() <= measure.radii(0) * (1.0 + 1e-15);
}

// Keep `count` of `rows` evenly spaced, first and last included.
RealPoints thin(const RealPoints& rows, Eigen::Index count) {
  const Eigen::Index total = rows.rows();
  if (count == total) return rows;
  RealPoints out(count, rows.cols());
  for (Eigen::Index i = 0; i < count; ++i) {
    const Eigen::Index src = count == 1 ? (total - 1) / 2
                                        : static_cast<Eigen::Index>(std::llround(
                                              static_cast<double>(i) * (total - 1) / (count - 1)));
    out.row(i) = rows.row(src);
  }
  return out;
}

RealPoints tensor_grid(const RealVector& lower, const RealVector& width, Eigen::Index k) {
  const int d = static_cast<int>(lower.size());
  Eigen::Index total = 1;
  for (int c = 0; c < d; ++c) total *= k;
  RealPoints out(total, d);
  std::vector<Eigen::Index> digit(d, 0);
  for (Eigen::Index row = 0; row < total; ++row) {
    for (int c = 0; c < d; ++c) {
      const double s = k == 1 ? 0.5 : static_cast<double>(digit[c]) / static_cast<double>(k - 1);
      out(row, c) = lower(c) + s * width(c);
    }
    // Last coordinate varies fastest.
    for (int c = d - 1; c >= 0; --c) {
      if (++digit[c] < k) break;
      digit[c] = 0;
    }
  }
  return out;
}

RealPoints draw_iid(const MeasureSpec& measure, Eigen::Index N, std::uint64_t seed) {
  const int d = measure.dim();
  std::mt19937_64 rng(seed);
  RealPoints out(N, d);
  switch (measure.kind) {
    case MeasureSpec::Kind::kUniformBox: {
      std::uniform_real_distribution<double> unit(-1.0, 1.0);
      for (Eigen::Index i = 0; i < N; ++i) {
        for (int c = 0; c < d; ++c) out(i, c) = measure.center(c) + measure.radii(c) * unit(rng);
      }
      break;
    }
    case MeasureSpec::Kind::kUniformBall: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      RealVector dir(d);
      for (Eigen::Index i = 0; i < N; ++i) {
        double norm = 0.0;
        do {
          for (int c = 0; c < d; ++c) dir(c) = gauss(rng);
          norm = dir.norm();
        } while (norm == 0.0);
        const double radius = measure.radii(0) * std::pow(unit(rng), 1.0 / d);
        out.row(i) = (measure.center + radius / norm * dir).transpose();
      }
      break;
    }
    case MeasureSpec::Kind::kEmpirical: {
      std::uniform_int_distribution<Eigen::Index> pick(0, measure.points.rows() - 1);
      for (Eigen::Index i = 0; i < N; ++i) out.row(i) = measure.points.row(pick(rng));
      break;
    }
  }
  return out;
}

RealPoints draw_grid(const MeasureSpec& measure, Eigen::Index N) {
  const int d = measure.dim();
  if (measure.kind == MeasureSpec::Kind::kEmpirical) {
    const Eigen::Index total = measure.points.rows();
    if (N <= total) return thin(measure.points, N);
    RealPoints out(N, d);
    for (Eigen::Index i = 0; i < N; ++i) out.row(i) = measure.points.row(i % total);
    return out;
  }
  RealVector lower;
  RealVector width;
  support_box(measure, lower, width);
  auto k = static_cast<Eigen::Index>(std::ceil(std::pow(static_cast<double>(N), 1.0 / d) - 1e-9));
  k = std::max<Eigen::Index>(k, 1);
  while (true) {
    RealPoints grid = tensor_grid(lower, width, k);
    if (measure.kind == MeasureSpec::Kind::kUniformBall) {
      Eigen::Index kept = 0;
      for (Eigen::Index i = 0; i < grid.rows(); ++i) {
        if (inside_ball(measure, grid.row(i).transpose())) grid.row(kept++) = grid.row(i);
      }
      grid.conservativeResize(kept, Eigen::NoChange);
    }
    if (grid.rows() >= N) return thin(grid, N);
    ++k;
  }
}

RealPoints draw_halton(const MeasureSpec& measure, Eigen::Index N) {
  const int d = measure.dim();
  if (measure.kind == MeasureSpec::Kind::kEmpirical) return draw_grid(measure, N);
  const std::vector<unsigned> bases = first_primes(d);
  RealVector lower;
  RealVector width;
  support_box(measure, lower, width);
  RealPoints out(N, d);
  RealVector x(d);
  Eigen::Index filled = 0;
  for (std::uint64_t index = 1; filled < N; ++index) {
    for (int c = 0; c < d; ++c) x(c) = lower(c) + width(c) * radical_inverse(index, bases[c]);
    if (measure.kind == MeasureSpec::Kind::kUniformBall && !inside_ball(measure, x)) continue;
    out.row(filled++) = x.transpose();
  }
  return out;
}

}  // namespace

RealPoints draw_samples(const MeasureSpec& measure, Eigen::Index N, SamplingScheme scheme, std::uint64_t seed) {
  if (N < 1) throw std::invalid_argument("draw_samples: N must be at least 1");
  if (measure.dim() < 1) throw DimensionError("draw_samples: measure has no dimension");
  switch (scheme) {
    case SamplingScheme::kIid:
      return draw_iid(measure, N, seed);
    case SamplingScheme::kGrid:
      return draw_grid(measure, N);
    case SamplingScheme::kHalton:
      return draw_halton(measure, N);
  }
  throw std::invalid_argument("draw_samples: unknown scheme");
}

SampleSet make_sample_set(const RealPoints& offsets, const RealVector& p, const MapExpr& f,
                          SampleSet::Provenance provenance, std::uint64_t seed) {
  const int d = static_cast<int>(p.size());
  if (offsets.cols() != d || f.input_dim() != d) throw DimensionError("make_sample_set: dimension mismatch");
  SampleSet out;
  out.provenance = provenance;
  out.seed = seed;
  out.Z.resize(offsets.rows(), d);
  out.W.resize(offsets.rows(), f.output_dim());
  for (Eigen::Index i = 0; i < offsets.rows(); ++i) {
    const ComplexVector z = (p + offsets.row(i).transpose()).cast<cplx>();
    out.Z.row(i) = z.transpose();
    out.W.row(i) = f.eval(z).transpose();
  }
  return out;
}

}  // namespace jetflow

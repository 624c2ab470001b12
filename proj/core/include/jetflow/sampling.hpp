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

#ifndef JETFLOW_SAMPLING_HPP_
#define JETFLOW_SAMPLING_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

#include "jetflow/fock.hpp"
#include "jetflow/map_expr.hpp"
#include "jetflow/measure.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

enum class SamplingScheme { kIid, kGrid, kHalton };

std::optional<SamplingScheme> parse_scheme(std::string_view name);
std::string_view scheme_name(SamplingScheme scheme);

// N points of the measure's support, one per row. Same inputs give the same
// output.
//   iid:    mt19937_64 seeded with `seed`; balls use a Gaussian direction and
//           radius * U^(1/d). Empirical measures are resampled with
//           replacement.
//   grid:   tensor grid with ceil(N^(1/d)) nodes per axis (endpoints
//           included), thinned to N evenly spaced entries. Balls keep grid
//           nodes inside the ball. Empirical measures take evenly spaced
//           points of the list.
//   halton: Halton sequence in the first d prime bases from index 1, scaled
//           to the box; balls skip points outside. `seed` is ignored.
RealPoints draw_samples(const MeasureSpec& measure, Eigen::Index N, SamplingScheme scheme, std::uint64_t seed);

// Radical inverse of `index` in `base`.
double radical_inverse(std::uint64_t index, unsigned base);

// Z = p + offsets and W = f(Z).
SampleSet make_sample_set(const RealPoints& offsets, const RealVector& p, const MapExpr& f,
                          SampleSet::Provenance provenance, std::uint64_t seed);

SampleSet::Provenance provenance_of(SamplingScheme scheme);

}  // namespace jetflow

#endif  // JETFLOW_SAMPLING_HPP_

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

#ifndef JETFLOW_MEASURE_HPP_
#define JETFLOW_MEASURE_HPP_

#include "jetflow/types.hpp"

namespace jetflow {

// Sampling measure on R^d, expressed in offset coordinates (the base point is
// added by the caller when samples are fed to the estimator).
struct MeasureSpec {
  enum class Kind { kEmpirical, kUniformBox, kUniformBall };

  Kind kind = Kind::kUniformBox;
  RealPoints points;   // kEmpirical, one point per row
  RealVector center;   // kUniformBox / kUniformBall
  RealVector radii;    // per-coordinate (box) or a single radius (ball)
  bool normalized = true;  // probability measure; false = plain Lebesgue measure

  int dim() const;

  static MeasureSpec empirical(RealPoints pts);
  static MeasureSpec uniform_box(RealVector center, RealVector radii, bool normalized = true);
  // Symmetric box [-radius, radius]^d.
  static MeasureSpec uniform_box(int d, double radius, bool normalized = true);
  static MeasureSpec uniform_ball(RealVector center, double radius, bool normalized = true);
};

}  // namespace jetflow

#endif  // JETFLOW_MEASURE_HPP_

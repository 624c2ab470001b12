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

#include "jetflow/measure.hpp"

#include <stdexcept>

namespace jetflow {

int MeasureSpec::dim() const {
  return kind == Kind::kEmpirical ? static_cast<int>(points.cols()) : static_cast<int>(center.size());
}

MeasureSpec MeasureSpec::empirical(RealPoints pts) {
  if (pts.rows() < 1 || pts.cols() < 1) throw std::invalid_argument("empirical measure needs points");
  MeasureSpec m;
  m.kind = Kind::kEmpirical;
  m.points = std::move(pts);
  return m;
}

MeasureSpec MeasureSpec::uniform_box(RealVector center, RealVector radii, bool normalized) {
  if (center.size() < 1 || center.size() != radii.size() || (radii.array() <= 0.0).any()) {
    throw std::invalid_argument("uniform box needs matching center/radii with radii > 0");
  }
  MeasureSpec m;
  m.kind = Kind::kUniformBox;
  m.center = std::move(center);
  m.radii = std::move(radii);
  m.normalized = normalized;
  return m;
}

MeasureSpec MeasureSpec::uniform_box(int d, double radius, bool normalized) {
  return uniform_box(RealVector::Zero(d), RealVector::Constant(d, radius), normalized);
}

MeasureSpec MeasureSpec::uniform_ball(RealVector center, double radius, bool normalized) {
  if (center.size() < 1 || radius <= 0.0) throw std::invalid_argument("uniform ball needs radius > 0");
  MeasureSpec m;
  m.kind = Kind::kUniformBall;
  m.center = std::move(center);
  m.radii = RealVector::Constant(1, radius);
  m.normalized = normalized;
  return m;
}

}  // namespace jetflow

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

#include "jetflow/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "jetflow/errors.hpp"
#include "parallel.hpp"

namespace jetflow {

DomainSpec DomainSpec::box(RealVector center, RealVector radii) {
  if (center.size() < 1 || center.size() != radii.size() || (radii.array() <= 0.0).any()) {
    throw std::invalid_argument("box domain needs matching center/radii with radii > 0");
  }
  return DomainSpec{Kind::kBox, std::move(center), std::move(radii)};
}

DomainSpec DomainSpec::ball(RealVector center, double radius) {
  if (center.size() < 1 || radius <= 0.0) throw std::invalid_argument("ball domain needs radius > 0");
  return DomainSpec{Kind::kBall, std::move(center), RealVector::Constant(1, radius)};
}

namespace {

// exp(-|p|^2/2 + <z, p>) with <z, p> = sum_k z_k conj(p_k).
cplx kernel_prefactor(const ComplexVector& p, const ComplexVector& z) {
  return std::exp(-0.5 * p.squaredNorm() + (p.conjugate().array() * z.array()).sum());
}

}  // namespace

cplx basis_u(const ComplexVector& p, const MultiIndex& alpha, const ComplexVector& z) {
  if (p.size() != z.size() || static_cast<Eigen::Index>(alpha.size()) != z.size()) {
    throw DimensionError("basis_u: dimension mismatch");
  }
  cplx monomial = 1.0;
  for (Eigen::Index c = 0; c < z.size(); ++c) monomial *= ipow(z[c] - p[c], alpha[c]);
  return kernel_prefactor(p, z) * monomial / std::sqrt(factorial(alpha));
}

ComplexRow basis_row(const ComplexVector& p, const MultiIndexTable& table, const ComplexVector& z) {
  const int d = table.dim();
  if (p.size() != d || z.size() != d) throw DimensionError("basis_row: dimension mismatch");
  const int n = table.max_degree();
  // powers(c, k) = (z_c - p_c)^k
  ComplexMatrix powers(d, n + 1);
  for (int c = 0; c < d; ++c) {
    powers(c, 0) = 1.0;
    for (int k = 1; k <= n; ++k) powers(c, k) = powers(c, k - 1) * (z[c] - p[c]);
  }
  const cplx prefactor = kernel_prefactor(p, z);
  ComplexRow row(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const MultiIndex& alpha = table[i];
    cplx value = prefactor;
    for (int c = 0; c < d; ++c) value *= powers(c, alpha[c]);
    row[i] = value / std::sqrt(factorial(alpha));
  }
  return row;
}

ComplexMatrix feature_matrix(const ComplexVector& p, int order, const ComplexPoints& points) {
  const MultiIndexTable table(static_cast<int>(p.size()), order);
  if (points.cols() != p.size()) throw DimensionError("feature_matrix: point dimension mismatch");
  ComplexMatrix out(points.rows(), table.size());
  detail::parallel_for(static_cast<std::size_t>(points.rows()), [&](std::size_t i) {
    const auto row = static_cast<Eigen::Index>(i);
    out.row(row) = basis_row(p, table, points.row(row).transpose());
  });
  return out;
}

double projection_tail_sq(const ComplexVector& p, int order, const ComplexVector& w) {
  // sum over all alpha of |u_{p,alpha}(w)|^2 is |e_w|^2 = exp(|w|^2).
  const MultiIndexTable table(static_cast<int>(p.size()), order);
  const double head = basis_row(p, table, w).squaredNorm();
  return std::max(0.0, std::exp(w.squaredNorm()) - head);
}

ComplexVector basis_gradient_at_zero(const ComplexVector& q, int order, int coordinate) {
  const int d = static_cast<int>(q.size());
  if (coordinate < 0 || coordinate >= d) throw DimensionError("gradient coordinate out of range");
  const MultiIndexTable table(d, order);
  const double scale = std::exp(-0.5 * q.squaredNorm());
  ComplexVector out(table.size());
  for (std::size_t j = 0; j < table.size(); ++j) {
    const MultiIndex& beta = table[j];
    // (-q)^beta and beta_i (-q)^(beta - e_i)
    cplx full = 1.0;
    for (int c = 0; c < d; ++c) full *= ipow(cplx(-q[c]), beta[c]);
    cplx lowered = 0.0;
    if (beta[coordinate] > 0) {
      lowered = static_cast<double>(beta[coordinate]);
      for (int c = 0; c < d; ++c) {
        lowered *= ipow(cplx(-q[c]), beta[c] - (c == coordinate ? 1 : 0));
      }
    }
    out[j] = scale * (lowered + std::conj(q[coordinate]) * full) / std::sqrt(factorial(beta));
  }
  return out;
}

double minkowski(const DomainSpec& domain, const ComplexVector& z) {
  if (z.size() != domain.dim()) throw DimensionError("minkowski: dimension mismatch");
  if (domain.kind == DomainSpec::Kind::kBall) return z.norm() / domain.radii[0];
  double out = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) out = std::max(out, std::abs(z[i]) / domain.radii[i]);
  return out;
}

MeasureRadii measure_radii(const MeasureSpec& measure, const DomainSpec& domain) {
  const int d = domain.dim();
  if (measure.dim() != d) throw DimensionError("measure_radii: dimension mismatch");
  MeasureRadii out{0.0, 1.0};
  switch (measure.kind) {
    case MeasureSpec::Kind::kEmpirical:
      for (Eigen::Index i = 0; i < measure.points.rows(); ++i) {
        const RealVector x = measure.points.row(i).transpose();
        out.R_mu = std::max(out.R_mu, minkowski(domain, x.cast<cplx>()));
        out.L_mu = std::max(out.L_mu, x.cwiseAbs().maxCoeff());
      }
      break;
    case MeasureSpec::Kind::kUniformBox: {
      // The gauge is convex, so its sup over a box sits at the corner farthest
      // from the origin in every coordinate.
      const RealVector reach = measure.center.cwiseAbs() + measure.radii;
      out.R_mu = minkowski(domain, reach.cast<cplx>());
      out.L_mu = std::max(1.0, reach.maxCoeff());
      break;
    }
    case MeasureSpec::Kind::kUniformBall: {
      const double rho = measure.radii[0];
      if (domain.kind == DomainSpec::Kind::kBall) {
        out.R_mu = (measure.center.norm() + rho) / domain.radii[0];
      } else {
        out.R_mu = ((measure.center.cwiseAbs().array() + rho) / domain.radii.array()).maxCoeff();
      }
      out.L_mu = std::max(1.0, measure.center.cwiseAbs().maxCoeff() + rho);
      break;
    }
  }
  if (out.R_mu > 1.0 + 1e-12) {
    throw DomainError("support of the measure is not contained in K0 (R_mu = " +
                      std::to_string(out.R_mu) + ")");
  }
  return out;
}

}  // namespace jetflow

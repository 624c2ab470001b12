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

#include "jetflow/vectorfield.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <boost/numeric/odeint.hpp>

#include "jetflow/errors.hpp"
#include "jetflow/linalg.hpp"
#include "jetflow/reconstruct.hpp"
#include "parallel.hpp"

namespace jetflow {

namespace odeint = boost::numeric::odeint;

namespace {

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

RealVector flow_map(const MapExpr& V, double T, const RealVector& z0, double tol) {
  const int d = V.input_dim();
  if (V.output_dim() != d) throw DimensionError("flow_map: vector field must map C^d to C^d");
  if (z0.size() != d) throw DimensionError("flow_map: initial point has the wrong dimension");
  if (!(T >= 0.0)) throw DomainError("flow_map: T must be nonnegative");
  if (!(tol > 0.0)) throw DomainError("flow_map: tol must be positive");

  using State = std::vector<double>;
  State state(z0.data(), z0.data() + d);
  if (T == 0.0) return z0;

  ComplexVector buffer(d);
  auto rhs = [&](const State& x, State& dxdt, double) {
    for (int k = 0; k < d; ++k) buffer[k] = x[k];
    const ComplexVector v = V.eval(buffer);
    for (int k = 0; k < d; ++k) dxdt[k] = v[k].real();
  };
  constexpr double kBlowUp = 1e12;
  constexpr std::size_t kMaxSteps = 1000000;
  std::size_t steps = 0;
  auto watch = [&](const State& x, double t) {
    for (double v : x) {
      if (!std::isfinite(v) || std::abs(v) > kBlowUp) {
        throw FlowBlowUp("flow_map: solution diverged near t = " + std::to_string(t));
      }
    }
    if (++steps > kMaxSteps) throw FlowBlowUp("flow_map: step budget exhausted");
  };

  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_dopri5<State>());
  try {
    odeint::integrate_adaptive(stepper, rhs, state, 0.0, T, std::min(T, 1e-3), watch);
  } catch (const odeint::step_adjustment_error& e) {
    throw FlowBlowUp(std::string("flow_map: step size collapsed: ") + e.what());
  } catch (const DomainError& e) {
    throw FlowBlowUp(std::string("flow_map: vector field undefined along the path: ") + e.what());
  }
  return Eigen::Map<const RealVector>(state.data(), d);
}

void check_equilibrium(const MapExpr& V, const RealVector& p) {
  const double speed = V.eval(p).norm();
  if (!(speed < 1e-12)) {
    throw DomainError("base point is not an equilibrium: |V(p)| = " + std::to_string(speed));
  }
}

SampleSet flow_samples(const MapExpr& V, const RealVector& p, const RealPoints& offsets, double T, double tol) {
  const int d = static_cast<int>(p.size());
  if (offsets.cols() != d) throw DimensionError("flow_samples: offsets have the wrong dimension");
  SampleSet out;
  out.Z.resize(offsets.rows(), d);
  out.W.resize(offsets.rows(), d);
  detail::parallel_for(
      static_cast<std::size_t>(offsets.rows()),
      [&](std::size_t i) {
        const auto row = static_cast<Eigen::Index>(i);
        const RealVector z0 = p + offsets.row(row).transpose();
        out.Z.row(row) = z0.cast<cplx>().transpose();
        out.W.row(row) = flow_map(V, T, z0, tol).cast<cplx>().transpose();
      },
      64);
  return out;
}

MatrixLogResult matrix_log_detailed(const ComplexMatrix& C, double quad_tol) {
  if (C.rows() != C.cols()) throw DimensionError("matrix_log: matrix is not square");
  if (!(quad_tol > 0.0)) throw DomainError("matrix_log: quad_tol must be positive");
  const Eigen::Index r = C.rows();
  if (r == 0) return {};

  Eigen::ComplexEigenSolver<ComplexMatrix> eig(C, false);
  if (eig.info() != Eigen::Success) throw SpectrumError("matrix_log: eigenvalue computation failed");
  const double scale = std::max(1.0, C.norm());
  for (Eigen::Index i = 0; i < r; ++i) {
    const cplx lambda = eig.eigenvalues()[i];
    if (std::abs(lambda.imag()) <= 1e-12 * scale && lambda.real() <= 1e-14 * scale) {
      throw SpectrumError("matrix_log: eigenvalue on the closed negative real axis (" +
                          std::to_string(lambda.real()) + ")");
    }
  }

  const ComplexMatrix I = ComplexMatrix::Identity(r, r);
  const ComplexMatrix E = C - I;
  auto integrate = [&](int nodes) {
    const QuadratureRule rule = gauss_legendre_unit(nodes);
    ComplexMatrix S = ComplexMatrix::Zero(r, r);
    for (int k = 0; k < nodes; ++k) {
      const ComplexMatrix M = I + rule.nodes[k] * E;
      S += rule.weights[k] * M.partialPivLu().inverse();
    }
    return ComplexMatrix(E * S);
  };

  constexpr int kMaxNodes = 2048;
  MatrixLogResult out;
  out.nodes = 8;
  out.L = integrate(out.nodes);
  while (true) {
    const int next = 2 * out.nodes;
    if (next > kMaxNodes) {
      throw QuadratureError("matrix_log: quadrature did not converge with " + std::to_string(kMaxNodes) +
                            " nodes (last change " + format_sci(out.last_change) + ")");
    }
    ComplexMatrix refined = integrate(next);
    out.last_change = (refined - out.L).norm();
    out.L = std::move(refined);
    out.nodes = next;
    if (out.last_change < quad_tol * std::max(1.0, out.L.norm())) break;
  }
  return out;
}

ComplexMatrix matrix_log(const ComplexMatrix& C, double quad_tol) { return matrix_log_detailed(C, quad_tol).L; }

GeneratorEstimate estimate_generator(const ComplexMatrix& C_hat, double T, double quad_tol) {
  if (!(T > 0.0)) throw DomainError("estimate_generator: T must be positive");
  if (C_hat.rows() != C_hat.cols()) throw DimensionError("estimate_generator: C_hat is not square");
  const MatrixLogResult log = matrix_log_detailed(C_hat, quad_tol);
  GeneratorEstimate gen;
  gen.T = T;
  gen.A_hat = log.L / T;
  gen.quadrature_nodes = log.nodes;
  gen.log_residual = (matrix_exp(log.L) - C_hat).norm();
  return gen;
}

GeneratorEstimate estimate_generator(const PushforwardEstimate& estimate, double T, double quad_tol) {
  return estimate_generator(estimate.C_hat, T, quad_tol);
}

ComplexVector reconstruct_field(const GeneratorEstimate& gen, const RealVector& p, int m, const ComplexVector& z) {
  return reconstruct_eval(gen.A_hat, p, p.cast<cplx>(), m, z);
}

double bound_B(const ComplexMatrix& C, int grid) {
  if (C.rows() != C.cols()) throw DimensionError("bound_B: matrix is not square");
  if (grid < 1) throw std::invalid_argument("bound_B: grid must be positive");
  const Eigen::Index r = C.rows();
  const ComplexMatrix I = ComplexMatrix::Identity(r, r);
  double best = 0.0;
  for (int k = 0; k <= grid; ++k) {
    const double t = static_cast<double>(k) / grid;
    const ComplexMatrix M = I + t * (C - I);
    const double smin = smallest_singular_value(M);
    if (!(smin > std::numeric_limits<double>::epsilon() * std::max(1.0, operator_norm(M)))) {
      return std::numeric_limits<double>::infinity();
    }
    best = std::max(best, 1.0 / smin);
  }
  return best;
}

}  // namespace jetflow

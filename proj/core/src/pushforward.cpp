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

#include "jetflow/pushforward.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "jetflow/errors.hpp"
#include "jetflow/jet.hpp"
#include "jetflow/linalg.hpp"
#include "jetflow/multiindex.hpp"

namespace jetflow {

PushforwardEstimate estimate_pushforward(const RealVector& p, const ComplexVector& q, int m, int n,
                                         const SampleSet& samples, const EstimatorOptions& options) {
  if (m < 0 || n < m) throw std::invalid_argument("estimate_pushforward: need 0 <= m <= n");
  const int d = static_cast<int>(p.size());
  const int r = static_cast<int>(q.size());
  if (samples.Z.cols() != d || samples.W.cols() != r) {
    throw DimensionError("estimate_pushforward: sample dimensions do not match p and q");
  }
  const Eigen::Index N = samples.Z.rows();
  if (samples.W.rows() != N) throw DimensionError("estimate_pushforward: Z and W differ in length");

  const auto r_n = static_cast<Eigen::Index>(jet_dimension(d, n));
  const auto r_m_in = static_cast<Eigen::Index>(jet_dimension(d, m));
  const auto r_m_out = static_cast<Eigen::Index>(jet_dimension(r, m));

  PushforwardEstimate est;
  est.m = m;
  est.n = n;
  est.pinv_rcond = options.rcond.value_or(1e-12 * static_cast<double>(std::max<Eigen::Index>(N, r_n)));
  if (N < r_n) {
    est.warnings.push_back("fewer samples (" + std::to_string(N) + ") than jet dimension r_n = " +
                           std::to_string(r_n));
  }

  const ComplexMatrix U = feature_matrix(p.cast<cplx>(), n, samples.Z);
  const ComplexMatrix V = feature_matrix(q, m, samples.W);
  const TruncatedSolve solve = truncated_solve(U, V, est.pinv_rcond);

  est.singular_values = solve.singular_values;
  est.rank = solve.rank;
  est.largest_sv = solve.singular_values.empty() ? 0.0 : solve.singular_values.front();
  est.smallest_kept_sv = solve.rank > 0 ? solve.singular_values[solve.rank - 1] : 0.0;

  const Eigen::Index needed = options.require_full_rank ? r_n : r_m_in;
  if (solve.rank < needed) {
    throw IllPosedError("estimate_pushforward: feature matrix keeps " + std::to_string(solve.rank) +
                            " singular values, need " + std::to_string(needed),
                        solve.singular_values);
  }
  est.C_hat = solve.X.adjoint().leftCols(r_m_in);
  if (est.C_hat.rows() != r_m_out) throw DimensionError("estimate_pushforward: unexpected block size");
  return est;
}

namespace {

double binomial_coefficient(const MultiIndex& alpha, const MultiIndex& gamma) {
  double out = 1.0;
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    for (int j = 1; j <= gamma[k]; ++j) out = out * (alpha[k] - gamma[k] + j) / j;
  }
  return out;
}

}  // namespace

OraclePushforward oracle_pushforward(const MapExpr& f, const RealVector& p, int m) {
  if (m < 0) throw std::invalid_argument("oracle_pushforward: negative order");
  const int d = f.input_dim();
  const int r = f.output_dim();
  if (p.size() != d) throw DimensionError("oracle_pushforward: base point dimension mismatch");

  const int order = std::max(m, 1);
  const std::vector<Jet> F = jet_of_map(f, p, order);
  const auto in_table = F.front().table_ptr();
  const MultiIndexTable out_table(r, m);

  OraclePushforward out;
  out.q.resize(r);
  out.jacobian.resize(r, d);
  for (int k = 0; k < r; ++k) {
    out.q[k] = F[k].constant_term();
    for (int l = 0; l < d; ++l) out.jacobian(k, l) = F[k][static_cast<std::size_t>(l + 1)];
  }

  // h = f - q and the exponential factor exp(<f(z), q>) as jets about p.
  std::vector<Jet> h;
  h.reserve(r);
  Jet exponent(in_table);
  for (int k = 0; k < r; ++k) {
    Jet hk = F[k];
    hk[0] = 0.0;
    h.push_back(hk);
    exponent += F[k] * std::conj(out.q[k]);
  }
  const Jet kernel = jet_exp(exponent) * std::exp(-0.5 * out.q.squaredNorm());

  // Powers h_k^j, j = 0..m.
  std::vector<std::vector<Jet>> h_pow(r);
  for (int k = 0; k < r; ++k) {
    h_pow[k].push_back(Jet::constant(in_table, 1.0));
    for (int j = 1; j <= m; ++j) h_pow[k].push_back(h_pow[k].back() * h[k]);
  }

  const auto r_m_in = jet_dimension(d, m);
  const MultiIndexTable& in = *in_table;
  out.C = ComplexMatrix::Zero(static_cast<Eigen::Index>(out_table.size()), static_cast<Eigen::Index>(r_m_in));
  const double p_scale = std::exp(-0.5 * p.squaredNorm());

  for (std::size_t j = 0; j < out_table.size(); ++j) {
    const MultiIndex& beta = out_table[j];
    Jet g = kernel * (1.0 / std::sqrt(factorial(beta)));
    for (int k = 0; k < r; ++k) {
      if (beta[k] > 0) g = g * h_pow[k][static_cast<std::size_t>(beta[k])];
    }
    // Contract with the functional whose transform is u_{p,alpha}:
    // exp(-|p|^2/2)/sqrt(alpha!) sum_gamma C(alpha, gamma) (-p)^(alpha-gamma) d^gamma.
    for (std::size_t i = 0; i < r_m_in; ++i) {
      const MultiIndex& alpha = in[i];
      cplx acc = 0.0;
      for (std::size_t s = 0; s <= i; ++s) {
        const MultiIndex& gamma = in[s];
        bool below = true;
        for (int k = 0; k < d && below; ++k) below = gamma[k] <= alpha[k];
        if (!below) continue;
        double shift = 1.0;
        for (int k = 0; k < d; ++k) shift *= ipow(-p[k], alpha[k] - gamma[k]);
        acc += binomial_coefficient(alpha, gamma) * shift * factorial(gamma) * g[s];
      }
      out.C(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          std::conj(p_scale / std::sqrt(factorial(alpha)) * acc);
    }
  }
  return out;
}

double gamma_check(const RealMatrix& D_mu, const RealMatrix& D_hat) {
  if (D_mu.rows() != D_mu.cols() || D_hat.rows() != D_mu.rows() || D_hat.cols() != D_mu.cols()) {
    throw DimensionError("gamma_check: matrices must be square and of equal size");
  }
  const RealMatrix sym = 0.5 * (D_mu + D_mu.transpose());
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(sym);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= 0.0) {
    throw DomainError("gamma_check: reference moment matrix is not positive definite");
  }
  const RealMatrix inv_sqrt =
      eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  RealMatrix residual = RealMatrix::Identity(D_mu.rows(), D_mu.cols()) - inv_sqrt * D_hat * inv_sqrt;
  residual = 0.5 * (residual + residual.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RealMatrix> res_eig(residual, Eigen::EigenvaluesOnly);
  return res_eig.eigenvalues().cwiseAbs().maxCoeff();
}

double theorem_rate(int m, int n, double R_mu, double Lambda_n, double gamma) {
  if (m < 0 || n < 0) throw std::invalid_argument("theorem_rate: negative order");
  if (!(gamma > 0.0 && gamma <= 1.0)) throw DomainError("theorem_rate: gamma must lie in (0, 1]");
  if (!(Lambda_n > 0.0)) throw DomainError("theorem_rate: Lambda_n must be positive");
  return std::sqrt(std::tgamma(m + 1.0) / gamma) * std::pow(R_mu, n) / std::sqrt(Lambda_n);
}

}  // namespace jetflow

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

#include "jetflow/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "jetflow/errors.hpp"
#include "jetflow/multiindex.hpp"

namespace jetflow {

RealMatrix RationalMatrix::to_double() const {
  RealMatrix out(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).get_d();
  }
  return out;
}

std::string RationalMatrix::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const mpq_class& q = (*this)(i, j);
      if (j > 0) os << ' ';
      os << q.get_num().get_str() << '/' << q.get_den().get_str();
    }
    os << '\n';
  }
  return os.str();
}

namespace {

mpq_class qpow(const mpq_class& base, int k) {
  mpq_class out(1);
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

// Per-coordinate moments of the box, k = 0..max_k.
std::vector<mpq_class> interval_moments(double center, double radius, int max_k, bool normalized) {
  const mpq_class c(center);
  const mpq_class r(radius);
  const mpq_class hi = c + r;
  const mpq_class lo = c - r;
  std::vector<mpq_class> out(max_k + 1);
  mpq_class hi_pow = hi;
  mpq_class lo_pow = lo;
  for (int k = 0; k <= max_k; ++k) {
    out[k] = (hi_pow - lo_pow) / (k + 1);
    if (normalized) out[k] /= 2 * r;
    hi_pow *= hi;
    lo_pow *= lo;
  }
  return out;
}

mpz_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

// E[y^delta] for y uniform on the centered ball of radius rho in R^d.
mpq_class centered_ball_moment(const MultiIndex& delta, const mpq_class& rho) {
  const int d = static_cast<int>(delta.size());
  int total = 0;
  mpq_class num(1);
  for (int k : delta) {
    if (k % 2 != 0) return mpq_class(0);
    for (int j = k - 1; j > 0; j -= 2) num *= j;
    total += k;
  }
  mpq_class den(1);
  for (int j = 1; j <= total / 2; ++j) den *= d + 2 * j;
  return num / den * qpow(rho, total);
}

mpq_class ball_moment(const MultiIndex& gamma, const RealVector& center, double radius) {
  const int d = static_cast<int>(gamma.size());
  const mpq_class rho(radius);
  std::vector<mpq_class> c(d);
  for (int i = 0; i < d; ++i) c[i] = mpq_class(center(i));

  // Sum over delta <= gamma of prod C(gamma_i, delta_i) c_i^(gamma_i - delta_i) E[y^delta].
  mpq_class sum(0);
  MultiIndex delta(d, 0);
  while (true) {
    mpq_class term = centered_ball_moment(delta, rho);
    if (term != 0) {
      for (int i = 0; i < d; ++i) {
        term *= binomial(gamma[i], delta[i]);
        term *= qpow(c[i], gamma[i] - delta[i]);
      }
      sum += term;
    }
    int k = 0;
    while (k < d && delta[k] == gamma[k]) delta[k++] = 0;
    if (k == d) break;
    ++delta[k];
  }
  return sum;
}

void check_measure(const MeasureSpec& measure, int n) {
  if (n < 0) throw std::invalid_argument("moment_matrix: negative order");
  if (measure.dim() < 1) throw DimensionError("moment_matrix: measure has no dimension");
}

// Index into the degree-2n table of alpha_i + alpha_j for every pair.
std::vector<std::size_t> sum_indices(const MultiIndexTable& low, const MultiIndexTable& high) {
  const std::size_t r = low.size();
  std::vector<std::size_t> out(r * r);
  MultiIndex sum(low.dim());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (int k = 0; k < low.dim(); ++k) sum[k] = low[i][k] + low[j][k];
      out[i * r + j] = *high.index_of(sum);
    }
  }
  return out;
}

std::vector<mpq_class> exact_monomial_moments(const MeasureSpec& measure, const MultiIndexTable& high) {
  const int d = measure.dim();
  const int top = high.max_degree();
  std::vector<mpq_class> out(high.size());

  switch (measure.kind) {
    case MeasureSpec::Kind::kUniformBox: {
      std::vector<std::vector<mpq_class>> per_axis(d);
      for (int k = 0; k < d; ++k) {
        per_axis[k] = interval_moments(measure.center(k), measure.radii(k), top, measure.normalized);
      }
      for (std::size_t s = 0; s < high.size(); ++s) {
        mpq_class v(1);
        for (int k = 0; k < d; ++k) v *= per_axis[k][high[s][k]];
        out[s] = v;
      }
      break;
    }
    case MeasureSpec::Kind::kUniformBall: {
      if (!measure.normalized && d != 1) {
        throw DomainError("exact moments of an unnormalized ball need d = 1 (volume is irrational)");
      }
      const double radius = measure.radii(0);
      for (std::size_t s = 0; s < high.size(); ++s) {
        out[s] = ball_moment(high[s], measure.center, radius);
        if (!measure.normalized) out[s] *= 2 * mpq_class(radius);
      }
      break;
    }
    case MeasureSpec::Kind::kEmpirical: {
      const Eigen::Index N = measure.points.rows();
      std::vector<mpq_class> x(d);
      for (Eigen::Index row = 0; row < N; ++row) {
        for (int k = 0; k < d; ++k) x[k] = mpq_class(measure.points(row, k));
        for (std::size_t s = 0; s < high.size(); ++s) {
          mpq_class v(1);
          for (int k = 0; k < d; ++k) v *= qpow(x[k], high[s][k]);
          out[s] += v;
        }
      }
      if (measure.normalized) {
        for (auto& v : out) v /= static_cast<unsigned long>(N);
      }
      break;
    }
  }
  return out;
}

double ball_volume(int d, double radius) {
  return std::pow(std::numbers::pi, 0.5 * d) * std::pow(radius, d) / std::tgamma(0.5 * d + 1.0);
}

}  // namespace

RationalMatrix moment_matrix_exact(const MeasureSpec& measure, int n) {
  check_measure(measure, n);
  const int d = measure.dim();
  const MultiIndexTable low(d, n);
  const MultiIndexTable high(d, 2 * n);
  const std::vector<mpq_class> moments = exact_monomial_moments(measure, high);
  const std::vector<std::size_t> idx = sum_indices(low, high);

  RationalMatrix D(low.size());
  for (std::size_t i = 0; i < low.size(); ++i) {
    for (std::size_t j = 0; j < low.size(); ++j) D(i, j) = moments[idx[i * low.size() + j]];
  }
  return D;
}

RealMatrix moment_matrix(const MeasureSpec& measure, int n) {
  check_measure(measure, n);
  const int d = measure.dim();

  if (measure.kind == MeasureSpec::Kind::kEmpirical) {
    const MultiIndexTable low(d, n);
    const MultiIndexTable high(d, 2 * n);
    const std::vector<std::size_t> idx = sum_indices(low, high);
    std::vector<double> moments(high.size(), 0.0);
    const Eigen::Index N = measure.points.rows();
    for (Eigen::Index row = 0; row < N; ++row) {
      for (std::size_t s = 0; s < high.size(); ++s) {
        double v = 1.0;
        for (int k = 0; k < d; ++k) v *= ipow(measure.points(row, k), high[s][k]);
        moments[s] += v;
      }
    }
    if (measure.normalized) {
      for (double& v : moments) v /= static_cast<double>(N);
    }
    const std::size_t r = low.size();
    RealMatrix D(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) D(i, j) = moments[idx[i * r + j]];
    }
    return D;
  }

  if (measure.kind == MeasureSpec::Kind::kUniformBall && !measure.normalized && d != 1) {
    MeasureSpec probability = measure;
    probability.normalized = true;
    return moment_matrix_exact(probability, n).to_double() * ball_volume(d, measure.radii(0));
  }
  return moment_matrix_exact(measure, n).to_double();
}

namespace {

struct Inertia {
  int negatives = 0;
  bool zero_pivot = false;
};

using BigMatrix = std::vector<BigFloat>;

BigMatrix to_big(const RationalMatrix& D, int bits) {
  const std::size_t n = D.rows();
  BigMatrix out;
  out.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.emplace_back(D(i, j), bits);
  }
  return out;
}

// Negative pivots of the unpivoted LDL^T factorization of D - tI. Only the
// lower triangle is read and updated.
Inertia inertia(const BigMatrix& D, std::size_t n, const BigFloat& t) {
  BigMatrix A = D;
  for (std::size_t i = 0; i < n; ++i) A[i * n + i] -= t;

  Inertia out;
  BigFloat factor(t.precision());
  BigFloat prod(t.precision());
  for (std::size_t k = 0; k < n; ++k) {
    const BigFloat& pivot = A[k * n + k];
    if (pivot.is_zero()) {
      out.zero_pivot = true;
      return out;
    }
    if (pivot.sign() < 0) ++out.negatives;
    for (std::size_t i = k + 1; i < n; ++i) {
      mpfr_div(factor.get(), A[i * n + k].get(), pivot.get(), MPFR_RNDN);
      for (std::size_t j = k + 1; j <= i; ++j) {
        mpfr_mul(prod.get(), factor.get(), A[j * n + k].get(), MPFR_RNDN);
        mpfr_sub(A[i * n + j].get(), A[i * n + j].get(), prod.get(), MPFR_RNDN);
      }
    }
  }
  return out;
}

}  // namespace

int eigenvalues_below(const RationalMatrix& D, const BigFloat& t) {
  const Inertia in = inertia(to_big(D, t.precision()), D.rows(), t);
  if (in.zero_pivot) throw PrecisionExhausted("eigenvalues_below: exact zero pivot", 2 * t.precision());
  return in.negatives;
}

HankelSpectrum smallest_eigenvalue(const RationalMatrix& D, int precision_bits) {
  if (precision_bits < 32) throw std::invalid_argument("smallest_eigenvalue: need at least 32 bits");
  const std::size_t n = D.rows();
  if (n == 0) throw DimensionError("smallest_eigenvalue: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (D(i, j) != D(j, i)) throw DomainError("smallest_eigenvalue: matrix is not symmetric");
    }
  }
  const int bits = precision_bits;
  const BigMatrix A = to_big(D, bits);

  // Gershgorin lower bound and the smallest diagonal entry bracket lambda_min.
  BigFloat g_lo(0.0, bits);
  BigFloat min_diag(0.0, bits);
  BigFloat scale(0.0, bits);
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat radius(0.0, bits);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) radius += abs(A[i * n + j]);
    }
    const BigFloat& diag = A[i * n + i];
    const BigFloat low = diag - radius;
    if (i == 0 || low < g_lo) g_lo = low;
    if (i == 0 || diag < min_diag) min_diag = diag;
    scale = max(scale, abs(diag) + radius);
  }
  const BigFloat one(1.0, bits);
  const BigFloat margin = max(scale, one);

  HankelSpectrum out;
  out.precision_bits = bits;
  out.lower = g_lo - margin;
  out.upper = min_diag + margin;

  const BigFloat rel_tol = ldexp(one, -bits / 4);
  const BigFloat abs_floor = ldexp(scale.is_zero() ? one : scale, -bits / 2);
  const BigFloat half(0.5, bits);
  const int max_iterations = 8 * bits + 64;

  while (true) {
    const BigFloat width = out.upper - out.lower;
    const BigFloat size = max(abs(out.lower), abs(out.upper));
    if (width <= rel_tol * size || width <= abs_floor) {
      out.certified = true;
      break;
    }
    if (out.iterations >= max_iterations) {
      throw PrecisionExhausted("smallest_eigenvalue: bisection did not converge", 2 * bits);
    }
    BigFloat mid = (out.lower + out.upper) * half;
    if (mid == out.lower || mid == out.upper) {
      throw PrecisionExhausted("smallest_eigenvalue: bracket cannot shrink at this precision", 2 * bits);
    }
    Inertia in = inertia(A, n, mid);
    if (in.zero_pivot) {
      mid += ldexp(width, -20);
      in = inertia(A, n, mid);
      if (in.zero_pivot) {
        throw PrecisionExhausted("smallest_eigenvalue: LDL^T breakdown", 2 * bits);
      }
    }
    if (in.negatives > 0) {
      out.upper = mid;
    } else {
      out.lower = mid;
    }
    ++out.iterations;
  }
  out.lambda = (out.lower + out.upper) * half;
  return out;
}

HankelSpectrum smallest_eigenvalue(const RealMatrix& D, int precision_bits) {
  if (D.rows() != D.cols()) throw DimensionError("smallest_eigenvalue: matrix is not square");
  RationalMatrix exact(static_cast<std::size_t>(D.rows()));
  for (Eigen::Index i = 0; i < D.rows(); ++i) {
    for (Eigen::Index j = 0; j < D.cols(); ++j) exact(i, j) = mpq_class(D(i, j));
  }
  return smallest_eigenvalue(exact, precision_bits);
}

HankelSpectrum moment_spectrum(const MeasureSpec& measure, int n, int precision_bits) {
  HankelSpectrum s = smallest_eigenvalue(moment_matrix_exact(measure, n), precision_bits);
  s.order = n;
  return s;
}

double sigma(double a, double r) {
  if (!(r > 0.0)) throw DomainError("sigma: r must be positive");
  const double abs_a = std::abs(a);
  if (abs_a + a * a - r * r >= 0.0) {
    const double s = (abs_a + 1.0) / r;
    return s + std::sqrt(std::max(0.0, s * s - 1.0));
  }
  const double inv = 1.0 / (r * r - a * a);
  return std::sqrt(inv + 1.0) + std::sqrt(inv);
}

namespace {

HankelSpectrum lebesgue_spectrum(double a, double r, int n, int& bits) {
  const MeasureSpec weight = MeasureSpec::uniform_box(RealVector::Constant(1, a), RealVector::Constant(1, r), false);
  const RationalMatrix D = moment_matrix_exact(weight, n);
  constexpr int kMaxBits = 1 << 14;
  while (true) {
    try {
      HankelSpectrum s = smallest_eigenvalue(D, bits);
      s.order = n;
      return s;
    } catch (const PrecisionExhausted& e) {
      if (bits >= kMaxBits) throw;
      bits = std::min(kMaxBits, std::max(e.suggested_bits(), 2 * bits));
    }
  }
}

}  // namespace

std::vector<DecayRow> decay_rate_check(double a, double r, int n_max, int precision_bits) {
  if (n_max < 0) throw std::invalid_argument("decay_rate_check: negative n_max");
  const double log_sigma = std::log(sigma(a, r));
  std::vector<DecayRow> rows;
  rows.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    int bits = precision_bits;
    const HankelSpectrum s = lebesgue_spectrum(a, r, n, bits);
    if (s.lambda.sign() <= 0) throw SpectrumError("decay_rate_check: nonpositive Hankel eigenvalue");
    DecayRow row;
    row.n = n;
    row.lambda = s.value();
    row.rate = (-log(s.lambda)).to_double() / (2.0 * n + 2.0);
    row.log_sigma = log_sigma;
    row.precision_bits = bits;
    row.certified = s.certified;
    rows.push_back(row);
  }
  return rows;
}

double rectangle_lower_bound(const RealVector& p, const RealVector& radii, int n, int precision_bits) {
  if (p.size() < 1 || p.size() != radii.size()) {
    throw DimensionError("rectangle_lower_bound: p and radii must have the same positive length");
  }
  BigFloat product(1.0, precision_bits);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    int bits = precision_bits;
    product *= lebesgue_spectrum(p(i), radii(i), n, bits).lambda;
  }
  return product.to_double();
}

std::uint64_t sample_complexity(int n, int d, double Lambda_n, double L_mu, double delta) {
  if (!(Lambda_n > 0.0)) throw DomainError("sample_complexity: Lambda_n must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("sample_complexity: delta must lie in (0, 1)");
  if (!(L_mu > 0.0)) throw DomainError("sample_complexity: L_mu must be positive");
  const long double r = static_cast<long double>(jet_dimension(d, n));
  const long double value = std::pow(static_cast<long double>(L_mu), 4.0L * n) * r * r /
                            (static_cast<long double>(Lambda_n) * Lambda_n) * 4.0L *
                            std::log(2.0L / static_cast<long double>(delta));
  if (!std::isfinite(static_cast<double>(value)) || value >= 1.8e19L) {
    throw DomainError("sample_complexity: required sample count overflows");
  }
  return static_cast<std::uint64_t>(std::ceil(value));
}

}  // namespace jetflow

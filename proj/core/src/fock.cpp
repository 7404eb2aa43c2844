// Copyright 2026 The twinbeam Authors
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

#include "twinbeam/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twinbeam {

namespace {

void check_eps(double eps_trunc) {
  if (!(eps_trunc > 0.0 && eps_trunc < 1.0)) {
    throw ParamError("eps_trunc must lie in (0, 1)");
  }
}

}  // namespace

Truncation choose_truncation(const TwinBeamParams& params, double eps_trunc) {
  const auto [bp, bs, bi] = validate(params);
  check_eps(eps_trunc);
  const double t_max = bp + std::max(bs, bi);
  const double q = t_max / (1.0 + t_max);
  Truncation t;
  double tail = q;  // q^(n_max + 1)
  while (!(tail < eps_trunc)) {
    if (t.n_max == kMaxTruncation) {
      t.capped = true;
      break;
    }
    ++t.n_max;
    tail *= q;
  }
  return t;
}

Truncation choose_negativity_truncation(const TwinBeamParams& params,
                                        double eps_trunc) {
  const double bp = validate(params).b_p;
  check_eps(eps_trunc);
  const double q = bp / (1.0 + bp);
  const double root_q = std::sqrt(q);
  const double scale = 1.0 / ((1.0 + bp) * (1.0 - root_q) * (1.0 - root_q));
  const double target = 0.25 * std::sqrt(eps_trunc);
  Truncation t;
  double tail = scale * root_q;  // scale * q^((n_max + 1) / 2)
  while (!(tail < target)) {
    if (t.n_max == kMaxTruncation) {
      t.capped = true;
      break;
    }
    ++t.n_max;
    tail *= root_q;
  }
  return t;
}

Truncation oracle_truncation(const TwinBeamParams& params, double eps_trunc) {
  // Both modes leak probability, so split the budget between them.
  const Truncation a = choose_truncation(params, 0.5 * eps_trunc);
  const Truncation b = choose_negativity_truncation(params, eps_trunc);
  return Truncation{std::max(a.n_max, b.n_max), a.capped || b.capped};
}

FockDensityMatrix::FockDensityMatrix(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw ParamError("n_max must be ≥ 0");
  const auto side = static_cast<std::size_t>(n_max) + 1;
  offsets_.resize(side * side);
  std::size_t offset = 0;
  for (int i = 0; i <= n_max; ++i) {
    for (int j = 0; j <= n_max; ++j) {
      offsets_[static_cast<std::size_t>(i) * side + j] = offset;
      offset += static_cast<std::size_t>(n_max - std::max(i, j) + 1);
    }
  }
  values_.assign(offset, 0.0);
}

double FockDensityMatrix::element(int i, int j, int k, int l) const noexcept {
  const auto in_range = [this](int x) { return x >= 0 && x <= n_max_; };
  if (!in_range(i) || !in_range(j) || !in_range(k) || !in_range(l)) return 0.0;
  if (k - i != l - j) return 0.0;
  return k >= i ? at(i, j, k - i) : at(k, l, i - k);
}

double FockDensityMatrix::trace() const noexcept {
  double t = 0.0;
  for (int i = 0; i <= n_max_; ++i) {
    for (int j = 0; j <= n_max_; ++j) t += at(i, j, 0);
  }
  return t;
}

namespace {

// e * log(x) with the convention x^0 = 1 even for x = 0.
double log_power(int e, double log_x) { return e == 0 ? 0.0 : e * log_x; }

double safe_log(double x) {
  return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

}  // namespace

FockDensityMatrix build_density_matrix(const TwinBeamParams& params, int n_max) {
  const GaussianMoments g = derive_moments(params);
  FockDensityMatrix rho(n_max);

  // Running table ln k! for k <= 2 n_max + 1.
  std::vector<double> log_fact(2 * static_cast<std::size_t>(n_max) + 2, 0.0);
  for (std::size_t k = 1; k < log_fact.size(); ++k) {
    log_fact[k] = log_fact[k - 1] + std::log(static_cast<double>(k));
  }
  const auto log_binom = [&](int n, int k) {
    return log_fact[n] - log_fact[k] - log_fact[n - k];
  };

  // X_a = 1 - bt_a / kt is non-negative for every physical point; clamp
  // rounding noise around zero.
  const double x1 = std::max(0.0, 1.0 - g.bt1 / g.kt);
  const double x2 = std::max(0.0, 1.0 - g.bt2 / g.kt);
  const double log_x1 = safe_log(x1);
  const double log_x2 = safe_log(x2);
  const double log_r = safe_log(g.d12 / g.kt);
  const double log_prefactor = -std::log(g.kt);
  const double log_limit = std::log(1e300);

  for (int i = 0; i <= n_max; ++i) {
    for (int j = 0; j <= n_max; ++j) {
      const int d_max = n_max - std::max(i, j);
      for (int d = 0; d <= d_max; ++d) {
        const double log_ratio = 0.5 * (log_fact[i + d] - log_fact[i] +
                                         log_fact[j + d] - log_fact[j]);
        double sum = 0.0;
        for (int m = 0; m <= std::min(i, j); ++m) {
          const double log_term = log_prefactor + log_ratio + log_binom(i, m) +
                                  log_binom(j, m) + log_fact[m] - log_fact[m + d] +
                                  log_power(j - m, log_x1) + log_power(i - m, log_x2) +
                                  log_power(d + 2 * m, log_r);
          if (log_term > log_limit) {
            throw TruncationError("build_density_matrix: term exceeds 1e300 at (" +
                                  std::to_string(i) + ", " + std::to_string(j) +
                                  ", " + std::to_string(d) + "); truncation too large");
          }
          sum += std::exp(log_term);
        }
        if (!std::isfinite(sum)) {
          throw TruncationError("build_density_matrix: non-finite element");
        }
        rho.at(i, j, d) = sum;
      }
    }
  }
  return rho;
}

std::vector<double> partial_trace_diagonal(const FockDensityMatrix& rho, Field field) {
  const int n = rho.n_max();
  std::vector<double> p(static_cast<std::size_t>(n) + 1, 0.0);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      p[a] += field == Field::kSignal ? rho.at(a, b, 0) : rho.at(b, a, 0);
    }
  }
  return p;
}

std::vector<double> reduced_diagonal_closed_form(const TwinBeamParams& params,
                                                 int n_max, Field field) {
  const GaussianMoments g = derive_moments(params);
  if (n_max < 0) throw ParamError("n_max must be ≥ 0");
  const double own = field == Field::kSignal ? g.bt1 : g.bt2;
  const double other = field == Field::kSignal ? g.bt2 : g.bt1;
  const double ratio = (1.0 - other / g.kt) + g.d12 * g.d12 / (g.kt * own);
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  double value = 1.0 / own;
  for (auto& pj : p) {
    pj = value;
    value *= ratio;
  }
  return p;
}

std::vector<double> reduced_diagonal(const TwinBeamParams& params, int n_max,
                                     Field field) {
  const auto closed = reduced_diagonal_closed_form(params, n_max, field);
  // The partial trace misses the other mode's photons beyond the truncation,
  // so it is taken over a matrix large enough to make that tail negligible.
  const int n_trace = std::max(n_max, choose_truncation(params, 1e-11).n_max);
  const auto traced = partial_trace_diagonal(build_density_matrix(params, n_trace), field);
  for (std::size_t j = 0; j < closed.size(); ++j) {
    if (std::abs(closed[j] - traced[j]) > 1e-10) {
      throw std::logic_error("reduced_diagonal: partial trace disagrees with closed form at j = " +
                             std::to_string(j));
    }
  }
  return closed;
}

PTBlock pt_block(const FockDensityMatrix& rho, int m) {
  const int n = rho.n_max();
  if (m < 0 || m > 2 * n) throw std::out_of_range("pt_block: block index out of range");
  PTBlock block;
  block.m = m;
  block.k_min = std::max(0, m - n);
  const int k_max = std::min(m, n);
  const auto dim = static_cast<std::size_t>(k_max - block.k_min + 1);
  block.entries = SquareMatrix(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    const int k = block.k_min + static_cast<int>(a);
    for (std::size_t b = a; b < dim; ++b) {
      const int l = block.k_min + static_cast<int>(b);
      // <k, m-k| rho^G |l, m-l> = <k, m-l| rho |l, m-k>, stored with d = l - k.
      const double v = rho.at(k, m - l, l - k);
      block.entries(a, b) = v;
      block.entries(b, a) = v;
    }
  }
  return block;
}

std::vector<PTBlock> pt_blocks(const FockDensityMatrix& rho) {
  std::vector<PTBlock> blocks;
  blocks.reserve(2 * static_cast<std::size_t>(rho.n_max()) + 1);
  for (int m = 0; m <= 2 * rho.n_max(); ++m) blocks.push_back(pt_block(rho, m));
  return blocks;
}

std::vector<double> block_eigenvalues(const PTBlock& block) {
  return jacobi_eigenvalues(block.entries);
}

NegativityDistribution negativity_distribution(const FockDensityMatrix& rho) {
  NegativityDistribution dist;
  const int blocks = 2 * rho.n_max() + 1;
  dist.d_n.assign(static_cast<std::size_t>(blocks), 0.0);
  for (int m = 0; m < blocks; ++m) {
    double neg = 0.0;
    for (double ev : block_eigenvalues(pt_block(rho, m))) {
      if (ev < 0.0) neg -= ev;
    }
    dist.d_n[m] = neg;
  }
  for (double v : dist.d_n) dist.total += v;
  return dist;
}

NegativityDistribution negativity_distribution(const TwinBeamParams& params, int n_max) {
  return negativity_distribution(build_density_matrix(params, n_max));
}

double negativity_numeric(const FockDensityMatrix& rho) {
  return negativity_distribution(rho).total;
}

double negativity_numeric(const TwinBeamParams& params, int n_max) {
  return negativity_numeric(build_density_matrix(params, n_max));
}

double participation_numeric(const FockDensityMatrix& rho, Field field) {
  double purity = 0.0;
  for (double p : partial_trace_diagonal(rho, field)) purity += p * p;
  return 1.0 / purity;
}

double participation_numeric(const TwinBeamParams& params, int n_max, Field field) {
  return participation_numeric(build_density_matrix(params, n_max), field);
}

double entropy_numeric(const FockDensityMatrix& rho, Field field) {
  double s = 0.0;
  for (double p : partial_trace_diagonal(rho, field)) {
    if (p > 0.0) s -= p * std::log(p);
  }
  return s;
}

double entropy_numeric(const TwinBeamParams& params, int n_max, Field field) {
  return entropy_numeric(build_density_matrix(params, n_max), field);
}

PositivityReport positivity_check(const FockDensityMatrix& rho) {
  const int n = rho.n_max();
  PositivityReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (int diff = -n; diff <= n; ++diff) {
    // Basis |i, i - diff> with both indices inside the truncation.
    const int i_min = std::max(0, diff);
    const int i_max = std::min(n, n + diff);
    const auto dim = static_cast<std::size_t>(i_max - i_min + 1);
    SquareMatrix block(dim);
    for (std::size_t a = 0; a < dim; ++a) {
      const int i = i_min + static_cast<int>(a);
      for (std::size_t b = a; b < dim; ++b) {
        const double v = rho.at(i, i - diff, static_cast<int>(b - a));
        block(a, b) = v;
        block(b, a) = v;
      }
    }
    const auto values = jacobi_eigenvalues(std::move(block));
    report.min_eigenvalue = std::min(report.min_eigenvalue, values.front());
  }
  report.ok = report.min_eigenvalue >= -kPositivityTolerance;
  return report;
}

std::vector<double> product_form_spectrum(const TwinBeamParams& params, int m) {
  const GaussianMoments g = derive_moments(params);
  if (m < 0) throw ParamError("block index must be ≥ 0");
  const double root = std::sqrt((g.bt2 - g.bt1) * (g.bt2 - g.bt1) + 4.0 * g.d12 * g.d12);
  const double nu_plus = 1.0 - (g.bt1 + g.bt2 - root) / (2.0 * g.kt);
  const double nu_minus = 1.0 - (g.bt1 + g.bt2 + root) / (2.0 * g.kt);
  std::vector<double> spectrum(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    spectrum[k] = std::pow(nu_plus, m - k) * std::pow(nu_minus, k);
  }
  return spectrum;
}

double best_fit_scale(std::span<const double> numeric, std::span<const double> product) {
  if (numeric.size() != product.size()) {
    throw std::invalid_argument("best_fit_scale: spectra differ in length");
  }
  std::vector<double> a(numeric.begin(), numeric.end());
  std::vector<double> b(product.begin(), product.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double ab = 0.0;
  double bb = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ab += a[k] * b[k];
    bb += b[k] * b[k];
  }
  return bb == 0.0 ? 0.0 : ab / bb;
}

OracleResult run_oracle(const TwinBeamParams& params, const OracleOptions& options) {
  OracleResult r;
  r.truncation = options.n_max ? Truncation{*options.n_max, false}
                               : oracle_truncation(params, options.eps_trunc);
  const FockDensityMatrix rho = build_density_matrix(params, r.truncation.n_max);
  r.trace_deficit = rho.trace_deficit();
  r.distribution = negativity_distribution(rho);
  r.negativity = r.distribution.total;
  r.r_s = participation_numeric(rho, Field::kSignal);
  r.r_i = participation_numeric(rho, Field::kIdler);
  r.s_s = entropy_numeric(rho, Field::kSignal);
  r.s_i = entropy_numeric(rho, Field::kIdler);
  r.min_eigenvalue = options.check_positivity
                         ? positivity_check(rho).min_eigenvalue
                         : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace twinbeam

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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "twinbeam/jacobi.hpp"
#include "twinbeam/params.hpp"

namespace twinbeam {

inline constexpr int kMaxTruncation = 200;
inline constexpr double kDefaultEpsTrunc = 1e-12;

/// Raised when the Fock-space construction leaves its safe numeric range.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Truncation {
  int n_max = 0;
  bool capped = false;  ///< the kMaxTruncation cap was hit; results are lower bounds
};

/// Smallest n_max with q^(n_max + 1) < eps_trunc, q = T / (1 + T) and
/// T = b_p + max(b_s, b_i). The reduced photon-number distributions are
/// geometric with ratio at most q, so this bounds the probability lost per
/// mode.
Truncation choose_truncation(const TwinBeamParams& params,
                             double eps_trunc = kDefaultEpsTrunc);

/// Truncation for partial-transpose quantities. The neglected negativity is
/// an amplitude-level tail, estimated by q^((n+1)/2) / ((1 + b_p)(1 - sqrt q)^2)
/// with q = b_p / (1 + b_p). The estimate is tight for noiseless beams; noise
/// only speeds convergence. Picks the smallest n_max with it below
/// sqrt(eps_trunc) / 4.
Truncation choose_negativity_truncation(const TwinBeamParams& params,
                                        double eps_trunc = kDefaultEpsTrunc);

/// Larger of choose_truncation(params, eps_trunc / 2) and
/// choose_negativity_truncation(params, eps_trunc), so the total trace
/// deficit stays below eps_trunc. This is what the oracle uses by default.
Truncation oracle_truncation(const TwinBeamParams& params,
                             double eps_trunc = kDefaultEpsTrunc);

/// Two-mode density matrix truncated to n <= n_max photons per mode.
///
/// Only elements rho_{i j, i+d j+d} with d >= 0 are non-zero above the
/// diagonal; they are real, and the d < 0 part follows from symmetry.
class FockDensityMatrix {
 public:
  explicit FockDensityMatrix(int n_max);

  int n_max() const noexcept { return n_max_; }

  /// rho_{i j, i+d j+d}; requires max(i, j) + d <= n_max.
  double at(int i, int j, int d) const noexcept { return values_[index(i, j, d)]; }
  double& at(int i, int j, int d) noexcept { return values_[index(i, j, d)]; }

  /// Arbitrary element <i j| rho |k l>; zero off the stored pattern or
  /// outside the truncation.
  double element(int i, int j, int k, int l) const noexcept;

  double trace() const noexcept;
  double trace_deficit() const noexcept { return 1.0 - trace(); }

  std::size_t stored_count() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::size_t index(int i, int j, int d) const noexcept {
    return offsets_[static_cast<std::size_t>(i) * (n_max_ + 1) + j] + d;
  }

  int n_max_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<double> values_;
};

/// Evaluates every stored element from the three-index closed form. The
/// inner sum runs over non-negative terms accumulated in log space from a
/// running log-factorial table. Throws TruncationError if a term exceeds
/// 1e300.
FockDensityMatrix build_density_matrix(const TwinBeamParams& params, int n_max);

/// Reduced photon-number distribution of one field, by partial trace of rho.
std::vector<double> partial_trace_diagonal(const FockDensityMatrix& rho, Field field);

/// Closed-form geometric reduced distribution for j = 0 .. n_max.
std::vector<double> reduced_diagonal_closed_form(const TwinBeamParams& params,
                                                 int n_max, Field field);

/// Closed-form reduced distribution, after checking it against the partial
/// trace of a built matrix to 1e-10 per element (std::logic_error if not).
/// The check matrix is truncated at no less than choose_truncation(params,
/// 1e-11) so the traced-out tail stays below the tolerance.
std::vector<double> reduced_diagonal(const TwinBeamParams& params, int n_max,
                                     Field field = Field::kSignal);

/// One block of the partial transpose (on the idler) of rho.
///
/// Block m collects the states |k>_s |m-k>_i. Within the truncation only
/// k in [k_min, k_min + dim) survive; for m <= n_max that is all m + 1 of
/// them.
struct PTBlock {
  int m = 0;
  int k_min = 0;
  SquareMatrix entries;

  int dim() const noexcept { return static_cast<int>(entries.dim()); }
};

PTBlock pt_block(const FockDensityMatrix& rho, int m);

/// Blocks m = 0 .. 2 n_max.
std::vector<PTBlock> pt_blocks(const FockDensityMatrix& rho);

/// Ascending eigenvalues of a block via cyclic Jacobi.
std::vector<double> block_eigenvalues(const PTBlock& block);

struct NegativityDistribution {
  std::vector<double> d_n;  ///< d_n[m]: summed |negative eigenvalues| of block m
  double total = 0.0;
};

NegativityDistribution negativity_distribution(const FockDensityMatrix& rho);
NegativityDistribution negativity_distribution(const TwinBeamParams& params, int n_max);

/// Sum of |negative eigenvalues| over all partial-transpose blocks.
double negativity_numeric(const FockDensityMatrix& rho);
double negativity_numeric(const TwinBeamParams& params, int n_max);

/// 1 / sum_j p_j^2 over the partial-trace distribution.
double participation_numeric(const FockDensityMatrix& rho, Field field);
double participation_numeric(const TwinBeamParams& params, int n_max, Field field);

/// -sum_j p_j ln p_j over the partial-trace distribution.
double entropy_numeric(const FockDensityMatrix& rho, Field field);
double entropy_numeric(const TwinBeamParams& params, int n_max, Field field);

inline constexpr double kPositivityTolerance = 1e-10;

struct PositivityReport {
  double min_eigenvalue = 0.0;
  bool ok = true;  ///< min_eigenvalue >= -kPositivityTolerance
};

/// Smallest eigenvalue of rho itself. rho is block diagonal in the photon
/// number difference i - j, and each block is diagonalized separately.
PositivityReport positivity_check(const FockDensityMatrix& rho);

/// nu_+^(m-k) nu_-^k for k = 0 .. m, built from the two eigenvalues of the
/// 2x2 block. This product form is NOT normalized to the actual block
/// spectrum and is only a diagnostic.
std::vector<double> product_form_spectrum(const TwinBeamParams& params, int m);

/// Least-squares scalar s minimizing |numeric - s * product| after sorting
/// both lists ascending. Returns 0 when product is identically zero.
double best_fit_scale(std::span<const double> numeric, std::span<const double> product);

/// Everything the oracle produces for one parameter point.
struct OracleResult {
  Truncation truncation;
  double trace_deficit = 0.0;
  double negativity = 0.0;
  double r_s = 1.0;
  double r_i = 1.0;
  double s_s = 0.0;
  double s_i = 0.0;
  double min_eigenvalue = 0.0;  ///< NaN when positivity was not checked
  NegativityDistribution distribution;
};

struct OracleOptions {
  double eps_trunc = kDefaultEpsTrunc;
  std::optional<int> n_max = std::nullopt;  ///< replaces oracle_truncation when set
  bool check_positivity = true;
};

/// Builds rho once and evaluates all numeric quantities.
OracleResult run_oracle(const TwinBeamParams& params, const OracleOptions& options = {});

}  // namespace twinbeam

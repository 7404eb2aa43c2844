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
#include <span>
#include <stdexcept>
#include <vector>

namespace twinbeam {

/// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim, double fill = 0.0)
      : dim_(dim), data_(dim * dim, fill) {}

  static SquareMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  double& operator()(std::size_t row, std::size_t col) noexcept {
    return data_[row * dim_ + col];
  }
  double operator()(std::size_t row, std::size_t col) const noexcept {
    return data_[row * dim_ + col];
  }

  std::span<const double> data() const noexcept { return data_; }

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  /// Frobenius norm of the strictly off-diagonal part.
  double off_diagonal_norm() const noexcept;
  bool is_symmetric() const noexcept;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

/// Raised when the Jacobi iteration exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  /// Converged once off-diagonal norm < tolerance * (||A||_F + 1).
  double tolerance = 1e-13;
  int max_sweeps = 100;
  bool compute_vectors = false;
};

struct SymmetricEigen {
  std::vector<double> values;  ///< ascending
  SquareMatrix vectors;        ///< column k pairs with values[k]; empty unless requested
  int sweeps = 0;
};

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.
///
/// Each sweep visits every (p, q) pair with p < q in row order and applies a
/// rotation that zeroes a(p, q). Only the upper triangle of `matrix` is read.
SymmetricEigen jacobi_eigen(SquareMatrix matrix, const JacobiOptions& options = {});

/// Eigenvalues only, ascending.
std::vector<double> jacobi_eigenvalues(SquareMatrix matrix);

}  // namespace twinbeam

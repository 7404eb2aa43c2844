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

#include "twinbeam/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace twinbeam {

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  SquareMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double SquareMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SquareMatrix::frobenius_norm() const noexcept {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

double SquareMatrix::off_diagonal_norm() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j) s += (*this)(i, j) * (*this)(i, j);
    }
  }
  return std::sqrt(s);
}

bool SquareMatrix::is_symmetric() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

namespace {

void rotate(SquareMatrix& a, SquareMatrix* v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t = 0.0;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double new_rp = arp - s * (arq + tau * arp);
    const double new_rq = arq + s * (arp - tau * arq);
    a(r, p) = new_rp;
    a(p, r) = new_rp;
    a(r, q) = new_rq;
    a(q, r) = new_rq;
  }
  if (v != nullptr) {
    for (std::size_t r = 0; r < n; ++r) {
      const double vrp = (*v)(r, p);
      const double vrq = (*v)(r, q);
      (*v)(r, p) = vrp - s * (vrq + tau * vrp);
      (*v)(r, q) = vrq + s * (vrp - tau * vrq);
    }
  }
}

}  // namespace

SymmetricEigen jacobi_eigen(SquareMatrix matrix, const JacobiOptions& options) {
  const std::size_t n = matrix.dim();
  // Mirror the upper triangle so the rotations can work on full rows.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) matrix(j, i) = matrix(i, j);
  }

  SymmetricEigen result;
  SquareMatrix vectors;
  if (options.compute_vectors) vectors = SquareMatrix::identity(n);
  SquareMatrix* v = options.compute_vectors ? &vectors : nullptr;

  const double threshold = options.tolerance * (matrix.frobenius_norm() + 1.0);
  bool converged = matrix.off_diagonal_norm() < threshold;
  int sweep = 0;
  while (!converged && sweep < options.max_sweeps) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = matrix(p, q);
        if (apq == 0.0) continue;
        // Past the first sweeps, drop elements too small to move either
        // diagonal entry.
        const double small = 100.0 * std::abs(apq);
        if (sweep > 4 && std::abs(matrix(p, p)) + small == std::abs(matrix(p, p)) &&
            std::abs(matrix(q, q)) + small == std::abs(matrix(q, q))) {
          matrix(p, q) = 0.0;
          matrix(q, p) = 0.0;
          continue;
        }
        rotate(matrix, v, p, q);
      }
    }
    converged = matrix.off_diagonal_norm() < threshold;
  }
  if (!converged) {
    throw ConvergenceError("jacobi_eigen: no convergence after " +
                           std::to_string(options.max_sweeps) + " sweeps (dim " +
                           std::to_string(n) + ")");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return matrix(a, a) < matrix(b, b);
  });
  result.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) result.values[k] = matrix(order[k], order[k]);
  if (v != nullptr) {
    result.vectors = SquareMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) result.vectors(r, k) = vectors(r, order[k]);
    }
  }
  result.sweeps = sweep;
  return result;
}

std::vector<double> jacobi_eigenvalues(SquareMatrix matrix) {
  return jacobi_eigen(std::move(matrix)).values;
}

}  // namespace twinbeam

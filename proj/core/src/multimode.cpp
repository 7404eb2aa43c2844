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

#include "twinbeam/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twinbeam/analytic.hpp"
#include "twinbeam/fock.hpp"
#include "twinbeam/jacobi.hpp"

namespace twinbeam {

PerModeQuantities per_mode_quantities(const MultimodeSpec& spec) {
  if (spec.m < 1) throw ParamError("m must be ≥ 1");
  const TwinBeamParams p = validate(spec.params);
  const double n = negativity(p).value;
  const double modes = spec.m;

  PerModeQuantities q;
  q.log_negativity = std::log1p(2.0 * n);
  q.log_r_s = std::log(participation_ratio(p, Field::kSignal));
  q.log_r_i = std::log(participation_ratio(p, Field::kIdler));
  q.s_s = entropy(p, Field::kSignal);
  q.s_i = entropy(p, Field::kIdler);
  q.tau = nonclassical_depth(p);

  q.log_negativity_total = modes * q.log_negativity;
  q.log_r_s_total = modes * q.log_r_s;
  q.log_r_i_total = modes * q.log_r_i;
  q.s_s_total = modes * q.s_s;
  q.s_i_total = modes * q.s_i;
  q.trace_norm = std::pow(1.0 + 2.0 * n, modes);
  q.negativity_of_product = 0.5 * (q.trace_norm - 1.0);
  return q;
}

ExperimentalBeamSpec validate(const ExperimentalBeamSpec& spec) {
  if (spec.m_p < 0 || spec.m_s < 0 || spec.m_i < 0) {
    throw ParamError("mode counts must be ≥ 0");
  }
  if (spec.m_p + spec.m_s + spec.m_i < 1) {
    throw ParamError("at least one mode count must be positive");
  }
  validate(TwinBeamParams{spec.b_p, spec.b_s, spec.b_i});
  return spec;
}

ExperimentalTau tau_experimental(const ExperimentalBeamSpec& spec) {
  const ExperimentalBeamSpec s = validate(spec);
  const double tau = nonclassical_depth(TwinBeamParams{s.b_p, 0.0, 0.0});
  ExperimentalTau t;
  t.max_form = s.m_p > 0 ? tau : 0.0;
  t.sum_form = s.m_p * tau;
  return t;
}

double tau_w(const ExperimentalBeamSpec& spec) {
  const ExperimentalBeamSpec s = validate(spec);
  const double weight = s.m_s + s.m_i + 2.0 * s.m_p;
  const double strength =
      2.0 * s.m_p * s.b_p - (s.m_s * s.b_s * s.b_s + s.m_i * s.b_i * s.b_i);
  const double beta = (s.m_s * s.b_s + s.m_i * s.b_i + 2.0 * s.m_p * s.b_p) / weight;
  const double gamma = -strength / weight;

  double result = 0.0;
  const double discriminant = beta * beta - gamma;
  if (discriminant < 0.0) {
    // Complex-conjugate roots; report minus their common modulus.
    result = -std::sqrt(gamma);
  } else if (beta > 0.0) {
    // sqrt(beta^2 - gamma) - beta without cancellation.
    result = -gamma / (std::sqrt(discriminant) + beta);
  }

  const bool positive = result > 0.0;
  if (positive != (strength > 0.0) && std::abs(result) > 1e-12) {
    throw std::logic_error("tau_w: sign disagrees with the intensity criterion");
  }
  return result;
}

DimensionalitySplit dimensionality_split(const ExperimentalBeamSpec& spec) {
  const ExperimentalBeamSpec s = validate(spec);
  const auto log_r = [](double b) { return std::log1p(2.0 * b); };
  DimensionalitySplit d;
  d.r_log_paired = s.m_p * log_r(s.b_p);
  d.r_log_noise = s.m_s * log_r(s.b_s) + s.m_i * log_r(s.b_i);
  d.s_paired = s.m_p * thermal_entropy(s.b_p);
  d.s_noise = s.m_s * thermal_entropy(s.b_s) + s.m_i * thermal_entropy(s.b_i);
  return d;
}

double two_pair_pt_trace_norm(const TwinBeamParams& params, int n_max) {
  const FockDensityMatrix rho = build_density_matrix(params, n_max);
  const std::vector<PTBlock> blocks = pt_blocks(rho);

  // (rho (x) rho)^G = rho^G (x) rho^G is block diagonal in the pair of block
  // indices; each such block is the Kronecker product of two single-pair
  // blocks, assembled and diagonalized as a whole.
  double norm = 0.0;
  for (const PTBlock& first : blocks) {
    for (const PTBlock& second : blocks) {
      const auto d1 = static_cast<std::size_t>(first.dim());
      const auto d2 = static_cast<std::size_t>(second.dim());
      SquareMatrix joint(d1 * d2);
      for (std::size_t a1 = 0; a1 < d1; ++a1) {
        for (std::size_t a2 = 0; a2 < d2; ++a2) {
          for (std::size_t b1 = 0; b1 < d1; ++b1) {
            for (std::size_t b2 = 0; b2 < d2; ++b2) {
              joint(a1 * d2 + a2, b1 * d2 + b2) =
                  first.entries(a1, b1) * second.entries(a2, b2);
            }
          }
        }
      }
      for (double ev : jacobi_eigenvalues(std::move(joint))) norm += std::abs(ev);
    }
  }
  return norm;
}

}  // namespace twinbeam

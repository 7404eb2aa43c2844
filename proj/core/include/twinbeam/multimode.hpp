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

#include "twinbeam/params.hpp"

namespace twinbeam {

/// M independent, identical single-mode twin beams.
struct MultimodeSpec {
  int m = 1;
  TwinBeamParams params;
};

/// Per-mode logarithmic quantities of an M-mode beam, plus their M-mode
/// aggregates. Everything per mode is independent of M.
struct PerModeQuantities {
  double log_negativity = 0.0;  ///< ln(1 + 2N)
  double log_r_s = 0.0;         ///< ln R_s
  double log_r_i = 0.0;         ///< ln R_i
  double s_s = 0.0;
  double s_i = 0.0;
  double tau = 0.0;

  double log_negativity_total = 0.0;  ///< M ln(1 + 2N)
  double log_r_s_total = 0.0;
  double log_r_i_total = 0.0;
  double s_s_total = 0.0;
  double s_i_total = 0.0;
  /// (1 + 2N)^M: the trace norm of the partially transposed M-mode state.
  double trace_norm = 1.0;
  /// ((1 + 2N)^M - 1) / 2: the negativity of the M-mode state proper.
  double negativity_of_product = 0.0;
};

PerModeQuantities per_mode_quantities(const MultimodeSpec& spec);

/// Three-component beam: m_p ideal paired modes with b_p pairs each, plus
/// m_s signal-only and m_i idler-only thermal noise modes.
struct ExperimentalBeamSpec {
  int m_p = 1;
  int m_s = 0;
  int m_i = 0;
  double b_p = 0.0;
  double b_s = 0.0;
  double b_i = 0.0;
};

/// Throws ParamError unless all counts are >= 0 with at least one positive
/// and all b are finite and >= 0.
ExperimentalBeamSpec validate(const ExperimentalBeamSpec& spec);

struct ExperimentalTau {
  double max_form = 0.0;  ///< largest single-mode depth
  double sum_form = 0.0;  ///< summed over paired modes; the default in reports
};

/// Only paired modes contribute; thermal noise modes have tau <= 0.
ExperimentalTau tau_experimental(const ExperimentalBeamSpec& spec);

/// Nonclassical intensity depth sqrt(beta^2 - gamma) - beta.
///
/// tau_W is the larger root of t^2 + 2 beta t + gamma = 0. Noise-dominated
/// beams can make beta^2 - gamma negative; the roots are then complex with
/// modulus sqrt(gamma), and tau_W = -sqrt(gamma) < 0 is returned. This is
/// continuous at beta^2 = gamma, keeps the sign of tau_W equal to the sign
/// of 2 m_p b_p - m_s b_s^2 - m_i b_i^2, and keeps tau_W monotone in every b.
double tau_w(const ExperimentalBeamSpec& spec);

struct DimensionalitySplit {
  double r_log_paired = 0.0;
  double r_log_noise = 0.0;
  double s_paired = 0.0;
  double s_noise = 0.0;
};

DimensionalitySplit dimensionality_split(const ExperimentalBeamSpec& spec);

/// Trace norm of the partial transpose (on both idler modes) of the
/// two-pair product state rho (x) rho, computed by diagonalizing every block
/// of the four-mode operator directly. Each pair is truncated at n_max.
double two_pair_pt_trace_norm(const TwinBeamParams& params, int n_max);

}  // namespace twinbeam

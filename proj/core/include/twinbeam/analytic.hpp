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

#include <optional>
#include <vector>

#include "twinbeam/params.hpp"

namespace twinbeam {

/// Thrown when a closed-form map is evaluated outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Closed-form negativity. `raw` is the formula value, which turns negative
/// for separable beams; `value` is the negativity proper, max(raw, 0).
struct Negativity {
  double raw = 0.0;
  double value = 0.0;
};

/// Every closed-form quantity for one parameter point.
struct QuantReport {
  double negativity = 0.0;
  double raw_negativity = 0.0;
  double tau = 0.0;  ///< unclamped; negative values measure classicality
  double k_ent = 1.0;
  double k_ent_mod = 1.0;
  double r_s = 1.0;
  double r_i = 1.0;
  double r_ent = 1.0;
  double s_s = 0.0;  ///< nats
  double s_i = 0.0;  ///< nats
  bool entangled = false;
};

// ---- entanglement -------------------------------------------------------

/// Negativity written directly in terms of b_p, b_s and b_i.
Negativity negativity(const TwinBeamParams& params);

/// Same quantity assembled from the moments bt1, bt2, kt and d12, i.e. from
/// the geometric sum over the partial-transpose block spectra. Returns the
/// raw (unclamped) value.
double negativity_block_form(const TwinBeamParams& params);

/// Strict separability test b_p (1 - b_s - b_i) > b_s b_i. Points exactly on
/// the boundary are classified as not entangled.
bool is_entangled(const TwinBeamParams& params);

/// Smallest pair number above which a beam with the given noise becomes
/// entangled, or nullopt when b_s + b_i >= 1 (never entangled).
std::optional<double> b_p_threshold(double b_s, double b_i);

// ---- nonclassicality ----------------------------------------------------

/// Nonclassical depth. Not clamped: classical beams give tau < 0.
double nonclassical_depth(const TwinBeamParams& params);

/// N = tau / (1 - 2 tau). Throws DomainError for tau >= 1/2.
double negativity_from_tau(double tau);

/// tau = N / (1 + 2 N). Throws DomainError for N <= -1/2, where the inverse
/// map is undefined.
double tau_from_negativity(double negativity);

// ---- dimensionality -----------------------------------------------------

/// K_ent = 2 N + 1 with the clamped negativity.
double entanglement_dimensionality(const TwinBeamParams& params);

/// R = 2 (b_p + b_noise) + 1 for the chosen field.
double participation_ratio(const TwinBeamParams& params, Field field);

/// Schmidt amplitudes c_0 .. c_{j_max} of the noiseless beam with b_p pairs.
std::vector<double> schmidt_coefficients(double b_p, int j_max);

/// K_ent rescaled so that it coincides with R_s for noiseless beams.
double modified_k_ent(const TwinBeamParams& params);

/// Fraction of degrees of freedom carrying entanglement, 2 K~_ent / (R_s + R_i).
double r_ent(const TwinBeamParams& params);

// ---- entropy ------------------------------------------------------------

/// Von Neumann entropy (nats) of a thermal mode with mean occupation T,
/// (1 + T) ln(1 + T) - T ln T, with 0 ln 0 = 0.
double thermal_entropy(double mean_photons);

/// Reduced-state entropy of one field of the beam.
double entropy(const TwinBeamParams& params, Field field);

/// Constant subtracted in entropy_from_r. kLnTwo is the correct one; kUnity
/// only exists so the verification suite can prove it detects a wrong
/// constant.
enum class EntropyOffset { kLnTwo, kUnity };

/// Entropy of a thermal mode expressed through its participation ratio r,
/// 0.5 [(r+1) ln(r+1) - (r-1) ln(r-1)] - ln 2. Throws DomainError for r < 1.
double entropy_from_r(double r, EntropyOffset offset = EntropyOffset::kLnTwo);

/// Evaluates every closed-form quantity at once.
QuantReport analyze(const TwinBeamParams& params);

}  // namespace twinbeam
